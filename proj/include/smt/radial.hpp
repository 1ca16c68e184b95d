#ifndef SMT_RADIAL_HPP
#define SMT_RADIAL_HPP

#include <string>
#include <vector>

#include "smt/lreg.hpp"
#include "smt/traces.hpp"

namespace smt {

// Everything the radial-limit experiment produces: both sides of the
// identity, the t-schedule values, the extrapolated limit, and diagnostics.
struct RadialReport {
    mpz_class r_num, r_den;   // r = a/c
    Complex c_r;
    long D = 0;
    std::vector<Real> schedule;
    std::vector<Complex> lhs_values;
    Complex lhs_extrapolated;
    Complex rhs;
    Real residual;            // |extrapolated - rhs|
    Real tail_spec, tail_emp; // partial_H tail bounds at the smallest t
    bool trend_nonincreasing = true;
    std::string notes;
};

// c_r = e^{i pi/4} eps_a^3 (c/a) Tr_0(f) / sqrt(2c); requires gcd(a,c) = 1,
// c > 0, 4N | c.
Complex c_r_value(const TraceTable& tab, const mpz_class& a, const mpz_class& c, long level = 1);

// partial_H(r + it, D) + 2 c_r sqrt(1 + ct)/(ct).
Complex radial_lhs(const TraceTable& tab, const mpz_class& a, const mpz_class& c, const Real& t,
                   long D, long level = 1, Real* tail_spec = nullptr, Real* tail_emp = nullptr);

// -conj(L^reg_r(W(f), 1/2)) + c_r.
Complex radial_rhs(const TraceTable& tab, const FourierData& w, const mpz_class& a, const mpz_class& c,
                   long level = 1);

// Richardson extrapolation (leading sqrt-t error model) across the schedule.
RadialReport radial_residual(const TraceTable& tab, const FourierData& w, const mpz_class& a,
                             const mpz_class& c, const std::vector<Real>& schedule, long D,
                             long level = 1, int jobs = 1);

// Corollary-style variant: lhs built from psi(H(f))_{gamma^{-1}}(r + it),
// the slashed term evaluated at gamma^{-1}(r+it).
RadialReport period_limit_residual(const TraceTable& tab, const FourierData& w, const Mat2& gamma,
                                   const std::vector<Real>& schedule, long D, long level = 1,
                                   int jobs = 1);

}  // namespace smt

#endif
