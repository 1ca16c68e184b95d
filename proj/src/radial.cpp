#include "smt/radial.hpp"

#include <stdexcept>

#include "smt/parallel.hpp"

namespace smt {

Complex c_r_value(const TraceTable& tab, const mpz_class& a, const mpz_class& c, long level) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    if (g != 1) throw std::invalid_argument("c_r: need gcd(a, c) = 1");
    if (c <= 0) throw std::invalid_argument("c_r: need c > 0");
    if (c % (4 * level) != 0) throw std::invalid_argument("c_r: need 4N | c");
    if (!tab.zero) throw InsufficientData("c_r: Tr_0 missing", 0);
    RootU8 phase = RootU8::eighth() * epsilon_d(a).pow(3);
    int kr = kronecker_ext(c, a);
    Complex v = phase.value() * tab.zero->value / sqrt(2L * Real(c));
    return kr == 1 ? v : (kr == -1 ? -v : Complex(0L));
}

namespace {

Complex divergent_term(const Complex& c_r, const Real& c, const Real& t) {
    return c_r * (2L * sqrt(1L + c * t) / (c * t));
}

}  // namespace

Complex radial_lhs(const TraceTable& tab, const mpz_class& a, const mpz_class& c, const Real& t,
                   long D, long level, Real* tail_spec, Real* tail_emp) {
    if (!(t > 0)) throw std::invalid_argument("radial_lhs: need t > 0");
    Complex cr = c_r_value(tab, a, c, level);
    Real cc(c);
    Complex z(Real(a) / cc, t);
    Complex h = partial_H(tab, z, D, tail_spec, tail_emp);
    return h + divergent_term(cr, cc, t);
}

Complex radial_rhs(const TraceTable& tab, const FourierData& w, const mpz_class& a, const mpz_class& c,
                   long level) {
    Complex cr = c_r_value(tab, a, c, level);
    Mat2 gamma = cusp_matrix(a, c);
    Complex l = lreg_eval(w, gamma, Complex(Real(1L) / 2L));
    return -conj(l) + cr;
}

namespace {

RadialReport assemble_report(const TraceTable& tab, const FourierData& w, const mpz_class& a,
                             const mpz_class& c, const std::vector<Real>& schedule, long D, long level,
                             const std::vector<Complex>& lhs_vals, const Real& tail_spec,
                             const Real& tail_emp) {
    RadialReport rep;
    rep.r_num = a;
    rep.r_den = c;
    rep.D = D;
    rep.schedule = schedule;
    rep.lhs_values = lhs_vals;
    rep.c_r = c_r_value(tab, a, c, level);
    rep.rhs = radial_rhs(tab, w, a, c, level);
    rep.tail_spec = tail_spec;
    rep.tail_emp = tail_emp;
    // Richardson step on the last pair assuming lhs(t) = L + B sqrt(t)
    std::size_t n = lhs_vals.size();
    if (n >= 2) {
        Real ratio = sqrt(schedule[n - 1] / schedule[n - 2]);
        rep.lhs_extrapolated = (lhs_vals[n - 1] - lhs_vals[n - 2] * ratio) / (1L - ratio);
    } else {
        rep.lhs_extrapolated = lhs_vals.back();
    }
    rep.residual = abs(rep.lhs_extrapolated - rep.rhs);
    Real prev;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        Real dist = abs(lhs_vals[i] - rep.rhs);
        if (!first && dist > prev) {
            rep.trend_nonincreasing = false;
            rep.notes += "|lhs - rhs| increased at t = " + rep.schedule[i].str(3) + "; ";
        }
        prev = dist;
        first = false;
    }
    return rep;
}

}  // namespace

RadialReport radial_residual(const TraceTable& tab, const FourierData& w, const mpz_class& a,
                             const mpz_class& c, const std::vector<Real>& schedule, long D, long level,
                             int jobs) {
    if (schedule.empty()) throw std::invalid_argument("radial_residual: empty schedule");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i] < schedule[i - 1])) throw std::invalid_argument("radial_residual: schedule must decrease");
    std::vector<Complex> lhs_vals(schedule.size());
    Real tail_spec, tail_emp;
    int digits = working_digits();
    parallel_for(schedule.size(), jobs, [&](std::size_t i) {
        PrecisionGuard guard(digits);
        Real ts, te;
        lhs_vals[i] = radial_lhs(tab, a, c, schedule[i], D, level, &ts, &te);
        if (i == schedule.size() - 1) {
            tail_spec = ts;
            tail_emp = te;
        }
    });
    return assemble_report(tab, w, a, c, schedule, D, level, lhs_vals, tail_spec, tail_emp);
}

RadialReport period_limit_residual(const TraceTable& tab, const FourierData& w, const Mat2& gamma,
                                   const std::vector<Real>& schedule, long D, long level, int jobs) {
    if (gamma.c <= 0) throw std::invalid_argument("period_limit_residual: need c > 0");
    auto [a, c] = gamma.cusp();
    Complex cr = c_r_value(tab, a, c, level);
    Real cc(c);
    Mat2 gi = gamma.inverse();
    RootU8 chi_conj = chi_theta(gi).conjugate();
    std::vector<Complex> lhs_vals(schedule.size());
    Real tail_spec, tail_emp;
    int digits = working_digits();
    parallel_for(schedule.size(), jobs, [&](std::size_t i) {
        PrecisionGuard guard(digits);
        const Real& t = schedule[i];
        Complex z(Real(a) / cc, t);
        Real ts, te;
        Complex h = partial_H(tab, z, D, &ts, &te);
        // (H|_{1/2} gamma^{-1})(z) = conj(chi(gi)) j(gi, z)^{-1/2} H(gi z)
        Complex jfac = gi.j_factor(z);
        Complex slashed = chi_conj.value() * pow(jfac, Complex(Real(-1L) / 2L)) * partial_H(tab, gi.apply(z), D);
        lhs_vals[i] = h - slashed + divergent_term(cr, cc, t);
        if (i == schedule.size() - 1) {
            tail_spec = ts;
            tail_emp = te;
        }
    });
    RadialReport rep = assemble_report(tab, w, a, c, schedule, D, level, lhs_vals, tail_spec, tail_emp);
    rep.notes = "period-function pipeline; " + rep.notes;
    return rep;
}

}  // namespace smt
