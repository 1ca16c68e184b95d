#ifndef SMT_LREG_HPP
#define SMT_LREG_HPP

#include <map>
#include <string>

#include "smt/arith.hpp"
#include "smt/formspec.hpp"
#include "smt/matrix.hpp"
#include "smt/qseries.hpp"
#include "smt/roots.hpp"
#include "smt/specfun.hpp"
#include "smt/traces.hpp"

namespace smt {

// Weight-k form on Gamma_0(4N) with multiplier chi_theta^{2k}, given by its
// Fourier coefficients b(n) at infinity. growth_C/e^{growth_K sqrt n} bounds
// |b(n)| and drives series truncation.
struct FourierData {
    std::string label;
    HalfInt weight;
    long level4N = 4;
    long n_min = 0;
    long n_max = -1;
    std::map<long, Complex> coeffs;  // sparse; absent = 0 below n_max
    double growth_C = 1.0;
    double growth_K = 12.6;  // defaults to the pole-order-1 envelope 4 pi

    Complex coeff(long n) const {
        if (n < n_min) return Complex(0L);
        if (n > n_max) throw InsufficientData(label + ": b(" + std::to_string(n) + ") not tabulated", n);
        auto it = coeffs.find(n);
        return it == coeffs.end() ? Complex(0L) : it->second;
    }
    Real bound(long n) const { return Real::from_double(growth_C) * exp(Real::from_double(growth_K) * sqrt(Real(n))); }
};

// Fourier data of (c tau + d)^{-k} g(gamma tau) = sum b_gamma(n) e^{2 pi i (n + kappa) tau / lambda}.
struct CuspExpansion {
    Mat2 gamma;
    HalfInt weight;
    Real kappa;        // in [0, 1)
    long lambda = 1;
    long n_min = 0;
    long n_max = -1;
    std::map<long, Complex> coeffs;
    std::map<long, Real> errs;  // per-coefficient bounds (set by cuspexp)
    double growth_C = 1.0;
    double growth_K = 12.6;

    Complex coeff(long n) const {
        if (n < n_min) return Complex(0L);
        if (n > n_max) throw InsufficientData("cusp expansion: b_gamma(" + std::to_string(n) + ") not tabulated", n);
        auto it = coeffs.find(n);
        return it == coeffs.end() ? Complex(0L) : it->second;
    }
};

// b_gamma(n) = chi_theta^{2k}(gamma) b(n), kappa = 0, lambda = 1 for gamma
// in Gamma_0(4N).
CuspExpansion multiplier_expansion(const FourierData& g, const Mat2& gamma);

// W(f) = -1/2 sum conj(Tr^c_{d^2}) q^{-d^2} + 1/2 conj(Tr_0) + sum_{d<0} conj(Tr_d) q^{-d};
// weight 3/2 on Gamma_0(4N).
FourierData assemble_W(const TraceTable& tab, long level = 1);

// theta (k = 1/2) and theta^3 (k = 3/2) on Gamma_0(4), coefficients through n_max.
FourierData form_theta_data(long n_max);
FourierData form_theta3_data(long n_max);

// Regularized twisted L-function L^reg_r(g, s) at r = gamma(i inf), with the
// horocycle parameter t (t = 1 reproduces the defining series; the value is
// t-independent). gamma with c < 0 is replaced by -gamma.
Complex lreg_eval(const FourierData& g, const Mat2& gamma, const Complex& s, const Real& t);
Complex lreg_eval(const FourierData& g, const Mat2& gamma, const Complex& s);
// Explicit-expansion variant (cusp data from the FFT extractor).
Complex lreg_eval_at(const FourierData& g, const CuspExpansion& ce, const Complex& s, const Real& t);

// Gamma(s)(2pi)^{-s} L^reg_{gamma(inf)}(g,s)
//   - i^k c^k (c^2)^{-s} chi^{2k}(gamma) Gamma(k-s)(2pi)^{-(k-s)} L^reg_{gamma^{-1}(inf)}(g,k-s).
Complex lreg_funeq_residual(const FourierData& g, const Mat2& gamma, const Complex& s);

// Regularized Eichler integral int^reg_{[z1, i inf]} g(tau)(tau - conj z2)^s dtau
// as the closed A-kernel series; s != -1, Im z1 + Im z2 > 0.
Complex eichler_reg_series(const FourierData& g, const Complex& z1, const Complex& z2, const Complex& s);
// Same for a general cusp expansion (kappa/lambda aware).
Complex eichler_reg_series_exp(const CuspExpansion& h, const Complex& z1, const Complex& z2, const Complex& s);

// int^reg_{[z1, r]} g(tau)(tau - conj z2)^{k-2} dtau for r = gamma(i inf)
// via the chart change of the cusp-direction lemma.
Complex reg_integral_to_cusp(const FourierData& g, const Mat2& gamma, const Complex& z1, const Complex& z2);

// f^-(z) = -(-2i)^{-(k-1)} conj( int^reg_{[z, i inf]} g(tau)(tau - conj z)^{k-2} dtau ).
Complex fminus_from_shadow(const FourierData& g, const Complex& z);

// (f^- - f^-|_{2-k} gamma)(z) computed from the two-cusp regularized integral
// over [gamma^{-1}(i inf), i inf], split at the base point z1.
Complex period_function(const FourierData& g, const Mat2& gamma, const Complex& z, const Complex& z1);

}  // namespace smt

#endif
