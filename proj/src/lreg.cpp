#include "smt/lreg.hpp"

#include <cmath>
#include <stdexcept>

namespace smt {

namespace {

Mat2 normalize_c_positive(const Mat2& gamma) {
    if (gamma.c == 0) throw std::invalid_argument("lreg: gamma must move i infinity");
    return gamma.c > 0 ? gamma : -gamma;
}

// envelope |Gamma(s,x)| <~ 2 e^{-x} max(x,1)^{Re s - 1} for x bounded away from 0
Real inc_gamma_envelope(const Real& res_minus_1, const Real& x) {
    Real base = max(x, Real(1L));
    return 2L * exp(res_minus_1 * log(base) - x);
}

}  // namespace

CuspExpansion multiplier_expansion(const FourierData& g, const Mat2& gamma) {
    if (gamma.c % (mpz_class(g.level4N)) != 0)
        throw std::invalid_argument("multiplier_expansion: gamma not in Gamma_0(4N)");
    CuspExpansion ce;
    ce.gamma = gamma;
    ce.weight = g.weight;
    ce.kappa = Real(0L);
    ce.lambda = 1;
    ce.n_min = g.n_min;
    ce.n_max = g.n_max;
    ce.growth_C = g.growth_C;
    ce.growth_K = g.growth_K;
    Complex mult = chi_theta(gamma).pow(g.weight.twice).value();
    for (const auto& [n, b] : g.coeffs) ce.coeffs[n] = mult * b;
    return ce;
}

FourierData assemble_W(const TraceTable& tab, long level) {
    FourierData w;
    w.label = "W(" + tab.form + ")";
    w.weight = HalfInt(3);
    w.level4N = 4 * level;
    if (!tab.zero) throw InsufficientData("assemble_W: Tr_0 missing", 0);
    long dmax_comp = 0;
    for (const auto& [d, v] : tab.comp) {
        if (!v.is_zero()) {
            w.coeffs[-d * d] = conj(v) * (Real(-1L) / 2L);
            dmax_comp = std::max(dmax_comp, d);
        }
    }
    w.n_min = -dmax_comp * dmax_comp;
    w.coeffs[0] = conj(tab.zero->value) / 2L;
    long top = 0;
    for (const auto& [absd, e] : tab.neg) {
        w.coeffs[absd] = conj(e.value);
        top = std::max(top, absd);
    }
    w.n_max = top;
    // calibrate |b(n)| <= C e^{K sqrt n} from the data (x10 safety)
    double K = 0.0;
    double l0 = 0.0, s0 = 0.0;
    bool first = true;
    for (const auto& [n, b] : w.coeffs) {
        if (n <= 0) continue;
        double l = std::log(std::max(1e-30, abs(b).to_double()));
        double sn = std::sqrt(static_cast<double>(n));
        if (first) {
            l0 = l; s0 = sn; first = false;
            continue;
        }
        if (sn > s0 + 1e-9) K = std::max(K, (l - l0) / (sn - s0));
    }
    double C = 1e-30;
    for (const auto& [n, b] : w.coeffs)
        if (n > 0) C = std::max(C, abs(b).to_double() * std::exp(-K * std::sqrt(static_cast<double>(n))));
    w.growth_C = C * 10.0;
    w.growth_K = K;
    return w;
}

namespace {

FourierData theta_like(const char* label, int twice_k, const ZSeries& series) {
    FourierData g;
    g.label = label;
    g.weight = HalfInt(twice_k);
    g.level4N = 4;
    g.n_min = 0;
    g.n_max = static_cast<long>(series.size()) - 1;
    double mx = 1.0;
    for (std::size_t n = 0; n < series.size(); ++n) {
        if (series[n] != 0) g.coeffs[static_cast<long>(n)] = Complex(Real(series[n]));
        mx = std::max(mx, std::abs(series[n].get_d()));
    }
    g.growth_C = mx * 10.0;
    g.growth_K = 0.5;  // generous cover for the polynomial growth of r_1, r_3
    return g;
}

}  // namespace

FourierData form_theta_data(long n_max) {
    return theta_like("theta", 1, theta_series(static_cast<std::size_t>(n_max) + 1));
}

FourierData form_theta3_data(long n_max) {
    return theta_like("theta3", 3, theta3_series(static_cast<std::size_t>(n_max) + 1));
}

Complex lreg_eval_at(const FourierData& g, const CuspExpansion& ce, const Complex& s, const Real& t) {
    HalfInt k = g.weight;
    Complex ks = Complex(k.value()) - s;
    if (abs(s) < pow10(-30) || abs(ks) < pow10(-30)) throw PoleError("lreg_eval: s in {0, k}");
    Mat2 gamma = normalize_c_positive(ce.gamma);
    Real c(gamma.c), dmat(gamma.d);
    Real two_pi = 2L * pi();
    Complex inv_gamma_s = Complex(1L) / gamma_fn(s);
    Real eps = pow10(-(working_digits() + 5));

    // first series: sum b(n) e^{2 pi i n r} n^{-s} Gamma(s, 2 pi n t) / Gamma(s)
    Real r = Real(gamma.a) / c;
    Complex sum1;
    for (long n = g.n_min; ; ++n) {
        if (n == 0) continue;
        if (n > 0) {
            Real env = g.bound(n) * inc_gamma_envelope(s.re - 1L, two_pi * Real(n) * t) *
                       exp(-s.re * log(Real(n)));
            if (n > 2 && env < eps) break;
        }
        Complex b = g.coeff(n);
        if (b.is_zero()) continue;
        Complex term = b * cis(two_pi * Real(n) * r) * pow_branch(Real(n), -s) *
                       inc_gamma(s, two_pi * Real(n) * t);
        sum1 += term;
    }
    sum1 = sum1 * inv_gamma_s;

    // second series over the gamma-chart expansion
    Real lam(ce.lambda);
    Complex pref = k.i_power().value() * exp((s * 2L - Complex(k.value())) * Complex(log(two_pi))) *
                   exp((Complex(k.value()) - s) * Complex(log(c * c))) * inv_gamma_s /
                   Complex(pow(c, k.value()));
    Complex sum2;
    for (long n = ce.n_min; ; ++n) {
        Real nu = (Real(n) + ce.kappa) / lam;
        if (nu.is_zero()) continue;
        if (n > 0) {
            Real env = Real::from_double(ce.growth_C) * exp(Real::from_double(ce.growth_K) * sqrt(Real(n))) *
                       inc_gamma_envelope(ks.re - 1L, two_pi * nu / (c * c * t)) *
                       exp(-ks.re * log(nu));
            if (n > 2 && env * abs(pref) < eps) break;
        }
        Complex b = ce.coeff(n);
        if (b.is_zero()) continue;
        Complex term = b * cis(-two_pi * nu * dmat / c) * pow_branch(nu, -ks) *
                       inc_gamma(ks, two_pi * nu / (c * c * t));
        sum2 += term;
    }
    sum2 = sum2 * pref;

    // constant-term pieces
    Complex poles;
    Complex b0 = g.n_min <= 0 ? g.coeff(0) : Complex(0L);
    if (!b0.is_zero()) {
        // -(2 pi)^s t^s b(0) / (s Gamma(s))
        poles -= exp(s * Complex(log(two_pi * t))) * b0 / s * inv_gamma_s;
    }
    if (ce.kappa.is_zero() && ce.n_min <= 0) {
        Complex bg0 = ce.coeff(0);
        if (!bg0.is_zero()) {
            Complex tpow = exp((s - Complex(k.value())) * Complex(log(t)));
            poles -= k.i_power().value() * exp(s * Complex(log(two_pi))) * tpow * bg0 /
                     (Complex(pow(c, k.value())) * ks) * inv_gamma_s;
        }
    }
    return sum1 + sum2 + poles;
}

Complex lreg_eval(const FourierData& g, const Mat2& gamma, const Complex& s, const Real& t) {
    Mat2 gn = normalize_c_positive(gamma);
    return lreg_eval_at(g, multiplier_expansion(g, gn), s, t);
}

Complex lreg_eval(const FourierData& g, const Mat2& gamma, const Complex& s) {
    return lreg_eval(g, gamma, s, Real(1L));
}

Complex lreg_funeq_residual(const FourierData& g, const Mat2& gamma, const Complex& s) {
    Mat2 gn = normalize_c_positive(gamma);
    HalfInt k = g.weight;
    Complex ks = Complex(k.value()) - s;
    Real two_pi = 2L * pi();
    Real c(gn.c);
    Complex lhs = gamma_fn(s) * exp(-s * Complex(log(two_pi))) * lreg_eval(g, gn, s);
    Mat2 gi = gn.inverse();
    Complex rhs = k.i_power().value() * Complex(pow(c, k.value())) * exp(-s * Complex(log(c * c))) *
                  chi_theta(gn).pow(k.twice).value() * gamma_fn(ks) * exp(-ks * Complex(log(two_pi))) *
                  lreg_eval(g, gi, ks);
    return lhs - rhs;
}

namespace {

Complex eichler_series_core(long n_min, long n_max, const std::function<Complex(long)>& coeff,
                            const Real& kappa, long lambda, double growth_C, double growth_K,
                            const Complex& z1, const Complex& z2, const Complex& s) {
    if (!(z1.im + z2.im > 0)) throw std::domain_error("eichler series: Im z1 + Im z2 must be positive");
    Complex s1 = s + Complex(1L);
    if (abs(s1) < pow10(-30)) throw PoleError("eichler series: s = -1");
    Real two_pi = 2L * pi();
    Real lam(lambda);
    Real x1 = z1.re, y1 = z1.im, x2 = z2.re, y2 = z2.im;
    Real eps = pow10(-(working_digits() + 5));
    // (i / 2 pi)^{s+1}
    Complex pref = exp(s1 * Complex(-log(two_pi), pi() / 2L));
    Complex acc;
    for (long n = n_min; ; ++n) {
        Real nu = (Real(n) + kappa) / lam;
        if (nu.is_zero()) {
            // constant mode: -b(0) i^{s+1}(y1 + y2 + i(x2 - x1))^{s+1}/(s+1),
            // pre-divided by pref which multiplies the whole sum below
            Complex b0 = coeff(0);
            if (!b0.is_zero()) {
                Complex base(y1 + y2, x2 - x1);
                Complex ipow = exp(s1 * Complex(Real(0L), pi() / 2L));
                acc -= b0 * ipow * pow(base, s1) / s1 / pref;
            }
            continue;
        }
        if (n > 0) {
            Real env = Real::from_double(growth_C) * exp(Real::from_double(growth_K) * sqrt(Real(n))) *
                       exp(-two_pi * nu * y1) * exp(-s1.re * log(nu));
            if (n > 2 && env < eps) break;
        }
        if (n > n_max) throw InsufficientData("eichler series: coefficients exhausted", n);
        Complex b = coeff(n);
        if (b.is_zero()) continue;
        Complex term = b * pow_branch(nu, -s1) * cis(two_pi * nu * x1) * Complex(exp(two_pi * nu * y2)) *
                       A_func(two_pi * nu * (y1 + y2), two_pi * nu * (x2 - x1), s);
        acc += term;
    }
    return pref * acc;
}

}  // namespace

Complex eichler_reg_series(const FourierData& g, const Complex& z1, const Complex& z2, const Complex& s) {
    return eichler_series_core(
        g.n_min, g.n_max, [&](long n) { return g.coeff(n); }, Real(0L), 1, g.growth_C, g.growth_K, z1,
        z2, s);
}

Complex eichler_reg_series_exp(const CuspExpansion& h, const Complex& z1, const Complex& z2, const Complex& s) {
    return eichler_series_core(
        h.n_min, h.n_max, [&](long n) { return h.coeff(n); }, h.kappa, h.lambda, h.growth_C, h.growth_K,
        z1, z2, s);
}

Complex reg_integral_to_cusp(const FourierData& g, const Mat2& gamma, const Complex& z1, const Complex& z2) {
    Mat2 gn = normalize_c_positive(gamma);
    HalfInt k = g.weight;
    Complex km2 = Complex(k.value()) - Complex(2L);
    CuspExpansion ce = multiplier_expansion(g, gn);
    Mat2 gi = gn.inverse();
    Complex w1 = gi.apply(z1), w2 = gi.apply(z2);
    // (-c conj(z2) + a)^{k-2}
    Complex front = pow(Complex(Real(gn.a)) - Complex(Real(gn.c)) * conj(z2), km2);
    return front * eichler_series_core(
                       ce.n_min, ce.n_max, [&](long n) { return ce.coeff(n); }, ce.kappa, ce.lambda,
                       ce.growth_C, ce.growth_K, w1, w2, km2);
}

Complex fminus_from_shadow(const FourierData& g, const Complex& z) {
    if (!(z.im > 0)) throw std::domain_error("fminus_from_shadow: Im z must be positive");
    HalfInt k = g.weight;
    Complex km2 = Complex(k.value()) - Complex(2L);
    Complex series = eichler_reg_series(g, z, z, km2);
    // -(-2i)^{-(k-1)}: -2i has arg -pi/2
    Complex m2i_pow = exp((Complex(1L) - Complex(k.value())) * Complex(log(Real(2L)), -pi() / 2L));
    return -m2i_pow * conj(series);
}

Complex period_function(const FourierData& g, const Mat2& gamma, const Complex& z, const Complex& z1) {
    if (!(z.im > 0)) throw std::domain_error("period_function: Im z must be positive");
    HalfInt k = g.weight;
    Complex km2 = Complex(k.value()) - Complex(2L);
    if (gamma.c == 0) return Complex(0L);  // both endpoints at i infinity
    Mat2 gi = gamma.inverse();
    Complex piece_inf = eichler_reg_series(g, z1, z, km2);
    Complex piece_cusp = reg_integral_to_cusp(g, gi, z1, z);
    Complex integral = piece_inf - piece_cusp;
    Complex m2i_pow = exp((Complex(1L) - Complex(k.value())) * Complex(log(Real(2L)), -pi() / 2L));
    return -m2i_pow * conj(integral);
}

}  // namespace smt
