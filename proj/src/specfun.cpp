#include "smt/specfun.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "smt/quadrature.hpp"

namespace smt {

namespace {

bool is_real(const Complex& s) { return s.im.is_zero(); }

bool is_nonpos_int(const Complex& s) {
    if (!is_real(s)) return false;
    if (s.re > 0) return false;
    Real r = round_nearest(s.re);
    return (r == s.re);
}

// ---- Bernoulli numbers B_{2j} at working precision (cached) ----

std::mutex g_bern_mutex;
std::map<int, std::vector<Real>> g_bern;  // digits -> B_2, B_4, ...

const std::vector<Real>& bernoulli_list(int count) {
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    auto& v = g_bern[working_digits()];
    if (static_cast<int>(v.size()) < count) {
        v.clear();
        Real two_pi = 2L * pi();
        Real fact(2L);  // (2j)! running
        Real tp_pow = two_pi * two_pi;
        for (int j = 1; j <= count; ++j) {
            if (j > 1) {
                fact *= static_cast<long>(2 * j - 1);
                fact *= static_cast<long>(2 * j);
                tp_pow *= two_pi * two_pi;
            }
            Real zeta;
            mpfr_zeta_ui(zeta.raw(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
            Real b = 2L * fact * zeta / tp_pow;
            if (j % 2 == 0) b = -b;
            v.push_back(b);
        }
    }
    return v;
}

Complex log_gamma_stirling(const Complex& z) {
    // requires Re z large enough
    Complex lz = log(z);
    Complex acc = (z - Complex(Real(1L) / 2L)) * lz - z + Complex(log(2L * pi()) / 2L);
    const auto& bern = bernoulli_list(80);
    Complex zinv = Complex(1L) / z;
    Complex zpow = zinv;
    Complex z2 = zinv * zinv;
    Real tol = pow10(-(working_digits() + 6));
    for (int j = 1; j <= 80; ++j) {
        Complex term = zpow * (bern[j - 1] / static_cast<long>(2 * j * (2 * j - 1)));
        acc += term;
        if (abs(term) < tol) break;
        zpow = zpow * z2;
    }
    return acc;
}

Complex gamma_complex(const Complex& s) {
    // reflection to Re >= 1/2
    if (s.re < Real(1L) / 2L) {
        // Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
        Complex ps = s * pi();
        Complex sin_ps(sin(ps.re) * cosh(ps.im), cos(ps.re) * sinh(ps.im));
        if (sin_ps.is_zero()) throw PoleError("gamma: pole at nonpositive integer");
        return Complex(pi()) / (sin_ps * gamma_complex(Complex(1L) - s));
    }
    long shift = 0;
    Real target = max(Real(24L), Real(static_cast<long>(working_digits())) * Real("0.45"));
    Complex z = s;
    Complex prod(1L);
    while (z.re < target) {
        prod = prod * z;
        z = z + Complex(1L);
        ++shift;
        if (shift > 100000) throw std::logic_error("gamma: runaway shift");
    }
    Complex g = exp(log_gamma_stirling(z));
    return g / prod;
}

}  // namespace

Complex gamma_fn(const Complex& s) {
    if (is_real(s)) {
        if (is_nonpos_int(s)) throw PoleError("gamma: pole at nonpositive integer");
        return Complex(gamma_real(s.re));
    }
    return gamma_complex(s);
}

namespace {

// Lower series: gamma(s, x)/x^s = sum_n (-x)^n / (n! (s+n)).
Complex lower_series(const Complex& s, const Real& x) {
    Real tol = pow10(-(working_digits() + 8));
    Complex acc;
    Real xn(1L);  // (-x)^n / n!
    for (long n = 0; n < 100000; ++n) {
        Complex term = Complex(xn) / (s + Complex(n));
        acc += term;
        if (n > 1 && abs(term) < tol * (abs(acc) + Real(1L))) break;
        xn *= -x;
        xn /= (n + 1);
    }
    return acc;
}

// Continued fraction for Gamma(s, x), x > 0 moderately large (modified Lentz).
Complex upper_cf(const Complex& s, const Real& x) {
    Real tiny = pow10(-(working_digits() * 2 + 30));
    Real tol = pow10(-(working_digits() + 8));
    Complex b0 = Complex(x + 1L) - s;
    Complex C = b0.is_zero() ? Complex(tiny) : b0;
    Complex D;
    Complex f = C;
    for (long i = 1; i < 100000; ++i) {
        Complex ai = (s - Complex(i)) * Real(i);  // -i (i - s)
        Complex bi = Complex(x + static_cast<long>(2 * i + 1)) - s;
        D = bi + ai * D;
        if (D.is_zero()) D = Complex(tiny);
        C = bi + ai / C;
        if (C.is_zero()) C = Complex(tiny);
        D = Complex(1L) / D;
        Complex delta = C * D;
        f = f * delta;
        if (abs(delta - Complex(1L)) < tol) break;
    }
    return exp(Complex(-x)) * pow_branch(x, s) / f;
}

// Gamma(0, x) for x < 0 on the arg = +pi branch:
// -gamma_E - log|x| - i pi - sum_{n>=1} (-x)^n/(n n!).
Complex gamma0_negative(const Real& x) {
    Real tol = pow10(-(working_digits() + 8));
    Real acc;
    Real xn(1L);
    for (long n = 1; n < 100000; ++n) {
        xn *= -x;
        xn /= n;
        Real term = xn / n;
        acc += term;
        if (n > 1 && abs(term) < tol * (abs(acc) + Real(1L))) break;
    }
    return Complex(-euler_gamma() - log(-x) - acc, -pi());
}

}  // namespace

Complex inc_gamma(const Complex& s, const Real& x) {
    if (x.is_zero()) {
        if (!(s.re > 0)) throw PoleError("inc_gamma: x = 0 needs Re s > 0");
        return gamma_fn(s);
    }
    if (is_nonpos_int(s)) {
        // descend from Gamma(0, x) through Gamma(s+1,x) = s Gamma(s,x) + x^s e^{-x}
        Complex g = x > 0 ? Complex(exp_int(x)) : gamma0_negative(x);
        long m = -s.re.to_long();
        Complex ex = exp(Complex(-x));
        for (long j = 1; j <= m; ++j) {
            Complex sj(-j);
            g = (g - pow_branch(x, sj) * ex) / sj;
        }
        return g;
    }
    Real threshold = max(Real(10L), abs(Complex(s)) * Real("1.5") + 5L);
    if (x > threshold) return upper_cf(s, x);
    return gamma_fn(s) - pow_branch(x, s) * lower_series(s, x);
}

Complex A_func(const Real& x, const Real& y, const Complex& s) {
    if (y.is_zero()) return inc_gamma(s + Complex(1L), x);
    int P = working_digits();
    Real ln10("2.302585092994045684017991454684364207601101488628772976033");
    Real tail_len = Real(static_cast<long>(P + 10)) * ln10 + 16L;
    auto integrand = [&](const Real& t) -> Complex {
        return exp(Complex(-t)) * pow(Complex(t, y), s);
    };
    // Tail from X by parts: e^{-X} sum_j prod_{i<j}(s - i) (X + iy)^{s-j}.
    auto ibp_tail = [&](const Real& X) -> Complex {
        Complex ziy(X, y);
        Complex term = exp(Complex(-X)) * pow(ziy, s);
        Complex acc = term;
        Real tol = pow10(-(P + 6));
        Real prev = abs(term);
        for (long j = 0; j < 4000; ++j) {
            term = term * (s - Complex(j)) / ziy;
            Real m = abs(term);
            if (m > prev) break;  // asymptotic series turned
            acc += term;
            if (m < tol * (abs(acc) + pow10(-P))) break;
            prev = m;
        }
        return acc;
    };
    if (x * Real(1L) >= tail_len) return ibp_tail(x);
    Real X = x + tail_len;
    Real scale = x < 0 ? exp(-x) : Real(1L);
    Real tol = scale * pow10(-(P + 6));
    Complex body = integrate_panels(integrand, x, X, tol, 8.0, 24 + P / 2, 10);
    return body + ibp_tail(X);
}

Complex B_func(HalfInt k, const Real& x) {
    if (x.is_zero()) throw PoleError("B_func: x = 0");
    Complex one_minus_k(Real(1L) - k.value());
    return exp(Complex(-x)) * inc_gamma(one_minus_k, -2L * x);
}

Real exp_int(const Real& w) {
    if (w.is_zero()) throw PoleError("exp_int: w = 0");
    return -eint(-w);
}

}  // namespace smt
