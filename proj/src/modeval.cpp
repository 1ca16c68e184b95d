#include "smt/modeval.hpp"

#include <stdexcept>

namespace smt {

namespace {

void require_upper(const Complex& z, const char* who) {
    if (!(z.im > 0)) throw std::domain_error(std::string(who) + ": Im z must be positive");
}

// q = e^{2 pi i z}
Complex nome(const Complex& z) { return exp(i_times(z) * (2L * pi())); }

// 1 + 2 sum_{n>=1} q^{n^2}; needs |q| bounded away from 1.
Complex theta_direct(const Complex& z) {
    Complex q = nome(z);
    Real tol = pow10(-(working_digits() + 6));
    Complex acc(1L);
    Complex qn(1L);      // q^{n^2}
    Complex qodd = q;    // q^{2n+1}
    Complex q2 = q * q;
    for (long n = 1; n < 100000; ++n) {
        qn = qn * qodd;  // q^{n^2} = q^{(n-1)^2} * q^{2n-1}
        qodd = qodd * q2;
        acc += qn * 2L;
        if (abs(qn) < tol) break;
    }
    return acc;
}

// sum_{n in Z} e^{2 pi i (n+1/2)^2 W}, W high in the upper half plane.
Complex theta2_direct(const Complex& W) {
    Real tol = pow10(-(working_digits() + 6));
    Complex E = exp(i_times(W) * (2L * pi()));
    Complex E2 = E * E;
    Complex quarter = exp(i_times(W) * (pi() / 2L));  // E^{1/4}
    Complex acc;
    Complex en = quarter;        // E^{n^2+n+1/4} at n = 0
    Complex ratio = E2;          // E^{2n+2} at n = 0
    for (long n = 0; n < 100000; ++n) {
        acc += en * 2L;
        if (abs(en) < tol) break;
        en = en * ratio;
        ratio = ratio * E2;
    }
    return acc;
}

}  // namespace

Complex eval_theta(const Complex& z) {
    require_upper(z, "eval_theta");
    Complex w = z;
    Complex factor(1L);
    Real ylow = Real("0.25");
    Real band = Real(1L) / 4L - Real("0.02");
    for (int iter = 0; iter < 200000; ++iter) {
        // period 1: drop the integer part of Re
        Real shift = round_nearest(w.re);
        w.re -= shift;
        if (w.im >= ylow) return factor * theta_direct(w);
        if (abs2(w) < band) {
            // theta(z) = (2z/i)^{-1/2} theta(-1/(4z)), 2z/i = (2 Im z, -2 Re z)
            Complex two_z_over_i(2L * w.im, -2L * w.re);
            factor = factor * pow(two_z_over_i, Complex(Real(-1L) / 2L));
            w = Complex(-1L) / (w * 4L);
            continue;
        }
        // near the cusp 1/2: theta(z) = theta_4(v), v = z -+ 1/2, and
        // theta_4(v) = (2v/i)^{-1/2} sum_n e^{2 pi i (n+1/2)^2 (-1/(4v))}
        Complex v = w;
        v.re = w.re.sign() >= 0 ? w.re - Real(1L) / 2L : w.re + Real(1L) / 2L;
        Complex two_v_over_i(2L * v.im, -2L * v.re);
        Complex W = Complex(-1L) / (v * 4L);
        return factor * pow(two_v_over_i, Complex(Real(-1L) / 2L)) * theta2_direct(W);
    }
    throw std::logic_error("eval_theta: reduction did not terminate");
}

Complex fundamental_domain(const Complex& z) {
    require_upper(z, "fundamental_domain");
    Complex w = z;
    Real one(1L);
    Real eps = pow10(-(working_digits() - 5));
    for (int iter = 0; iter < 100000; ++iter) {
        Real shift = round_nearest(w.re);
        w.re -= shift;
        Real n2 = abs2(w);
        if (n2 < one - eps) {
            w = Complex(-1L) / w;
            continue;
        }
        return w;
    }
    throw std::logic_error("fundamental_domain: did not terminate");
}

namespace {

// eta at a point with decent height, no reduction: q^{1/24} prod (1 - q^n).
Complex eta_direct(const Complex& z) {
    Complex q = nome(z);
    Real tol = pow10(-(working_digits() + 6));
    Complex prod(1L);
    Complex qn = q;
    for (long n = 1; n < 100000; ++n) {
        prod = prod * (Complex(1L) - qn);
        if (abs(qn) < tol) break;
        qn = qn * q;
    }
    Complex q24 = exp(i_times(z) * (2L * pi()) / 24L);
    return q24 * prod;
}

}  // namespace

Complex eval_eta(const Complex& z) {
    require_upper(z, "eval_eta");
    Complex w = z;
    Complex factor(1L);
    Real eps = pow10(-(working_digits() - 5));
    Real pi_12 = pi() / 12L;
    for (int iter = 0; iter < 100000; ++iter) {
        Real shift = round_nearest(w.re);
        if (!shift.is_zero()) {
            // eta(w) = e^{i pi m / 12} eta(w - m) with m = shift
            w.re -= shift;
            factor = factor * cis(pi_12 * shift);
        }
        if (abs2(w) < Real(1L) - eps) {
            // w = -1/w' for w' = -1/w, and eta(-1/w') = sqrt(-i w') eta(w')
            Complex wp = Complex(-1L) / w;
            factor = factor * sqrt(Complex(wp.im, -wp.re));
            w = wp;
            continue;
        }
        // |x| <= 1/2 and |w| >= 1 give Im w >= sqrt(3)/2
        return factor * eta_direct(w);
    }
    throw std::logic_error("eval_eta: reduction did not terminate");
}

Complex eval_e4_reduced(const Complex& z) {
    Complex q = nome(z);
    Real tol = pow10(-(working_digits() + 6));
    Complex acc(1L);
    Complex qn(1L);
    for (long n = 1; n < 100000; ++n) {
        qn = qn * q;
        // 240 sigma_3 via the Lambert form: 240 sum n^3 q^n / (1 - q^n)
        Complex term = Complex(Real(static_cast<long>(n) * n * n * 240L)) * qn / (Complex(1L) - qn);
        acc += term;
        if (abs(qn) * Real(static_cast<long>(n) * n * n * 240L) < tol) break;
    }
    return acc;
}

Complex eval_j1(const Complex& z) {
    require_upper(z, "eval_j1");
    Complex w = fundamental_domain(z);
    Complex e4 = eval_e4_reduced(w);
    Complex eta = eta_direct(w);
    Complex eta24 = pow_int(eta, 24);
    return e4 * e4 * e4 / eta24 - Complex(744L);
}

}  // namespace smt
