#include "smt/qseries.hpp"

#include <stdexcept>

namespace smt {

ZSeries zs_mul(const ZSeries& a, const ZSeries& b, std::size_t len) {
    ZSeries out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

ZSeries zs_pow(const ZSeries& a, unsigned e, std::size_t len) {
    ZSeries acc(1, 1);
    ZSeries base = a;
    while (e) {
        if (e & 1U) acc = zs_mul(acc, base, len);
        base = zs_mul(base, base, len);
        e >>= 1;
    }
    return acc;
}

ZSeries zs_inverse(const ZSeries& a, std::size_t len) {
    if (a.empty() || (a[0] != 1 && a[0] != -1)) throw std::invalid_argument("zs_inverse: leading coefficient must be a unit");
    ZSeries out(len, 0);
    out[0] = a[0];  // a0^{-1} = a0 for a0 = +-1
    for (std::size_t n = 1; n < len; ++n) {
        mpz_class s = 0;
        std::size_t kmax = std::min(n, a.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) s += a[k] * out[n - k];
        out[n] = -a[0] * s;
    }
    return out;
}

ZSeries eisenstein_e4(std::size_t len) {
    ZSeries out(len, 0);
    out[0] = 1;
    for (std::size_t d = 1; d < len; ++d) {
        mpz_class d3 = mpz_class(d) * d * d;
        for (std::size_t n = d; n < len; n += d) out[n] += 240 * d3;
    }
    return out;
}

ZSeries delta_over_q(std::size_t len) {
    // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all k in Z
    ZSeries euler(len, 0);
    euler[0] = 1;
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 >= static_cast<long>(len) && e2 >= static_cast<long>(len)) break;
        mpz_class sgn = (k % 2 == 0) ? 1 : -1;
        if (e1 < static_cast<long>(len)) euler[e1] += sgn;
        if (e2 < static_cast<long>(len)) euler[e2] += sgn;
    }
    return zs_pow(euler, 24, len);
}

ZSeries j1_coefficients(std::size_t len) {
    // j = E4^3 / Delta; with D = Delta/q, j = q^{-1} E4^3 / D.
    ZSeries e4 = eisenstein_e4(len);
    ZSeries num = zs_pow(e4, 3, len);
    ZSeries den_inv = zs_inverse(delta_over_q(len), len);
    ZSeries j = zs_mul(num, den_inv, len);  // j[k] = coefficient of q^{k-1}
    if (len > 1 && j[1] != 744) throw std::logic_error("j1_coefficients: j constant term != 744");
    j[1] -= 744;
    return j;
}

ZSeries theta_series(std::size_t len) {
    ZSeries out(len, 0);
    out[0] = 1;
    for (std::size_t n = 1; n * n < len; ++n) out[n * n] = 2;
    return out;
}

ZSeries theta3_series(std::size_t len) {
    ZSeries t = theta_series(len);
    return zs_pow(t, 3, len);
}

}  // namespace smt
