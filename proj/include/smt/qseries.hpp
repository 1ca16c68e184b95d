#ifndef SMT_QSERIES_HPP
#define SMT_QSERIES_HPP

#include <gmpxx.h>

#include <vector>

namespace smt {

using ZSeries = std::vector<mpz_class>;  // coefficients of q^0, q^1, ...

ZSeries zs_mul(const ZSeries& a, const ZSeries& b, std::size_t len);
ZSeries zs_pow(const ZSeries& a, unsigned e, std::size_t len);
// b with a*b = 1 + O(q^len); requires a[0] = +-1.
ZSeries zs_inverse(const ZSeries& a, std::size_t len);

// E_4 = 1 + 240 sum sigma_3(n) q^n.
ZSeries eisenstein_e4(std::size_t len);
// Delta / q = prod (1 - q^n)^24 (via the pentagonal-number series).
ZSeries delta_over_q(std::size_t len);
// Coefficients c(n) of j_1 = j - 744 for n = -1..len-2; returned with
// offset: out[k] = c(k - 1). c(-1) = 1, c(0) = 0, c(1) = 196884, ...
ZSeries j1_coefficients(std::size_t len);

// theta = sum_{n in Z} q^{n^2}: r1(n) coefficients (1, 2, 0, 0, 2, ...).
ZSeries theta_series(std::size_t len);
// theta^3: r3(n) = #{(a,b,c) : a^2+b^2+c^2 = n}.
ZSeries theta3_series(std::size_t len);

}  // namespace smt

#endif
