#ifndef SMT_ARITH_HPP
#define SMT_ARITH_HPP

#include <gmpxx.h>

#include "smt/matrix.hpp"
#include "smt/roots.hpp"

namespace smt {

// epsilon_d = 1 for d = 1 (mod 4), i for d = 3 (mod 4); d must be odd.
RootU8 epsilon_d(const mpz_class& d);

// Extended Kronecker symbol (c/d) for odd d (and d = +-1 with any c):
// Legendre/Jacobi for positive odd d, and for negative odd d the value
// (c/|d|) when c > 0 and -(c/|d|) when c < 0; (0/+-1) = 1.
// For c = 0 and |d| != 1 the symbol is 0 (shared-factor convention).
int kronecker_ext(const mpz_class& c, const mpz_class& d);

// Theta multiplier chi_theta(gamma) = epsilon_d^{-1} (c/d), gamma in Gamma_0(4).
// Exact root of unity in {1, i, -1, -i}.
RootU8 chi_theta(const Mat2& gamma);

}  // namespace smt

#endif
