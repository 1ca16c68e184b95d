#ifndef SMT_MODEVAL_HPP
#define SMT_MODEVAL_HPP

#include "smt/complex.hpp"
#include "smt/matrix.hpp"

namespace smt {

// All evaluators require Im z > 0 and throw std::domain_error otherwise.

// theta(z) = 1 + 2 sum q^{n^2}. Inversion-based argument reduction keeps
// the series fast at small heights.
Complex eval_theta(const Complex& z);

// Dedekind eta with full modular argument reduction (standard multiplier).
Complex eval_eta(const Complex& z);

// E_4 at a point already in (or near) the fundamental domain.
Complex eval_e4_reduced(const Complex& z);

// j_1 = j - 744 = E_4^3 / eta^24 - 744 after reduction into the SL_2(Z)
// fundamental domain.
Complex eval_j1(const Complex& z);

// Reduce z into the fundamental domain |Re| <= 1/2, |z| >= 1.
Complex fundamental_domain(const Complex& z);

}  // namespace smt

#endif
