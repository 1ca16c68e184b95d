#ifndef SMT_SPECFUN_HPP
#define SMT_SPECFUN_HPP

#include <stdexcept>

#include "smt/complex.hpp"
#include "smt/roots.hpp"

namespace smt {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Gamma(s) for complex s (Stirling with argument shift; reflection for
// Re s <= 1/2). Real s uses mpfr directly.
Complex gamma_fn(const Complex& s);

// Incomplete gamma Gamma(s, x) for real x. Negative x takes the analytic
// continuation along arg = +pi, i.e. x^s = |x|^s e^{i pi s}.
// x = 0 requires Re s > 0 (else PoleError).
Complex inc_gamma(const Complex& s, const Real& x);

// A(x, y, s) = int_x^inf e^{-t} (t + iy)^s dt; y = 0 falls back to the
// continued incomplete gamma Gamma(s+1, x).
Complex A_func(const Real& x, const Real& y, const Complex& s);

// B_k(x) = e^{-x} int_{-2x}^inf e^{-t} t^{-k} dt = e^{-x} Gamma(1-k, -2x), x != 0.
Complex B_func(HalfInt k, const Real& x);

// EI(w) = int_w^inf e^{-t} dt/t; principal value for w < 0. w != 0.
Real exp_int(const Real& w);

}  // namespace smt

#endif
