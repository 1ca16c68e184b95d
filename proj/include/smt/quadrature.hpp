#ifndef SMT_QUADRATURE_HPP
#define SMT_QUADRATURE_HPP

#include <functional>
#include <memory>
#include <vector>

#include "smt/complex.hpp"

namespace smt {

// Gauss-Legendre rule on [-1, 1] at the current working precision.
// Nodes/weights are cached per (n, precision).
struct GLRule {
    std::vector<Real> nodes, weights;
};

std::shared_ptr<const GLRule> gl_rule(int n);

using RealToComplex = std::function<Complex(const Real&)>;

// Single-panel Gauss-Legendre on [a, b].
Complex gl_integrate(const RealToComplex& f, const Real& a, const Real& b, int n);

// Adaptive bisection with a two-half refinement test; err_out (if non-null)
// accumulates the final refinement discrepancies.
Complex integrate_adaptive(const RealToComplex& f, const Real& a, const Real& b, const Real& tol,
                           int n = 32, int max_depth = 12, Real* err_out = nullptr);

// Fixed panels of length <= panel_len, each refined adaptively where the
// two-half check fails. The workhorse for long smooth ranges.
Complex integrate_panels(const RealToComplex& f, const Real& a, const Real& b, const Real& tol,
                         double panel_len, int n = 32, int max_depth = 10, Real* err_out = nullptr);

}  // namespace smt

#endif
