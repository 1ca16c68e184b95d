#ifndef SMT_CUSPEXP_HPP
#define SMT_CUSPEXP_HPP

#include <functional>

#include "smt/lreg.hpp"

namespace smt {

struct DetectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Evaluator = std::function<Complex(const Complex&)>;

struct CuspExpandOpts {
    double y0 = 0.5;        // sampling height
    long samples = 1024;    // power of two, >= 4x coefficient count
    long lambda_bound = 16; // candidate periods 1..bound (4N * 4 at level 1)
    double drift_tol = 1e-8;
};

// Samples h(x + i y0) = (c tau + d)^{-k} g(gamma tau) over one period,
// detects (lambda, kappa) and extracts b_gamma(n) for n in
// [n_min, n_min + n_count) by discrete Fourier analysis; errs holds the
// aliasing bound per coefficient.
CuspExpansion expand_at_cusp(const Evaluator& g, HalfInt k, const Mat2& gamma, long n_min,
                             long n_count, const CuspExpandOpts& opts = {});

// Resynthesize h on the sampling horocycle from an expansion (round-trip check).
Complex synthesize(const CuspExpansion& ce, const Complex& tau);

}  // namespace smt

#endif
