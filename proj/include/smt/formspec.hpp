#ifndef SMT_FORMSPEC_HPP
#define SMT_FORMSPEC_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smt/complex.hpp"
#include "smt/qseries.hpp"
#include "smt/roots.hpp"

namespace smt {

// Raised when a computation needs coefficient or trace data beyond what a
// table holds; `needed` names the first missing index.
struct InsufficientData : std::runtime_error {
    long needed;
    InsufficientData(const std::string& msg, long needed_) : std::runtime_error(msg), needed(needed_) {}
};

// A weakly holomorphic modular function on Gamma_0(N) given by its Fourier
// coefficients at infinity plus a point evaluator on H. Immutable after
// construction; safe to share across threads.
struct FormSpec {
    std::string label;
    long level = 1;
    long n_min = 0;
    long n_max = -1;                      // coefficients available on [n_min, n_max]
    ZSeries coeffs;                       // integer coefficients, index n - n_min
    std::function<Complex(const Complex&)> eval;

    Complex coeff(long n) const { return Complex(Real(coeff_int(n))); }
    const mpz_class& coeff_int(long n) const {
        static const mpz_class zero = 0;
        if (n < n_min || coeffs.empty()) return zero;
        if (n > n_max) throw InsufficientData(label + ": coefficient a(" + std::to_string(n) + ") not tabulated", n);
        return coeffs[static_cast<std::size_t>(n - n_min)];
    }
};

// j_1 = j - 744 with coefficients tabulated through q^{n_max}.
FormSpec form_j1(long n_max);

// The zero function (all coefficients vanish).
FormSpec form_zero();

}  // namespace smt

#endif
