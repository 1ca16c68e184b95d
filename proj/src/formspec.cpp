#include "smt/formspec.hpp"

#include "smt/modeval.hpp"

namespace smt {

FormSpec form_j1(long n_max) {
    FormSpec f;
    f.label = "j1";
    f.level = 1;
    f.n_min = -1;
    f.n_max = n_max;
    f.coeffs = j1_coefficients(static_cast<std::size_t>(n_max + 2));
    f.eval = [](const Complex& z) { return eval_j1(z); };
    return f;
}

FormSpec form_zero() {
    FormSpec f;
    f.label = "zero";
    f.n_min = 0;
    f.n_max = 1000000000L;
    f.eval = [](const Complex&) { return Complex(0L); };
    return f;
}

}  // namespace smt
