#include "smt/arith.hpp"

#include <stdexcept>

namespace smt {

RootU8 epsilon_d(const mpz_class& d) {
    if (mpz_even_p(d.get_mpz_t())) throw std::invalid_argument("epsilon_d: d must be odd");
    unsigned long m = mpz_class(((d % 4) + 4) % 4).get_ui();
    return m == 1 ? RootU8::one() : RootU8::i();
}

int kronecker_ext(const mpz_class& c, const mpz_class& d) {
    if (d == 1 || d == -1) return 1;
    if (mpz_even_p(d.get_mpz_t())) throw std::invalid_argument("kronecker_ext: d must be odd (or +-1)");
    // GMP's Kronecker symbol matches this extension on odd d: for d < 0 it
    // multiplies (c/|d|) by sign(c).
    return mpz_kronecker(c.get_mpz_t(), d.get_mpz_t());
}

RootU8 chi_theta(const Mat2& gamma) {
    if (gamma.det() != 1) throw std::invalid_argument("chi_theta: matrix not in SL_2(Z)");
    if (gamma.c % 4 != 0) throw std::invalid_argument("chi_theta: gamma not in Gamma_0(4)");
    int kr = kronecker_ext(gamma.c, gamma.d);
    if (kr == 0) throw std::invalid_argument("chi_theta: gcd(c,d) > 1");
    RootU8 e = epsilon_d(gamma.d).inverse();
    return kr == 1 ? e : e * RootU8::minus_one();
}

Mat2 cusp_matrix(const mpz_class& p, const mpz_class& q) {
    if (q == 0) throw std::invalid_argument("cusp_matrix: cusp at infinity has no finite matrix");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::invalid_argument("cusp_matrix: p/q not in lowest terms");
    if (q < 0) throw std::invalid_argument("cusp_matrix: q must be positive");
    // solve p*d - b*q = 1
    mpz_class dd, bb, gg;
    mpz_gcdext(gg.get_mpz_t(), dd.get_mpz_t(), bb.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    // gg = p*dd + q*bb = 1 -> b = -bb
    mpz_class d = dd % q;
    if (d < 0) d += q;
    mpz_class b = (p * d - 1) / q;
    Mat2 m(p, b, q, d);
    if (m.det() != 1) throw std::logic_error("cusp_matrix: determinant != 1");
    return m;
}

}  // namespace smt
