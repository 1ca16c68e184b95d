#ifndef SMT_MATRIX_HPP
#define SMT_MATRIX_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "smt/complex.hpp"

namespace smt {

// Element of SL_2(Z). Entries are arbitrary-precision integers: automorphs
// of indefinite forms carry Pell solutions, which get large quickly.
struct Mat2 {
    mpz_class a, b, c, d;

    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    Mat2(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {}

    mpz_class det() const { return a * d - b * c; }

    static Mat2 identity() { return {}; }
    static Mat2 T(long n = 1) { return {1, n, 0, 1}; }
    static Mat2 S() { return {0, -1, 1, 0}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    // Inverse assuming det = 1.
    Mat2 inverse() const { return {d, -b, -c, a}; }

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

    // Moebius action z -> (az+b)/(cz+d).
    Complex apply(const Complex& z) const {
        Complex num = Complex(Real(a)) * z + Complex(Real(b)) * Complex(1L);
        Complex den = Complex(Real(c)) * z + Complex(Real(d)) * Complex(1L);
        return num / den;
    }

    // Automorphy factor j(gamma, z) = cz + d.
    Complex j_factor(const Complex& z) const {
        return Complex(Real(c)) * z + Complex(Real(d)) * Complex(1L);
    }

    // Cusp image gamma(i infinity) = a/c as a reduced fraction; c = 0 means i infinity.
    std::pair<mpz_class, mpz_class> cusp() const {
        if (c == 0) return {1, 0};
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        mpz_class p = a / g, q = c / g;
        if (q < 0) { p = -p; q = -q; }
        return {p, q};
    }

    std::string str() const {
        return "[" + a.get_str() + "," + b.get_str() + ";" + c.get_str() + "," + d.get_str() + "]";
    }
};

// gamma = (a b; c d) with gamma(i inf) = p/q in lowest terms, q > 0.
// The canonical choice takes the smallest nonnegative d with pd == 1 (mod q).
Mat2 cusp_matrix(const mpz_class& p, const mpz_class& q);

}  // namespace smt

#endif
