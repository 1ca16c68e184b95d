#ifndef SMT_COMPLEX_HPP
#define SMT_COMPLEX_HPP

#include <string>

#include "smt/real.hpp"

namespace smt {

// Complex numbers over Real. Every multivalued operation (arg, log, pow,
// sqrt) uses the branch arg(z) in (-pi, pi]: points on the negative real
// axis take arg = +pi, never -pi.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im() {}
    explicit Complex(long n) : re(n), im() {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    std::string str(int digits = 0) const { return re.str(digits) + " + " + im.str(digits) + "i"; }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return sqrt(abs2(z)); }

// arg in (-pi, pi]; exact zero imaginary part is treated as +0.
inline Real arg(const Complex& z) {
    if (z.im.is_zero()) return z.re.sign() < 0 ? pi() : Real(0L);
    return atan2(z.im, z.re);
}

inline Complex i_times(const Complex& z) { return {-z.im, z.re}; }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Complex log(const Complex& z) { return {log(abs(z)) * 1L, arg(z)}; }

inline Complex pow_int(Complex base, long n);

// Principal square root, arg(z)/2 in (-pi/2, pi/2]; computed from |z|
// directly, no exp/log round trip.
inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return Complex(sqrt(z.re));
        return Complex(Real(0L), sqrt(-z.re));  // arg = +pi halves to +pi/2
    }
    Real r = abs(z);
    if (z.re.sign() >= 0) {
        Real u = sqrt((r + z.re) / 2L);
        return {u, z.im / (2L * u)};
    }
    Real v = sqrt((r - z.re) / 2L);
    if (z.im.sign() < 0) v = -v;
    return {z.im / (2L * v), v};
}

// Principal power z^s = exp(s log z), z != 0; real half-integer exponents
// take the sqrt/integer-power shortcut (same branch).
inline Complex pow(const Complex& z, const Complex& s) {
    if (s.is_zero()) return Complex(1L);
    if (s.im.is_zero()) {
        Real twice = s.re * 2L;
        Real rt = round_nearest(twice);
        if (rt == twice && abs(rt) <= 128L) {
            long m = rt.to_long();
            if (m % 2 == 0) return pow_int(z, m / 2);
            return pow_int(sqrt(z), m);
        }
    }
    return exp(s * log(z));
}
inline Complex pow(const Complex& z, const Real& s) { return pow(z, Complex(s)); }

// e^{i x}
inline Complex cis(const Real& x) { return {cos(x), sin(x)}; }

// x^s for real x != 0 on the stated branch: arg(x) = +pi when x < 0.
inline Complex pow_branch(const Real& x, const Complex& s) {
    if (x > 0) return exp(s * Complex(log(x)));
    return exp(s * Complex(log(-x), pi()));
}

inline Complex pow_int(Complex base, long n) {
    bool inv = n < 0;
    unsigned long m = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Complex acc(1L);
    while (m) {
        if (m & 1UL) acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    if (inv) return Complex(1L) / acc;
    return acc;
}

}  // namespace smt

#endif
