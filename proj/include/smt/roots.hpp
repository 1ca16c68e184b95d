#ifndef SMT_ROOTS_HPP
#define SMT_ROOTS_HPP

#include <stdexcept>

#include "smt/complex.hpp"

namespace smt {

// Exact eighth root of unity e^{2 pi i k / 8}. Keeps multiplier products
// exact; conversion to Complex happens only at evaluation time.
struct RootU8 {
    int k = 0;  // mod 8

    RootU8() = default;
    explicit RootU8(int kk) : k(((kk % 8) + 8) % 8) {}

    static RootU8 one() { return RootU8(0); }
    static RootU8 i() { return RootU8(2); }
    static RootU8 minus_one() { return RootU8(4); }
    static RootU8 eighth() { return RootU8(1); }  // e^{i pi/4}

    RootU8 operator*(RootU8 o) const { return RootU8(k + o.k); }
    RootU8 inverse() const { return RootU8(-k); }
    RootU8 conjugate() const { return RootU8(-k); }
    RootU8 pow(int n) const { return RootU8(k * n); }
    bool operator==(RootU8 o) const { return k == o.k; }

    bool is_fourth_root() const { return k % 2 == 0; }

    Complex value() const {
        switch (k) {
            case 0: return Complex(1L);
            case 2: return Complex(Real(0L), Real(1L));
            case 4: return Complex(Real(-1L));
            case 6: return Complex(Real(0L), Real(-1L));
            default: {
                Real h = sqrt(Real(2L)) / 2L;
                Real sr = (k == 1 || k == 7) ? h : -h;
                Real si = (k == 1 || k == 3) ? h : -h;
                return Complex(sr, si);
            }
        }
    }
};

// Half-integer weights: k = twice/2 throughout.
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    explicit HalfInt(int t) : twice(t) {}
    static HalfInt of_int(int n) { return HalfInt(2 * n); }

    bool is_integer() const { return twice % 2 == 0; }
    Real value() const { return Real(static_cast<long>(twice)) / 2L; }
    HalfInt operator-() const { return HalfInt(-twice); }

    // i^k on the principal branch; exact eighth root since i^k = e^{i pi k/2}.
    RootU8 i_power() const { return RootU8(twice); }
};

inline Real operator-(const Real& s, HalfInt k) { return s - k.value(); }
inline Real operator-(HalfInt k, const Real& s) { return k.value() - s; }

}  // namespace smt

#endif
