#ifndef SMT_QFORMS_HPP
#define SMT_QFORMS_HPP

#include <gmpxx.h>

#include <vector>

#include "smt/complex.hpp"
#include "smt/matrix.hpp"

namespace smt {

// Integral binary quadratic form a x^2 + b xy + c y^2 at level N
// (N | a required for members of Q_{d,N}; level 1 is the supported case).
struct QForm {
    mpz_class a, b, c;
    long level = 1;

    QForm() = default;
    QForm(mpz_class a_, mpz_class b_, mpz_class c_, long level_ = 1)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), level(level_) {}
    QForm(long a_, long b_, long c_, long level_ = 1) : a(a_), b(b_), c(c_), level(level_) {}

    mpz_class disc() const { return b * b - 4 * a * c; }
    mpz_class content() const;          // gcd(a, b, c) > 0
    QForm primitive_part() const;       // Q / content

    // Right action Q o M, (Q o M)(x, y) = Q(alpha x + beta y, gamma x + delta y).
    QForm act(const Mat2& m) const;

    bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }

    std::string str() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }
};

// Minimal half-integral solution of t^2 - d u^2 = 1 with t, u > 0.
struct PellSolution {
    mpq_class t, u;
};

// Oriented arc of the geodesic {a|z|^2 + b Re z + c = 0} from the apex
// z0 = center + iR to g_{Q'} z0, parametrized by hyperbolic arclength s:
// z(s) = center + R(-tanh s + i sech s), s from 0 to s_end.
struct GeodesicArc {
    QForm q;          // original form (content delta possibly > 1)
    QForm qprim;      // primitive part Q' = Q/delta
    Mat2 automorph;   // g_{Q'}
    Real center, radius;
    Real s_end;       // signed arclength parameter of g_{Q'} z0
    int a_sign;       // sign of qprim.a

    Complex point(const Real& s) const;   // z(s)
    Complex apex() const { return {center, radius}; }
};

bool is_square(const mpz_class& n);
mpz_class isqrt(const mpz_class& n);

// Valid trace index: d = 0 or 1 (mod 4).
bool valid_disc(const mpz_class& d);

// Gauss reduction of a positive definite form (d < 0, a > 0). Returns the
// reduced form (|b| <= a <= c, b >= 0 if |b| = a or a = c) and M with
// Q o M = Q_red.
std::pair<QForm, Mat2> reduce_definite(const QForm& q);

bool is_reduced_definite(const QForm& q);

// One representative per Gamma-orbit of Q_d, d < 0 (positive definite forms).
// level > 1 filters N | a over level-1 data (experimental).
std::vector<QForm> class_reps_definite(const mpz_class& d, long level = 1);

// Order of the image of the stabilizer in PSL_2(Z): 3 for d = -3, 2 for
// d = -4, else 1 (level 1 only).
int stabilizer_order(const QForm& q);

// CM point z_Q = (-b + sqrt(d))/(2a), d < 0.
Complex cm_point(const QForm& q);

// Minimal half-integral Pell solution for nonsquare d > 0, d = 0,1 (mod 4),
// via the continued fraction of (sigma + sqrt d)/2.
PellSolution pell(const mpz_class& d);

// g_{Q'} = (t + bu, 2cu; -2au, t - bu) for the primitive part Q' of Q.
Mat2 automorph(const QForm& q);

// Zagier-reduced: 0 < b < sqrt d and sqrt d - b < 2|a| < sqrt d + b.
bool is_reduced_indefinite(const QForm& q);

// Right-neighbor step through the cycle of reduced forms; also yields the
// transition matrix M with Q o M = rho(Q).
std::pair<QForm, Mat2> rho_step(const QForm& q);

// Reduce an arbitrary indefinite form (nonsquare d > 0) to a reduced one.
std::pair<QForm, Mat2> reduce_indefinite(const QForm& q);

// One representative per Gamma-orbit (cycle of reduced forms), nonsquare
// d > 0, imprimitive classes included; reps are the lex-least (a,b,c) of
// each cycle, sorted.
std::vector<QForm> class_reps_indefinite(const mpz_class& d);

// Square discriminant d = m^2 > 0: representatives (0, m, c'), 0 <= c' < m.
std::vector<QForm> class_reps_square(const mpz_class& d);

GeodesicArc geodesic_arc(const QForm& q);

// Arclength parameter of a point on the geodesic (small |s| only; used by
// test oracles).
Real geodesic_param(const GeodesicArc& arc, const Complex& z);

}  // namespace smt

#endif
