#include "smt/qforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace smt {

mpz_class QForm::content() const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

QForm QForm::primitive_part() const {
    mpz_class g = content();
    return {a / g, b / g, c / g, level};
}

QForm QForm::act(const Mat2& m) const {
    // Q(alpha x + beta y, gamma x + delta y)
    mpz_class na = a * m.a * m.a + b * m.a * m.c + c * m.c * m.c;
    mpz_class nb = 2 * a * m.a * m.b + b * (m.a * m.d + m.b * m.c) + 2 * c * m.c * m.d;
    mpz_class nc = a * m.b * m.b + b * m.b * m.d + c * m.d * m.d;
    return {na, nb, nc, level};
}

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool valid_disc(const mpz_class& d) {
    mpz_class m = ((d % 4) + 4) % 4;
    return m == 0 || m == 1;
}

bool is_reduced_definite(const QForm& q) {
    mpz_class ab = abs(q.b);
    if (!(ab <= q.a && q.a <= q.c)) return false;
    if (q.b < 0 && (ab == q.a || q.a == q.c)) return false;
    return true;
}

std::pair<QForm, Mat2> reduce_definite(const QForm& q) {
    if (q.disc() >= 0) throw std::invalid_argument("reduce_definite: form not definite");
    if (q.a <= 0) throw std::invalid_argument("reduce_definite: need a > 0");
    QForm f = q;
    Mat2 m = Mat2::identity();
    for (int iter = 0; iter < 10000; ++iter) {
        // translate b into (-a, a]: t = ceil((b - a)/(2a)) = floor((b + a - 1)/(2a))
        mpz_class two_a = 2 * f.a;
        mpz_class t;
        mpz_class num = f.b + f.a - 1;
        mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), two_a.get_mpz_t());
        if (t != 0) {
            Mat2 shift(mpz_class(1), -t, mpz_class(0), mpz_class(1));
            f = f.act(shift);
            m = m * shift;
        }
        if (f.a > f.c || (f.a == f.c && f.b < 0)) {
            Mat2 s = Mat2::S();
            f = f.act(s);
            m = m * s;
            continue;
        }
        if (is_reduced_definite(f)) return {f, m};
    }
    throw std::logic_error("reduce_definite: did not terminate");
}

std::vector<QForm> class_reps_definite(const mpz_class& d, long level) {
    if (d >= 0 || !valid_disc(d)) throw std::invalid_argument("class_reps_definite: need d < 0, d = 0,1 (mod 4)");
    std::vector<QForm> out;
    mpz_class limit = isqrt(mpz_class(-d) / 3);
    for (mpz_class a = 1; a <= limit; ++a) {
        for (mpz_class b = -a + 1; b <= a; ++b) {
            mpz_class num = b * b - d;
            if (num % (4 * a) != 0) continue;
            mpz_class c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            out.emplace_back(a, b, c, level);
        }
    }
    if (level > 1) {
        // Experimental: Q_{d,N} filter over level-1 representatives.
        std::vector<QForm> filtered;
        for (auto& f : out)
            if (f.a % level == 0) filtered.push_back(f);
        return filtered;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int stabilizer_order(const QForm& q) {
    mpz_class d = q.disc();
    if (d >= 0) throw std::invalid_argument("stabilizer_order: form not definite");
    // The stabilizer is the elliptic stabilizer of the CM point, which only
    // sees the primitive part: order 3 at rho (disc -3), 2 at i (disc -4).
    mpz_class dp = q.primitive_part().disc();
    if (dp == -3) return 3;
    if (dp == -4) return 2;
    return 1;
}

Complex cm_point(const QForm& q) {
    mpz_class d = q.disc();
    if (d >= 0) throw std::invalid_argument("cm_point: form not definite");
    Real a2 = Real(q.a) * 2L;
    return {Real(mpz_class(-q.b)) / a2, sqrt(Real(mpz_class(-d))) / a2};
}

namespace {

// Continued fraction of (P0 + sqrt d)/Q0 until the (P,Q) state repeats;
// returns the fundamental unit (x + y sqrt d)/2 of the order of
// discriminant d as the pair (x, y) with x^2 - d y^2 = +-4.
void fundamental_unit(const mpz_class& d, mpz_class& x, mpz_class& y) {
    mpz_class s = isqrt(d);
    mpz_class P = mpz_odd_p(d.get_mpz_t()) ? 1 : 0;
    mpz_class Q = 2;
    // convergent recurrences for omega = (P + sqrt d)/Q
    mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    std::map<std::pair<mpz_class, mpz_class>, std::pair<std::pair<mpz_class, mpz_class>, std::pair<mpz_class, mpz_class>>> seen;
    for (long i = 0; i < 4000000; ++i) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            // One period maps omega_m -> omega_m through z -> (Az+B)/(Cz+D)
            // built from the convergents on either side of the period; the
            // unit is C omega_m + D.
            mpz_class pm1 = it->second.first.first, pm2 = it->second.first.second;
            mpz_class qm1 = it->second.second.first, qm2 = it->second.second.second;
            // M_per = M_m^{-1} M_i with M_i = (p1 p2; q1 q2), M_m = (pm1 pm2; qm1 qm2)
            mpz_class det = pm1 * qm2 - pm2 * qm1;  // +-1
            mpz_class C = (pm1 * q1 - qm1 * p1) * det;
            mpz_class D = (pm1 * q2 - qm1 * p2) * det;
            // epsilon = C omega_m + D, omega_m = (P + sqrt d)/Q
            // = ((2CP + 2DQ)/(2Q)) + (C/Q) sqrt d =: (x + y sqrt d)/2
            mpz_class num_x = 2 * (C * P + D * Q);
            mpz_class num_y = 2 * C;
            if (num_x % Q != 0 || num_y % Q != 0) throw std::logic_error("pell: unit not in the order");
            x = num_x / Q;
            y = num_y / Q;
            if (y < 0) { x = -x; y = -y; }
            if (x < 0) x = -x;
            return;
        }
        seen[state] = {{p1, p2}, {q1, q2}};
        mpz_class aq;  // floor((P + sqrt d)/Q), Q > 0 throughout
        aq = (P + s) / Q;
        mpz_class p0 = aq * p1 + p2, q0 = aq * q1 + q2;
        p2 = p1; p1 = p0; q2 = q1; q1 = q0;
        P = aq * Q - P;
        Q = (d - P * P) / Q;
        if (Q <= 0) throw std::logic_error("pell: continued fraction state corrupt");
    }
    throw std::logic_error("pell: period not found");
}

}  // namespace

PellSolution pell(const mpz_class& d) {
    if (d <= 0 || !valid_disc(d)) throw std::invalid_argument("pell: need d > 0, d = 0,1 (mod 4)");
    if (is_square(d)) throw std::invalid_argument("pell: d must not be a square");
    mpz_class x, y;
    fundamental_unit(d, x, y);
    mpz_class norm = x * x - d * y * y;
    if (norm == -4) {
        // square the unit: ((x + y sqrt d)/2)^2 = ((x^2 + d y^2)/2 + xy sqrt d)/2
        mpz_class x2 = (x * x + d * y * y) / 2;
        mpz_class y2 = x * y;
        x = x2;
        y = y2;
        norm = x * x - d * y * y;
    }
    if (norm != 4) throw std::logic_error("pell: unit norm not +-1");
    PellSolution ps;
    ps.t = mpq_class(x, 2);
    ps.u = mpq_class(y, 2);
    ps.t.canonicalize();
    ps.u.canonicalize();
    return ps;
}

Mat2 automorph(const QForm& q) {
    mpz_class d = q.disc();
    if (d <= 0) throw std::invalid_argument("automorph: need d > 0");
    if (is_square(d)) throw std::invalid_argument("automorph: square discriminant unsupported");
    QForm p = q.primitive_part();
    mpz_class dp = p.disc();
    PellSolution ps = pell(dp);
    // entries t + bu etc. are integers: 2t and 2u are integers of equal parity
    mpq_class a11 = ps.t + ps.u * mpq_class(p.b);
    mpq_class a12 = 2 * ps.u * mpq_class(p.c);
    mpq_class a21 = -2 * ps.u * mpq_class(p.a);
    mpq_class a22 = ps.t - ps.u * mpq_class(p.b);
    for (auto* v : {&a11, &a12, &a21, &a22}) {
        v->canonicalize();
        if (v->get_den() != 1) throw std::logic_error("automorph: non-integral entry");
    }
    Mat2 g(a11.get_num(), a12.get_num(), a21.get_num(), a22.get_num());
    if (g.det() != 1) throw std::logic_error("automorph: determinant != 1");
    if (!(p.act(g) == p)) throw std::logic_error("automorph: does not fix Q'");
    return g;
}

namespace {

// integer test x > sqrt(d) for x possibly negative, d > 0 nonsquare
bool gt_sqrt(const mpz_class& x, const mpz_class& d) { return x > 0 && x * x > d; }
bool lt_sqrt(const mpz_class& x, const mpz_class& d) { return x <= 0 || x * x < d; }

}  // namespace

bool is_reduced_indefinite(const QForm& q) {
    mpz_class d = q.disc();
    if (d <= 0 || is_square(d)) return false;
    if (q.b <= 0) return false;
    if (!lt_sqrt(q.b, d)) return false;
    mpz_class ta = 2 * abs(q.a);
    // sqrt d - b < 2|a|  <=>  2|a| + b > sqrt d
    if (!gt_sqrt(ta + q.b, d)) return false;
    // 2|a| < sqrt d + b  <=>  2|a| - b < sqrt d
    if (!lt_sqrt(ta - q.b, d)) return false;
    return true;
}

std::pair<QForm, Mat2> rho_step(const QForm& q) {
    mpz_class d = q.disc();
    if (d <= 0 || is_square(d)) throw std::invalid_argument("rho_step: need nonsquare d > 0");
    if (q.c == 0) throw std::invalid_argument("rho_step: degenerate form");
    mpz_class s = isqrt(d);
    mpz_class m = 2 * abs(q.c);
    // target window for r = -b (mod 2|c|):
    //   |c| > sqrt d : -|c| < r <= |c|
    //   |c| < sqrt d : sqrt d - 2|c| < r < sqrt d, i.e. s+1-2|c| <= r <= s
    mpz_class lo;
    if (gt_sqrt(abs(q.c), d)) lo = -abs(q.c) + 1;
    else lo = s + 1 - m;
    mpz_class r = (-q.b - lo) % m;
    if (r < 0) r += m;
    r += lo;  // r in [lo, lo + m), r = -b (mod m)
    mpz_class h = (q.b + r) / (2 * q.c);
    Mat2 mstep(0, -1, 1, h);
    QForm next = q.act(mstep);
    if (next.a != q.c || next.b != r) throw std::logic_error("rho_step: inconsistent step");
    return {next, mstep};
}

std::pair<QForm, Mat2> reduce_indefinite(const QForm& q) {
    QForm f = q;
    Mat2 m = Mat2::identity();
    for (int i = 0; i < 100000; ++i) {
        if (is_reduced_indefinite(f)) return {f, m};
        auto [nf, step] = rho_step(f);
        f = nf;
        m = m * step;
    }
    throw std::logic_error("reduce_indefinite: did not terminate");
}

std::vector<QForm> class_reps_indefinite(const mpz_class& d) {
    if (d <= 0 || !valid_disc(d)) throw std::invalid_argument("class_reps_indefinite: need d > 0, d = 0,1 (mod 4)");
    if (is_square(d)) throw std::invalid_argument("class_reps_indefinite: square discriminant unsupported");
    mpz_class s = isqrt(d);
    std::set<QForm> reduced;
    mpz_class parity = ((d % 2) + 2) % 2;
    for (mpz_class b = 1; b <= s; ++b) {
        if (((b % 2) + 2) % 2 != parity) continue;
        mpz_class ac4 = b * b - d;  // < 0, = 4ac
        mpz_class lo = s + 1 - b;   // 2|a| > sqrt d - b
        if (lo < 1) lo = 1;
        for (mpz_class ta = lo; lt_sqrt(ta - b, d); ++ta) {
            // ta = 2|a|
            if (ta % 2 != 0) continue;
            mpz_class aa = ta / 2;
            if (ac4 % (4 * aa) != 0) continue;
            mpz_class cc = ac4 / (4 * aa);  // for a = +aa
            reduced.insert(QForm(aa, b, cc));
            reduced.insert(QForm(-aa, b, -cc));
        }
    }
    // group into rho-cycles
    std::vector<QForm> reps;
    std::set<QForm> visited;
    for (const auto& f : reduced) {
        if (visited.count(f)) continue;
        QForm best = f;
        QForm cur = f;
        for (int i = 0; i < 1000000; ++i) {
            visited.insert(cur);
            auto [next, step] = rho_step(cur);
            (void)step;
            if (!is_reduced_indefinite(next)) throw std::logic_error("class_reps_indefinite: cycle left reduced set");
            if (next == f) break;
            if (next < best) best = next;
            cur = next;
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<QForm> class_reps_square(const mpz_class& d) {
    if (d <= 0 || !is_square(d)) throw std::invalid_argument("class_reps_square: need a positive square");
    mpz_class m = isqrt(d);
    std::vector<QForm> out;
    for (mpz_class cp = 0; cp < m; ++cp) out.emplace_back(mpz_class(0), m, cp);
    return out;
}

Complex GeodesicArc::point(const Real& s) const {
    Real th = tanh(s);
    Real sch = 1L / cosh(s);
    return {center - radius * th, radius * sch};
}

GeodesicArc geodesic_arc(const QForm& q) {
    mpz_class d = q.disc();
    if (d <= 0) throw std::invalid_argument("geodesic_arc: need d > 0");
    if (is_square(d)) throw std::invalid_argument("geodesic_arc: square discriminant handled by the cusp-period formula");
    GeodesicArc arc;
    arc.q = q;
    arc.qprim = q.primitive_part();
    arc.automorph = automorph(q);
    mpz_class dp = arc.qprim.disc();
    Real a2 = Real(arc.qprim.a) * 2L;
    arc.center = Real(mpz_class(-arc.qprim.b)) / a2;
    arc.radius = sqrt(Real(dp)) / abs(a2);
    arc.a_sign = arc.qprim.a > 0 ? 1 : -1;
    // |s_end| = 2 log(t + u sqrt d'). g_{Q'} contracts toward the root
    // (-b - sqrt d')/(2a): j(g, w) = t -+ u sqrt d' at w = (-b +- sqrt d')/(2a),
    // so the attracting endpoint sits at z(+inf) iff a > 0.
    PellSolution ps = pell(dp);
    Real eps = Real(ps.t) + Real(ps.u) * sqrt(Real(dp));
    Real len = 2L * log(eps);
    arc.s_end = arc.a_sign > 0 ? len : -len;
    return arc;
}

Real geodesic_param(const GeodesicArc& arc, const Complex& z) {
    return atanh((arc.center - z.re) / arc.radius);
}

}  // namespace smt
