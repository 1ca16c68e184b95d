#include "smt/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace smt {

namespace {

// Legendre P_n and P_n' by the three-term recurrence.
void legendre(int n, const Real& x, Real& p, Real& dp) {
    Real p0(1L), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    // (1-x^2) P_n' = n (P_{n-1} - x P_n)
    dp = Real(static_cast<long>(n)) * (p0 - x * p1) / (1L - x * x);
}

std::shared_ptr<const GLRule> build_rule(int n) {
    auto r = std::make_shared<GLRule>();
    r->nodes.resize(n);
    r->weights.resize(n);
    Real tol = pow10(-(working_digits() + 3));
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double guess = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        Real x = Real::from_double(guess);
        Real p, dp;
        for (int it = 0; it < 200; ++it) {
            legendre(n, x, p, dp);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        legendre(n, x, p, dp);
        Real w = 2L / ((1L - x * x) * dp * dp);
        r->nodes[k] = -x;
        r->weights[k] = w;
        r->nodes[n - 1 - k] = x;
        r->weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) {
        Real x(0L), p, dp;
        legendre(n, x, p, dp);
        r->nodes[n / 2] = x;
        r->weights[n / 2] = 2L / (dp * dp);
    }
    return r;
}

std::mutex g_rule_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const GLRule>> g_rules;

}  // namespace

std::shared_ptr<const GLRule> gl_rule(int n) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto key = std::make_pair(n, working_digits());
    auto it = g_rules.find(key);
    if (it != g_rules.end()) return it->second;
    return g_rules.emplace(key, build_rule(n)).first->second;
}

Complex gl_integrate(const RealToComplex& f, const Real& a, const Real& b, int n) {
    auto rule = gl_rule(n);
    Real half = (b - a) / 2L;
    Real mid = (a + b) / 2L;
    Complex acc;
    for (int k = 0; k < n; ++k) {
        Complex v = f(mid + half * rule->nodes[k]);
        acc += v * rule->weights[k];
    }
    return acc * half;
}

namespace {

Complex adapt(const RealToComplex& f, const Real& a, const Real& b, const Real& tol, int n,
              int depth, Real* err_out) {
    Complex whole = gl_integrate(f, a, b, n);
    Real mid = (a + b) / 2L;
    Complex halves = gl_integrate(f, a, mid, n) + gl_integrate(f, mid, b, n);
    Real err = abs(whole - halves);
    if (err < tol || depth <= 0) {
        if (err_out) *err_out += err;
        return halves;
    }
    return adapt(f, a, mid, tol / 2L, n, depth - 1, err_out) +
           adapt(f, mid, b, tol / 2L, n, depth - 1, err_out);
}

}  // namespace

Complex integrate_adaptive(const RealToComplex& f, const Real& a, const Real& b, const Real& tol,
                           int n, int max_depth, Real* err_out) {
    return adapt(f, a, b, tol, n, max_depth, err_out);
}

Complex integrate_panels(const RealToComplex& f, const Real& a, const Real& b, const Real& tol,
                         double panel_len, int n, int max_depth, Real* err_out) {
    Real len = b - a;
    long panels = std::max(1L, static_cast<long>(std::ceil(std::abs(len.to_double()) / panel_len)));
    Real ptol = tol / panels;
    Complex acc;
    for (long p = 0; p < panels; ++p) {
        Real pa = a + len * p / panels;
        Real pb = a + len * (p + 1) / panels;
        acc += adapt(f, pa, pb, ptol, n, max_depth, err_out);
    }
    return acc;
}

}  // namespace smt
