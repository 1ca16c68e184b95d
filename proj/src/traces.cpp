#include "smt/traces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smt/parallel.hpp"
#include "smt/quadrature.hpp"
#include "smt/specfun.hpp"

namespace smt {

const TraceEntry& TraceTable::at_neg(long abs_d) const {
    auto it = neg.find(abs_d);
    if (it == neg.end()) throw InsufficientData(form + ": Tr_{-" + std::to_string(abs_d) + "} missing", -abs_d);
    return it->second;
}

const TraceEntry& TraceTable::at_pos(long d) const {
    auto it = pos.find(d);
    if (it == pos.end()) throw InsufficientData(form + ": Tr_" + std::to_string(d) + " missing", d);
    return it->second;
}

Complex trace_neg(const FormSpec& f, long d) {
    if (d >= 0) throw std::invalid_argument("trace_neg: need d < 0");
    mpz_class dz(d);
    if (!valid_disc(dz)) throw std::invalid_argument("trace_neg: d must be 0 or 1 (mod 4)");
    if (!f.eval) throw std::invalid_argument("trace_neg: form has no evaluator");
    Complex acc;
    for (const auto& q : class_reps_definite(dz, f.level)) {
        Complex v = f.eval(cm_point(q));
        acc += v / static_cast<long>(stabilizer_order(q));
    }
    return acc;
}

namespace {

// integral of f(z(s)) ds over [s0, s1] with the per-class refinement check
Complex arc_integral(const FormSpec& f, const GeodesicArc& arc, const Real& s0, const Real& s1,
                     const CycleQuadOpts& opts, Real& err) {
    auto integrand = [&](const Real& s) { return f.eval(arc.point(s)); };
    Real len = abs(s1 - s0);
    long panels = std::max(1L, static_cast<long>(std::ceil(len.to_double() / opts.panel_len)));
    auto sweep = [&](long np, int deg) {
        Complex acc;
        for (long p = 0; p < np; ++p) {
            Real a = s0 + (s1 - s0) * p / np;
            Real b = s0 + (s1 - s0) * (p + 1) / np;
            acc += gl_integrate(integrand, a, b, deg);
        }
        return acc;
    };
    Complex coarse = sweep(panels, opts.gl_degree);
    Complex fine = sweep(2 * panels, opts.gl_degree);
    err += abs(fine - coarse);
    return fine;
}

}  // namespace

TraceEntry trace_pos_nonsquare(const FormSpec& f, long d, const CycleQuadOpts& opts) {
    mpz_class dz(d);
    if (d <= 0 || !valid_disc(dz)) throw std::invalid_argument("trace_pos_nonsquare: need d > 0, d = 0,1 (mod 4)");
    if (is_square(dz)) throw std::invalid_argument("trace_pos_nonsquare: square index belongs to trace_pos_square");
    if (!f.eval) throw std::invalid_argument("trace_pos_nonsquare: form has no evaluator");
    Complex acc;
    Real err;
    for (const auto& q : class_reps_indefinite(dz)) {
        GeodesicArc arc = geodesic_arc(q);
        mpz_class delta = q.content();
        Real s0 = opts.base_s ? *opts.base_s : Real(0L);
        Real s1 = s0 + arc.s_end;
        Complex integral = arc_integral(f, arc, s0, s1, opts, err);
        // dz/Q'(z,1) = sign(a') ds / sqrt(d'); the class carries 1/delta.
        Real pref = Real(static_cast<long>(arc.a_sign)) / (sqrt(Real(arc.qprim.disc())) * Real(delta));
        acc += integral * pref;
    }
    Real two_pi = 2L * pi();
    return {acc / two_pi, err / two_pi};
}

TraceEntry trace_pos_square(const FormSpec& f, long d, double split_c) {
    mpz_class dz(d);
    if (d <= 0 || !is_square(dz)) throw std::invalid_argument("trace_pos_square: need a positive square index");
    long m = mpz_class(isqrt(dz)).get_si();
    Real tol = pow10(-(working_digits() + 5));
    Complex acc;
    Real err;
    for (const auto& q : class_reps_square(dz)) {
        // Q = (0, m, c'), geodesic Re z = -c'/m from the rational cusp up to
        // i infinity; period = (1/m) [ EI sums at both cusp charts ].
        long cp = q.c.get_si();
        mpz_class g;
        mpz_class num(-cp), den(m);
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class p = num / g, qq = den / g;  // r = p/q in lowest terms, q > 0
        // second chart: r~ = -delta/q with p*delta = 1 (mod q), c~ = 1/(q^2 c)
        mpz_class delta;
        if (qq == 1) {
            delta = 0;
        } else {
            mpz_class pm = p % qq;
            if (pm < 0) pm += qq;
            if (mpz_invert(delta.get_mpz_t(), pm.get_mpz_t(), qq.get_mpz_t()) == 0)
                throw std::logic_error("trace_pos_square: no inverse");
        }
        Real qr(qq);
        Real c = split_c > 0 ? Real::from_double(split_c) : 1L / qr;  // balanced split
        Real ct = 1L / (qr * qr * c);
        Real r = Real(p) / qr;
        Real rt = -Real(delta) / qr;
        if (f.coeff_int(0) != 0)
            throw std::invalid_argument("trace_pos_square: constant term must vanish");
        Complex sum;
        Real two_pi = 2L * pi();
        Real four_pi = 4L * pi();
        for (long n = f.n_min; ; ++n) {
            if (n == 0) continue;
            const mpz_class& an = f.coeff_int(n);
            if (n > 0) {
                // stop once both EI tails are below tol against the pole-order-1
                // coefficient envelope |a(n)| <= e^{4 pi sqrt n}
                Real env = exp(four_pi * sqrt(Real(n)) - two_pi * Real(n) * min(c, ct));
                if (n > 4 && env < tol) break;
            }
            if (an == 0) continue;
            Real ei1 = exp_int(two_pi * Real(n) * c);
            Real ei2 = exp_int(two_pi * Real(n) * ct);
            Complex term = cis(two_pi * Real(n) * r) * ei1 + cis(two_pi * Real(n) * rt) * ei2;
            sum += term * Real(an);
        }
        acc += sum / static_cast<long>(m);
        err += tol;
    }
    Real two_pi = 2L * pi();
    return {acc / two_pi, err / two_pi};
}

TraceEntry trace_zero(const FormSpec& f, double truncation_T) {
    if (f.coeff_int(0) != 0) throw std::invalid_argument("trace_zero: constant term must vanish");
    if (!f.eval) throw std::invalid_argument("trace_zero: form has no evaluator");
    // Integrate f dx dy / y^2 over the standard fundamental domain truncated
    // at Im = T. Above T the x-average is the constant term, which vanishes,
    // so the tail is exactly zero for T >= 1. Real Fourier coefficients give
    // f(-conj z) = conj(f(z)), so integrate x over [0, 1/2] and double.
    Real T = Real::from_double(truncation_T);
    if (T < 1L) throw std::invalid_argument("trace_zero: need T >= 1");
    // the integrand reaches ~e^{2 pi T}; tolerances are relative to that
    Real scale = exp(2L * pi() * T);
    Real tol = scale * pow10(-(working_digits() + 2));
    auto sweep = [&](int xpanels, int ypanels, int deg) -> Complex {
        auto inner = [&](const Real& x) -> Complex {
            Real ylo = sqrt(1L - x * x);
            auto fy = [&](const Real& y) { return f.eval(Complex(x, y)) / (y * y); };
            Complex acc;
            for (int p = 0; p < ypanels; ++p) {
                Real a = ylo + (T - ylo) * p / ypanels;
                Real b = ylo + (T - ylo) * (p + 1) / ypanels;
                acc += gl_integrate(fy, a, b, deg);
            }
            return acc;
        };
        Complex acc;
        Real half = Real(1L) / 2L;
        for (int p = 0; p < xpanels; ++p) {
            Real a = half * p / xpanels;
            Real b = half * (p + 1) / xpanels;
            acc += gl_integrate(inner, a, b, deg);
        }
        return acc + conj(acc);
    };
    int deg = 24 + working_digits() / 2;
    int yp = std::max(4, static_cast<int>(truncation_T));
    Complex coarse = sweep(2, yp, deg);
    Complex fine = sweep(3, yp + 2, deg + 8);
    Real err = abs(fine - coarse) + tol;
    Real two_pi = 2L * pi();
    return {-fine / two_pi, err / two_pi};
}

Complex trace_comp(const FormSpec& f, long d) {
    if (d <= 0) throw std::invalid_argument("trace_comp: need d >= 1");
    Complex acc;
    for (long n = -1; d * n >= f.n_min; --n) acc += f.coeff(d * n);
    return acc * (2 * d);
}

long j1_table_demand(long pos_max, int digits) {
    double m = std::sqrt(static_cast<double>(std::max(1L, pos_max)));
    double L = (digits + 6) * 2.302585;
    // solve (2 pi / m) t^2 - 4 pi t - L = 0 for t = sqrt(n)
    double t = m * (4 * M_PI + std::sqrt(16 * M_PI * M_PI + 8 * M_PI * L / m)) / (4 * M_PI);
    return static_cast<long>(t * t * 1.1) + 32;
}

TraceTable build_trace_table(const FormSpec& f, long neg_max, long pos_max, int jobs,
                             const CycleQuadOpts& opts) {
    TraceTable tab;
    tab.form = f.label;
    tab.precision = working_digits();
    std::vector<long> neg_idx, pos_idx;
    for (long n = 3; n <= neg_max; ++n)
        if (valid_disc(mpz_class(-n))) neg_idx.push_back(n);
    for (long d = 1; d <= pos_max; ++d)
        if (valid_disc(mpz_class(d))) pos_idx.push_back(d);

    std::vector<Complex> neg_vals(neg_idx.size());
    int digits = working_digits();
    parallel_for(neg_idx.size(), jobs, [&](std::size_t i) {
        PrecisionGuard guard(digits);
        neg_vals[i] = trace_neg(f, -neg_idx[i]);
    });
    Real neg_err = pow10(-(digits - 10));
    for (std::size_t i = 0; i < neg_idx.size(); ++i) tab.neg[neg_idx[i]] = {neg_vals[i], neg_err};

    std::vector<TraceEntry> pos_vals(pos_idx.size());
    parallel_for(pos_idx.size(), jobs, [&](std::size_t i) {
        PrecisionGuard guard(digits);
        long d = pos_idx[i];
        pos_vals[i] = is_square(mpz_class(d)) ? trace_pos_square(f, d) : trace_pos_nonsquare(f, d, opts);
    });
    for (std::size_t i = 0; i < pos_idx.size(); ++i) tab.pos[pos_idx[i]] = pos_vals[i];

    tab.zero = trace_zero(f);
    // comp indices through max(10, |n_min|): beyond |n_min| they vanish anyway
    for (long dd = 1; dd <= std::max(10L, -f.n_min); ++dd) tab.comp[dd] = trace_comp(f, dd);
    return tab;
}

Complex partial_H(const TraceTable& tab, const Complex& z, long D, Real* tail_spec, Real* tail_emp) {
    if (!(z.im > 0)) throw std::domain_error("partial_H: Im z must be positive");
    Complex acc;
    Real two_pi = 2L * pi();
    long top_needed = D;
    while (top_needed > 0 && !valid_disc(mpz_class(top_needed))) --top_needed;
    if (top_needed > 0 && tab.pos.find(top_needed) == tab.pos.end())
        throw InsufficientData(tab.form + ": positive traces end before D", top_needed);
    for (const auto& [d, entry] : tab.pos) {
        if (d > D) break;
        acc += entry.value * exp(i_times(z) * (two_pi * Real(d)));
    }
    auto tail_from = [&](const GrowthBound& g) {
        // sum_{d>D} C e^{K sqrt d} e^{-2 pi d y}, summed until terms collapse
        Real y = z.im;
        Real acc_t;
        for (long d = D + 1; d < D + 2000000; ++d) {
            Real t = g.C * exp(g.K * sqrt(Real(d)) - two_pi * Real(d) * y);
            acc_t += t;
            if (d > D + 8 && t < acc_t * pow10(-(working_digits() + 2)) + pow10(-4 * working_digits())) break;
        }
        return acc_t;
    };
    if (tail_spec) *tail_spec = tail_from(spec_pos_growth(tab));
    if (tail_emp) *tail_emp = tail_from(calibrate_pos_growth(tab));
    return acc;
}

GrowthBound calibrate_pos_growth(const TraceTable& tab) {
    // fit |Tr_d| <= C e^{K sqrt d}: K from the max positive log-slope between
    // the first entry and later ones, C from the data, both x10 safety.
    if (tab.pos.empty()) return {Real(1L), Real(0L)};
    double K = 0.0;
    auto first = *tab.pos.begin();
    double l0 = std::log(std::max(1e-30, abs(first.second.value).to_double()));
    double s0 = std::sqrt(static_cast<double>(first.first));
    for (const auto& [d, e] : tab.pos) {
        if (d == first.first) continue;
        double l = std::log(std::max(1e-30, abs(e.value).to_double()));
        double slope = (l - l0) / (std::sqrt(static_cast<double>(d)) - s0);
        K = std::max(K, slope);
    }
    Real C;
    Real KK = Real::from_double(K);
    for (const auto& [d, e] : tab.pos) C = max(C, abs(e.value) / exp(KK * sqrt(Real(d))));
    return {C * 10L, KK};
}

GrowthBound spec_pos_growth(const TraceTable& tab) {
    Real K = 4L * pi();
    Real C;
    for (const auto& [d, e] : tab.pos) C = max(C, abs(e.value) / exp(K * sqrt(Real(d))));
    if (tab.pos.empty()) C = Real(1L);
    return {C * 10L, K};
}

Complex eval_g1(const TraceTable& tab, const Complex& z, Real* err_bound, double tol) {
    if (!(z.im > 0)) throw std::domain_error("eval_g1: Im z must be positive");
    Real two_pi = 2L * pi();
    Real four_pi = 4L * pi();
    Complex acc;
    // principal part and constant from the shadow data
    for (const auto& [dd, v] : tab.comp)
        if (!v.is_zero()) acc -= v * exp(i_times(z) * (two_pi * Real(-dd * dd))) / 2L;
    if (!tab.zero) throw InsufficientData("eval_g1: Tr_0 missing", 0);
    acc += tab.zero->value / 2L;
    Real C;
    long top = 0;
    for (const auto& [absd, e] : tab.neg) {
        acc += e.value * exp(i_times(z) * (two_pi * Real(absd)));
        C = max(C, abs(e.value) / exp(four_pi * sqrt(Real(absd))));
        top = std::max(top, absd);
    }
    C *= 10L;
    // tail: sum_{d>top} C e^{4 pi sqrt d - 2 pi d y}
    Real bound;
    for (long d = top + 1; d < top + 2000000; ++d) {
        Real t = C * exp(four_pi * sqrt(Real(d)) - two_pi * Real(d) * z.im);
        bound += t;
        if (d > top + 8 && t < bound * pow10(-(working_digits() + 2))) break;
    }
    if (err_bound) *err_bound = bound;
    if (bound > Real::from_double(tol)) {
        // demand grows like (2 ln(1/tol) / (pi y))^2 coefficients at height y
        double y = z.im.to_double();
        double need = std::pow(2.0 * std::log(1.0 / tol) / (M_PI * y), 2.0);
        throw InsufficientData("eval_g1: tail bound exceeds tolerance at this height; need |d| <= " +
                                   std::to_string((long)need),
                               (long)need);
    }
    return acc;
}

}  // namespace smt
