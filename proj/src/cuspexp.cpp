#include "smt/cuspexp.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace smt {

namespace {

Complex slash_value(const Evaluator& g, HalfInt k, const Mat2& gamma, const Complex& tau) {
    Complex j = gamma.j_factor(tau);
    return pow(j, Complex(-k.value())) * g(gamma.apply(tau));
}

}  // namespace

CuspExpansion expand_at_cusp(const Evaluator& g, HalfInt k, const Mat2& gamma, long n_min,
                             long n_count, const CuspExpandOpts& opts) {
    if (opts.samples < 4 * n_count) throw std::invalid_argument("expand_at_cusp: need samples >= 4x coefficient count");
    Real y0 = Real::from_double(opts.y0);
    auto h = [&](const Real& x) { return slash_value(g, k, gamma, Complex(x, y0)); };

    // period detection: smallest integer lambda whose drift ratio
    // h(x + lambda)/h(x) is a constant unit
    long lambda = 0;
    Complex drift;
    Real tol = Real::from_double(opts.drift_tol);
    std::string diag;
    for (long cand = 1; cand <= opts.lambda_bound; ++cand) {
        const int probes = 16;
        bool ok = true;
        Complex mean;
        std::vector<Complex> ratios;
        for (int j = 0; j < probes && ok; ++j) {
            Real x = Real(cand) * j / probes;
            Complex hx = h(x);
            if (abs(hx) < pow10(-(working_digits() / 2))) { ok = false; break; }
            Complex ratio = h(x + Real(cand)) / hx;
            ratios.push_back(ratio);
            mean += ratio;
        }
        if (!ok || ratios.empty()) {
            diag += "lambda=" + std::to_string(cand) + ": small samples; ";
            continue;
        }
        mean = mean / static_cast<long>(ratios.size());
        Real dev;
        for (const auto& r : ratios) dev = max(dev, abs(r - mean));
        Real mod_dev = abs(abs(mean) - Real(1L));
        if (dev < tol && mod_dev < tol) {
            lambda = cand;
            drift = mean;
            break;
        }
        diag += "lambda=" + std::to_string(cand) + ": dev=" + dev.str(3) + " |mean|-1=" + mod_dev.str(3) + "; ";
    }
    if (lambda == 0) throw DetectionError("expand_at_cusp: no period candidate passed (" + diag + ")");

    // kappa from the drift phase e^{2 pi i kappa}
    Real two_pi = 2L * pi();
    Real kappa = arg(drift) / two_pi;
    if (kappa < 0) kappa += 1L;
    if (abs(kappa) < tol || abs(kappa - 1L) < tol) kappa = Real(0L);

    // coefficients by direct DFT over one lambda-period
    long M = opts.samples;
    std::vector<Complex> hs(static_cast<std::size_t>(M));
    Real maxabs;
    for (long j = 0; j < M; ++j) {
        hs[static_cast<std::size_t>(j)] = h(Real(lambda) * j / M);
        maxabs = max(maxabs, abs(hs[static_cast<std::size_t>(j)]));
    }
    CuspExpansion ce;
    ce.gamma = gamma;
    ce.weight = k;
    ce.kappa = kappa;
    ce.lambda = lambda;
    ce.n_min = n_min;
    ce.n_max = n_min + n_count - 1;
    Real lam(lambda);
    // alias bound: modes n +- M fold in with weight e^{-2 pi M y0/lambda}
    Real alias = exp(-two_pi * Real(M) * y0 / lam) / (1L - exp(-two_pi * Real(M) * y0 / lam));
    for (long n = n_min; n <= ce.n_max; ++n) {
        Real nu = (Real(n) + kappa) / lam;
        Complex acc;
        for (long j = 0; j < M; ++j) {
            Real x = lam * j / M;
            acc += hs[static_cast<std::size_t>(j)] * cis(-two_pi * nu * x);
        }
        acc = acc / M;
        Complex b = acc * exp(two_pi * nu * y0);
        ce.coeffs[n] = b;
        ce.errs[n] = maxabs * exp(two_pi * nu * y0) * alias;
    }
    ce.growth_C = (maxabs * exp(two_pi * (Real(ce.n_max) + 1L) * y0 / lam)).to_double();
    ce.growth_K = 0.5;
    return ce;
}

Complex synthesize(const CuspExpansion& ce, const Complex& tau) {
    Real two_pi = 2L * pi();
    Real lam(ce.lambda);
    Complex acc;
    for (const auto& [n, b] : ce.coeffs) {
        Real nu = (Real(n) + ce.kappa) / lam;
        acc += b * exp(i_times(tau) * (two_pi * nu));
    }
    return acc;
}

}  // namespace smt
