#include <doctest.h>

#include <cmath>
#include <random>

#include "smt/formspec.hpp"
#include "smt/modeval.hpp"
#include "smt/qseries.hpp"

using namespace smt;

namespace {

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

// raw series oracle at doubled precision: theta = 1 + 2 sum q^{n^2}
Complex theta_series_oracle(const Complex& z, int terms = 200) {
    PrecisionGuard guard(2 * working_digits());
    Complex zz(Real(z.re.str(0)), Real(z.im.str(0)));
    Complex q = exp(i_times(zz) * (2L * pi()));
    Complex acc(1L);
    for (long n = 1; n <= terms; ++n) acc += pow_int(q, n * n) * 2L;
    return acc;
}

Mat2 random_sl2(std::mt19937& rng, int words = 8) {
    std::uniform_int_distribution<int> pw(-3, 3);
    Mat2 g = Mat2::identity();
    for (int i = 0; i < words; ++i) g = g * (i % 2 ? Mat2::T(pw(rng)) : Mat2(1, 0, pw(rng), 1));
    return g;
}

}  // namespace

TEST_CASE("theta: dominant term, series oracle, periodicity") {
    PrecisionGuard guard(50);
    // z = 10i: theta = 1 + 2 e^{-20 pi} + ...
    Complex t10 = eval_theta(Complex(Real(0L), Real(10L)));
    Real expect = 1L + 2L * exp(-20L * pi());
    CHECK(abs(t10.re - expect).to_double() < 1e-48);
    // z = i against the raw summation oracle
    Complex ti = eval_theta(Complex(Real(0L), Real(1L)));
    CHECK(dist(ti, theta_series_oracle(Complex(Real(0L), Real(1L)), 50)) < 1e-48);
    // periodicity
    Complex z(Real("0.3"), Real("0.8"));
    CHECK(dist(eval_theta(z + Complex(Real(1L), Real(0L))), eval_theta(z)) < 1e-48);
}

TEST_CASE("theta at low heights goes through inversion and the cusp-1/2 chart") {
    PrecisionGuard guard(40);
    // low points near the three cusp regions of Gamma_0(4)
    for (auto [x, y] : std::initializer_list<std::pair<double, double>>{
             {0.02, 0.05}, {-0.27, 0.04}, {0.49, 0.07}, {0.5, 0.02}, {0.23, 0.11}, {-0.45, 0.06}}) {
        Complex z(Real::from_double(x), Real::from_double(y));
        CHECK(dist(eval_theta(z), theta_series_oracle(z, 400)) < 1e-35);
    }
}

TEST_CASE("eta transformation laws and dominant term") {
    PrecisionGuard guard(50);
    Complex z(Real("0.37"), Real("1.21"));
    Complex ratio_T = eval_eta(z + Complex(Real(1L), Real(0L))) / eval_eta(z);
    CHECK(dist(ratio_T, cis(pi() / 12L)) < 1e-46);
    // eta(-1/z) = sqrt(z/i) eta(z) at z = 2i and a generic point
    for (Complex w : {Complex(Real(0L), Real(2L)), Complex(Real("0.4"), Real("0.9"))}) {
        Complex lhs = eval_eta(Complex(-1L) / w);
        Complex rhs = sqrt(Complex(w.im, -w.re)) * eval_eta(w);
        CHECK(dist(lhs, rhs) < 1e-45);
    }
    Complex e10 = eval_eta(Complex(Real(0L), Real(10L)));
    CHECK(abs(e10.re - exp(-10L * pi() / 12L)).to_double() < 1e-12);
}

TEST_CASE("j1 special values and invariance") {
    PrecisionGuard guard(50);
    Complex ji = eval_j1(Complex(Real(0L), Real(1L)));
    CHECK(abs(ji.re - 984L).to_double() < 1e-44);
    CHECK(abs(ji.im).to_double() < 1e-44);
    Complex rho(Real(-1L) / 2L, sqrt(Real(3L)) / 2L);
    Complex jrho = eval_j1(rho);
    CHECK(abs(jrho.re + 744L).to_double() < 1e-43);
    // j(sqrt(-2)) = 8000
    Complex j2 = eval_j1(Complex(Real(0L), sqrt(Real(2L))));
    CHECK(abs(j2.re - 7256L).to_double() < 1e-43);

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> xd(-0.5, 0.5), yd(0.4, 2.0);
    Real tol = pow10(-(working_digits() - 10));
    for (int i = 0; i < 100; ++i) {
        Complex z(Real::from_double(xd(rng)), Real::from_double(yd(rng)));
        Mat2 g = random_sl2(rng);
        CHECK(dist(eval_j1(g.apply(z)), eval_j1(z)) < tol.to_double());
    }
    CHECK_THROWS_AS(eval_j1(Complex(Real(0L), Real(-1L))), std::domain_error);
}

TEST_CASE("integer q-series tables") {
    ZSeries j1 = j1_coefficients(6);  // c(-1)..c(4)
    CHECK(j1[0] == 1);
    CHECK(j1[1] == 0);
    CHECK(j1[2] == 196884);
    CHECK(j1[3] == 21493760);
    CHECK(j1[4] == 864299970);
    ZSeries r1 = theta_series(10);
    CHECK(r1[0] == 1);
    CHECK(r1[1] == 2);
    CHECK(r1[2] == 0);
    CHECK(r1[4] == 2);
    CHECK(r1[9] == 2);
    ZSeries r3 = theta3_series(10);
    CHECK(r3[0] == 1);
    CHECK(r3[1] == 6);
    CHECK(r3[2] == 12);
    CHECK(r3[3] == 8);
    CHECK(r3[4] == 6);
    CHECK(r3[5] == 24);
    CHECK(r3[7] == 0);
}

TEST_CASE("form_j1 coefficient access and insufficient-data error") {
    FormSpec f = form_j1(10);
    CHECK(f.coeff_int(-1) == 1);
    CHECK(f.coeff_int(0) == 0);
    CHECK(f.coeff_int(-5) == 0);
    CHECK(f.coeff_int(1) == 196884);
    CHECK_THROWS_AS(f.coeff(11), InsufficientData);
    try {
        f.coeff(42);
    } catch (const InsufficientData& e) {
        CHECK(e.needed == 42);
    }
}
