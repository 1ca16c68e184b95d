#include <doctest.h>

#include <random>

#include "smt/arith.hpp"
#include "smt/modeval.hpp"

using namespace smt;

namespace {

// brute-force Legendre symbol by quadratic-residue search
int legendre_brute(long c, long p) {
    long cm = ((c % p) + p) % p;
    if (cm == 0) return 0;
    for (long x = 1; x < p; ++x)
        if ((x * x) % p == cm) return 1;
    return -1;
}

// random element of Gamma_0(4) with c > 0, via words in T and V = (1 0; 4 1)
Mat2 random_gamma04(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(2, 6), pow(-3, 3);
    Mat2 g = Mat2::identity();
    for (int i = 0; i < len(rng); ++i) {
        int p = pow(rng);
        if (p == 0) p = 1;
        g = g * (i % 2 == 0 ? Mat2(1, p, 0, 1) : Mat2(1, 0, 4 * p, 1));
    }
    if (g.c == 0) g = g * Mat2(1, 0, 4, 1);
    if (g.c < 0) g = -g;
    return g;
}

}  // namespace

TEST_CASE("epsilon_d") {
    CHECK(epsilon_d(mpz_class(1)) == RootU8::one());
    CHECK(epsilon_d(mpz_class(3)) == RootU8::i());
    CHECK(epsilon_d(mpz_class(-5)) == RootU8::i());  // -5 = 3 (mod 4)
    CHECK(epsilon_d(mpz_class(13)) == RootU8::one());
    CHECK_THROWS_AS(epsilon_d(mpz_class(2)), std::invalid_argument);
}

TEST_CASE("kronecker_ext matches brute force and the sign rules") {
    CHECK(kronecker_ext(0, 1) == 1);
    CHECK(kronecker_ext(0, -1) == 1);
    CHECK(kronecker_ext(2, 3) == -1);
    CHECK(kronecker_ext(3, -5) == -1);
    CHECK_THROWS_AS(kronecker_ext(1, 4), std::invalid_argument);
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        for (long c = -12; c <= 12; ++c) {
            CHECK(kronecker_ext(c, p) == legendre_brute(c, p));
            // negative odd d: (c/d) = sign(c) (c/|d|), 0 at c = 0 unless |d| = 1
            int expect = c > 0 ? legendre_brute(c, p) : (c < 0 ? -legendre_brute(c, p) : 0);
            CHECK(kronecker_ext(c, -p) == expect);
        }
    }
    // multiplicativity in d: (c/15) = (c/3)(c/5)
    for (long c = 1; c <= 14; ++c)
        CHECK(kronecker_ext(c, 15) == legendre_brute(c, 3) * legendre_brute(c, 5));
}

TEST_CASE("chi_theta basic values") {
    CHECK(chi_theta(Mat2::identity()) == RootU8::one());
    CHECK(chi_theta(Mat2::T()) == RootU8::one());
    CHECK(chi_theta(Mat2(1, 0, 4, 1)) == RootU8::one());
    CHECK(chi_theta(-Mat2::identity()) == RootU8(6));  // -i
    CHECK_THROWS_AS(chi_theta(Mat2::S()), std::invalid_argument);
}

TEST_CASE("section-5 identity: eps_d^{-1}(c/d) = eps_a^{-1}(c/a) for c > 0") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        Mat2 g = random_gamma04(rng);
        RootU8 via_d = chi_theta(g);
        RootU8 via_a = epsilon_d(g.a).inverse() *
                       (kronecker_ext(g.c, g.a) == 1 ? RootU8::one() : RootU8::minus_one());
        CHECK(via_d == via_a);
    }
}

TEST_CASE("chi_theta equals the numeric ratio theta(gz)/((cz+d)^{1/2} theta(z))") {
    PrecisionGuard guard(50);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> xd(-0.9, 0.9), yd(0.3, 2.0);
    Real tol = pow10(-(working_digits() - 10));
    for (int trial = 0; trial < 40; ++trial) {
        Mat2 g = random_gamma04(rng);
        Complex z(Real::from_double(xd(rng)), Real::from_double(yd(rng)));
        Complex ratio = eval_theta(g.apply(z)) / (sqrt(g.j_factor(z)) * eval_theta(z));
        CHECK(abs(ratio - chi_theta(g).value()).to_double() < tol.to_double());
    }
}

TEST_CASE("multiplier consistency condition") {
    PrecisionGuard guard(50);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> xd(-0.5, 0.5), yd(0.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        Mat2 g1 = random_gamma04(rng), g2 = random_gamma04(rng);
        Complex z(Real::from_double(xd(rng)), Real::from_double(yd(rng)));
        Complex lhs = chi_theta(g1 * g2).value() * sqrt((g1 * g2).j_factor(z));
        Complex rhs = chi_theta(g1).value() * sqrt(g1.j_factor(g2.apply(z))) * chi_theta(g2).value() *
                      sqrt(g2.j_factor(z));
        CHECK(abs(lhs - rhs).to_double() < 1e-40);
    }
}

TEST_CASE("cusp_matrix builds gamma with gamma(inf) = p/q") {
    Mat2 g = cusp_matrix(1, 4);
    CHECK(g.det() == 1);
    CHECK(g.a == 1);
    CHECK(g.c == 4);
    Mat2 h = cusp_matrix(3, 4);
    CHECK(h.det() == 1);
    auto [p, q] = h.cusp();
    CHECK(p == 3);
    CHECK(q == 4);
}
