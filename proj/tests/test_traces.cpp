#include <doctest.h>

#include <cmath>

#include "smt/lreg.hpp"
#include "smt/traces.hpp"

using namespace smt;

namespace {

double rdist(const Complex& v, const char* expect) { return abs(v.re - Real(std::string(expect))).to_double(); }

const FormSpec& j1_form() {
    static FormSpec f = [] {
        PrecisionGuard guard(50);
        return form_j1(j1_table_demand(40, 50));  // positive traces go through d = 40
    }();
    return f;
}

}  // namespace

TEST_CASE("negative traces: the g_1 coefficients") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    CHECK(rdist(trace_neg(f, -3), "-248") < 1e-40);
    CHECK(rdist(trace_neg(f, -4), "492") < 1e-40);
    CHECK(rdist(trace_neg(f, -7), "-4119") < 1e-38);
    CHECK(rdist(trace_neg(f, -8), "7256") < 1e-38);
    CHECK_THROWS_AS(trace_neg(f, -1), std::invalid_argument);  // -1 = 3 (mod 4)
    CHECK_THROWS_AS(trace_neg(f, -5), std::invalid_argument);
}

TEST_CASE("integrality and realness of Tr_d(j1), -100 <= d < 0") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    for (long d = -3; d >= -100; --d) {
        if (!valid_disc(mpz_class(d))) continue;
        Complex v = trace_neg(f, d);
        Real nearest = round_nearest(v.re);
        CHECK_MESSAGE(abs(v.re - nearest).to_double() < 1e-10, "d = ", d);
        CHECK(abs(v.im).to_double() < 1e-38);
    }
}

TEST_CASE("regularized average Tr_0(j1) = 4") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    TraceEntry t6 = trace_zero(f);  // default T = 6
    CHECK(std::abs(t6.value.re.to_double() - 4.0) < 1e-5);
    CHECK(abs(t6.value.im).to_double() < 1e-20);
    // T-independence of the truncation
    TraceEntry t4 = trace_zero(f, 4.0);
    TraceEntry t8 = trace_zero(f, 8.0);
    CHECK(abs(t4.value.re - t8.value.re).to_double() < 1e-6);
    // zero form
    TraceEntry z = trace_zero(form_zero());
    CHECK(abs(z.value).to_double() < 1e-30);
}

TEST_CASE("complementary traces") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    Complex c1 = trace_comp(f, 1);
    CHECK(c1.re.to_double() == 2.0);
    CHECK(c1.im.is_zero());
    for (long d = 2; d <= 10; ++d) CHECK(trace_comp(f, d).is_zero());
}

TEST_CASE("square-index traces: c-independence, chart change, doubled precision") {
    const FormSpec& f = j1_form();
    PrecisionGuard guard(50);
    TraceEntry a = trace_pos_square(f, 1, 1.0);
    TraceEntry b = trace_pos_square(f, 1, 2.0);
    CHECK(abs(a.value - b.value).to_double() < 1e-12);
    // frozen fixtures (two-c agreement + doubled-precision rerun oracle)
    CHECK(rdist(a.value, "-16.0284504447542575258610634059") < 1e-27);
    TraceEntry s4 = trace_pos_square(f, 4);
    CHECK(rdist(s4.value, "-19.9933331592340727167086176059") < 1e-27);
    CHECK(abs(s4.value.im).to_double() < 1e-40);
    {
        PrecisionGuard high(80);
        FormSpec f80 = form_j1(200);
        TraceEntry a80 = trace_pos_square(f80, 1);
        TraceEntry s4_80 = trace_pos_square(f80, 4);
        PrecisionGuard back(50);
        CHECK(abs(a80.value - a.value).to_double() < 1e-40);
        CHECK(abs(s4_80.value - s4.value).to_double() < 1e-40);
    }
    CHECK_THROWS_AS(trace_pos_square(f, 5), std::invalid_argument);
}

TEST_CASE("cycle-integral traces: fixtures, base-point independence, realness") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    TraceEntry v5 = trace_pos_nonsquare(f, 5);
    TraceEntry v8 = trace_pos_nonsquare(f, 8);
    TraceEntry v12 = trace_pos_nonsquare(f, 12);
    // frozen fixtures from the two-base-point protocol
    CHECK(rdist(v5.value, "-5.16162943212610944207046402672") < 1e-25);
    CHECK(rdist(v8.value, "-6.76612584468507644490926085428") < 1e-25);
    CHECK(rdist(v12.value, "-8.27912646199456876489132218233") < 1e-24);
    for (const auto& e : {v5, v8, v12}) CHECK(abs(e.value.im).to_double() < 1e-30);
    // independence of the base point on the geodesic (holomorphic integrand)
    CycleQuadOpts shifted;
    shifted.base_s = Real("0.7");
    for (long d : {5L, 8L, 12L}) {
        TraceEntry at_apex = trace_pos_nonsquare(f, d);
        TraceEntry off_apex = trace_pos_nonsquare(f, d, shifted);
        CHECK_MESSAGE(abs(at_apex.value - off_apex.value).to_double() < 1e-15, "d = ", d);
    }
    CHECK_THROWS_AS(trace_pos_nonsquare(f, 9), std::invalid_argument);
    CHECK_THROWS_AS(trace_pos_nonsquare(f, 6), std::invalid_argument);  // 6 = 2 (mod 4)
}

TEST_CASE("trace table build, assemble_W, partial_H") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    TraceTable tab = build_trace_table(f, 24, 20, 4);
    CHECK(tab.neg.at(3).value.re.to_double() == doctest::Approx(-248.0));
    CHECK(tab.pos.at(5).value.re.to_double() == doctest::Approx(-5.161629432));
    CHECK(tab.pos.at(16).value.re.to_double() == doctest::Approx(trace_pos_square(f, 16).value.re.to_double()));
    REQUIRE(tab.zero.has_value());

    FourierData w = assemble_W(tab);
    CHECK(abs(w.coeff(-1) - Complex(-1L)).to_double() < 1e-30);
    CHECK(abs(w.coeff(0) - Complex(2L)).to_double() < 1e-20);
    CHECK(abs(w.coeff(3) - Complex(-248L)).to_double() < 1e-30);
    CHECK(abs(w.coeff(4) - Complex(492L)).to_double() < 1e-30);
    CHECK(w.n_min == -1);

    // partial_H: empty sum, periodicity, missing-data error
    Complex z(Real("0.13"), Real("0.4"));
    CHECK(partial_H(tab, z, 0).is_zero());
    Complex h = partial_H(tab, z, 20);
    Complex hshift = partial_H(tab, z + Complex(Real(1L), Real(0L)), 20);
    CHECK(abs(h - hshift).to_double() < 1e-40);
    CHECK_THROWS_AS(partial_H(tab, z, 40), InsufficientData);

    // tail bounds: doubling D stays below the reported bound at modest height
    TraceTable tab2 = build_trace_table(f, 24, 40, 4);
    Complex z2(Real("0.1"), Real("0.2"));
    Real ts, te;
    Complex h20 = partial_H(tab2, z2, 20, &ts, &te);
    Complex h40 = partial_H(tab2, z2, 40);
    Real ts20, te20;
    partial_H(tab2, z2, 20, &ts20, &te20);
    CHECK(abs(h40 - h20).to_double() < ts20.to_double());
    CHECK(abs(h40 - h20).to_double() < te20.to_double());
    CHECK(te20.to_double() < ts20.to_double());  // empirical envelope is the sharper one
}

TEST_CASE("eval_g1: coefficient data, periodicity, truncation bound") {
    PrecisionGuard guard(50);
    const FormSpec& f = j1_form();
    TraceTable tab = build_trace_table(f, 40, 4, 4);
    // q^3 and q^4 coefficients are the g_1 values
    CHECK(tab.neg.at(3).value.re.to_double() == doctest::Approx(-248.0));
    CHECK(tab.neg.at(4).value.re.to_double() == doctest::Approx(492.0));
    Complex z(Real("0.21"), Real("1.1"));
    Real bound;
    Complex g = eval_g1(tab, z, &bound);
    Complex gshift = eval_g1(tab, z + Complex(Real(1L), Real(0L)));
    CHECK(abs(g - gshift).to_double() < 1e-40);
    // reported bound dominates the observed cutoff difference
    TraceTable tab2 = build_trace_table(f, 80, 4, 4);
    Complex g2 = eval_g1(tab2, z);
    CHECK(abs(g2 - g).to_double() < bound.to_double());
    // insufficient data at low height carries a cutoff demand
    try {
        eval_g1(tab, Complex(Real("0.1"), Real("0.05")));
        CHECK(false);
    } catch (const InsufficientData& e) {
        CHECK(e.needed > 40);
    }
}
