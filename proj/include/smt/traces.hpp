#ifndef SMT_TRACES_HPP
#define SMT_TRACES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smt/formspec.hpp"
#include "smt/qforms.hpp"

namespace smt {

struct TraceEntry {
    Complex value;
    Real err;  // reported numerical error bound
};

// All modular traces of one form: CM traces (d < 0), cycle-integral traces
// (d > 0, squares via the cusp-period formula), the regularized average
// Tr_0, and complementary traces Tr^c_{d^2}. Immutable once built.
struct TraceTable {
    std::string form;
    int precision = 50;
    std::map<long, TraceEntry> neg;   // key |d| for index d < 0
    std::map<long, TraceEntry> pos;   // index d > 0
    std::map<long, Complex> comp;     // d >= 1 -> Tr^c_{d^2}
    std::optional<TraceEntry> zero;

    const TraceEntry& at_neg(long abs_d) const;
    const TraceEntry& at_pos(long d) const;
};

// Quadrature controls for cycle integrals.
struct CycleQuadOpts {
    double panel_len = 0.5;  // hyperbolic arclength per panel
    int gl_degree = 24;
    // optional off-apex base parameter (test hook for base-point independence)
    std::optional<Real> base_s;
};

// Tr_d(f) = sum over definite classes of f(z_Q)/|Gamma_Q|, d < 0.
Complex trace_neg(const FormSpec& f, long d);

// Cycle-integral trace for nonsquare d > 0: (1/2pi) sum of integrals of
// f(z)/Q(z,1) from z0 to g_{Q'} z0 along the geodesic. err gets the
// quadrature refinement residual.
TraceEntry trace_pos_nonsquare(const FormSpec& f, long d, const CycleQuadOpts& opts = {});

// Square index d = m^2: regularized infinite-geodesic periods via EI sums
// over both cusp charts. split_c <= 0 picks the balanced chart split.
TraceEntry trace_pos_square(const FormSpec& f, long d, double split_c = 0.0);

// Tr_0(f) = -(1/2pi) * regularized average; constant term must vanish.
TraceEntry trace_zero(const FormSpec& f, double truncation_T = 6.0);

// Tr^c_{d^2}(f) = 2d sum_{n<0} a(dn), exact finite sum.
Complex trace_comp(const FormSpec& f, long d);

// Largest coefficient index the square-index EI sums may demand when
// positive traces run through pos_max at `digits` working digits, from the
// pole-order-1 envelope |a(n)| <= e^{4 pi sqrt n} against e^{-2 pi n / m}.
long j1_table_demand(long pos_max, int digits);

// Populate a table: negative traces for |d| <= neg_max, positive traces
// (squares included) for d <= pos_max, Tr_0, complementary traces.
// Trace computations over distinct indices run on `jobs` threads.
TraceTable build_trace_table(const FormSpec& f, long neg_max, long pos_max, int jobs = 1,
                             const CycleQuadOpts& opts = {});

// partial_H = sum_{0<d<=D} Tr_d q^d. tail_* report bounds on the omitted
// d > D terms: tail_spec uses the C e^{4 pi sqrt d} envelope, tail_emp the
// empirically calibrated envelope (both x10 safety).
Complex partial_H(const TraceTable& tab, const Complex& z, long D,
                  Real* tail_spec = nullptr, Real* tail_emp = nullptr);

// Growth calibration over a table's positive traces: |Tr_d| <= C e^{K sqrt d}.
struct GrowthBound {
    Real C;
    Real K;
};
GrowthBound calibrate_pos_growth(const TraceTable& tab);   // K fitted from data
GrowthBound spec_pos_growth(const TraceTable& tab);        // K = 4 pi

// g_1-style generating series of the negative traces,
//   -(1/2) Tr^c_1 q^{-1} + (1/2) Tr_0 + sum_{d<0} Tr_d q^{|d|},
// truncated at the table's largest |d| with the C e^{4 pi sqrt d} tail bound
// reported in err_bound. Throws InsufficientData (carrying the needed cutoff)
// if the bound exceeds tol at this height.
Complex eval_g1(const TraceTable& tab, const Complex& z, Real* err_bound = nullptr,
                double tol = 1e-30);

}  // namespace smt

#endif
