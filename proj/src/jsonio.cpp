#include "smt/jsonio.hpp"

namespace smt {

namespace {

json entry_json(long d, const Complex& v, const Real& err) {
    return json{{"d", d}, {"re", v.re.str()}, {"im", v.im.str()}, {"err", err.str(5)}};
}

}  // namespace

std::string complex_str(const Complex& z, int digits) {
    return z.re.str(digits) + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).str(digits) + "i";
}

json trace_table_to_json(const TraceTable& tab) {
    json j;
    j["form"] = tab.form;
    j["precision"] = tab.precision;
    json traces = json::array();
    for (const auto& [absd, e] : tab.neg) traces.push_back(entry_json(-absd, e.value, e.err));
    if (tab.zero) traces.push_back(entry_json(0, tab.zero->value, tab.zero->err));
    for (const auto& [d, e] : tab.pos) traces.push_back(entry_json(d, e.value, e.err));
    j["traces"] = traces;
    json comp = json::array();
    for (const auto& [d, v] : tab.comp) comp.push_back(entry_json(d, v, Real(0L)));
    j["comp"] = comp;
    return j;
}

TraceTable trace_table_from_json(const json& j) {
    TraceTable tab;
    tab.form = j.at("form").get<std::string>();
    tab.precision = j.at("precision").get<int>();
    for (const auto& e : j.at("traces")) {
        long d = e.at("d").get<long>();
        TraceEntry te{Complex(Real(e.at("re").get<std::string>()), Real(e.at("im").get<std::string>())),
                      Real(e.at("err").get<std::string>())};
        if (d < 0) tab.neg[-d] = te;
        else if (d == 0) tab.zero = te;
        else tab.pos[d] = te;
    }
    if (j.contains("comp"))
        for (const auto& e : j.at("comp"))
            tab.comp[e.at("d").get<long>()] =
                Complex(Real(e.at("re").get<std::string>()), Real(e.at("im").get<std::string>()));
    return tab;
}

json cusp_expansion_to_json(const CuspExpansion& ce) {
    json j;
    j["gamma"] = {ce.gamma.a.get_str(), ce.gamma.b.get_str(), ce.gamma.c.get_str(), ce.gamma.d.get_str()};
    j["weight_twice"] = ce.weight.twice;
    j["kappa"] = ce.kappa.str();
    j["lambda"] = ce.lambda;
    json coeffs = json::array();
    for (const auto& [n, b] : ce.coeffs) {
        Real err;
        auto it = ce.errs.find(n);
        if (it != ce.errs.end()) err = it->second;
        coeffs.push_back(entry_json(n, b, err));
    }
    j["coeffs"] = coeffs;
    return j;
}

json radial_report_to_json(const RadialReport& rep) {
    json j;
    j["r"] = rep.r_num.get_str() + "/" + rep.r_den.get_str();
    j["D"] = rep.D;
    j["c_r"] = {{"re", rep.c_r.re.str()}, {"im", rep.c_r.im.str()}};
    json sched = json::array();
    for (std::size_t i = 0; i < rep.schedule.size(); ++i) {
        sched.push_back(json{{"t", rep.schedule[i].str(6)},
                             {"lhs_re", rep.lhs_values[i].re.str()},
                             {"lhs_im", rep.lhs_values[i].im.str()},
                             {"abs_lhs_minus_rhs", abs(rep.lhs_values[i] - rep.rhs).str(6)}});
    }
    j["schedule"] = sched;
    j["lhs_extrapolated"] = {{"re", rep.lhs_extrapolated.re.str()}, {"im", rep.lhs_extrapolated.im.str()}};
    j["rhs"] = {{"re", rep.rhs.re.str()}, {"im", rep.rhs.im.str()}};
    j["residual"] = rep.residual.str(6);
    j["tail_bound_spec_envelope"] = rep.tail_spec.str(5);
    j["tail_bound_empirical"] = rep.tail_emp.str(5);
    j["trend_nonincreasing"] = rep.trend_nonincreasing;
    j["notes"] = rep.notes;
    return j;
}

}  // namespace smt
