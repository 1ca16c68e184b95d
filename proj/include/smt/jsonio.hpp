#ifndef SMT_JSONIO_HPP
#define SMT_JSONIO_HPP

#include <json.hpp>
#include <string>

#include "smt/cuspexp.hpp"
#include "smt/radial.hpp"
#include "smt/traces.hpp"

namespace smt {

using nlohmann::json;

// Every numeric field serializes as a decimal string so round-trips keep
// full precision.
json trace_table_to_json(const TraceTable& tab);
TraceTable trace_table_from_json(const json& j);

json cusp_expansion_to_json(const CuspExpansion& ce);
json radial_report_to_json(const RadialReport& rep);

std::string complex_str(const Complex& z, int digits = 0);

}  // namespace smt

#endif
