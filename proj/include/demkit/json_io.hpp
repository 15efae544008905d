#pragma once

#include <string>

#include "json.hpp"

#include "demkit/dem2.hpp"
#include "demkit/monitor.hpp"
#include "demkit/reduction.hpp"
#include "demkit/solver.hpp"

namespace demkit {

using json = nlohmann::json;

// All payloads carry "schema": 1 and keep keys sorted / arrays in canonical
// order so identical inputs produce byte-identical documents. Timing lives
// in a separate "meta" object excluded from determinism comparisons.

json to_json(const Bounds& b);
json to_json(const SolveResult& r, const Bounds& b);
json to_json(const MonitoredEdges& m);
json to_json(const Signature& s);
json to_json(const LocalizationTable& t, int vertex_count);
json to_json(const Dem2Verdict& v);
json to_json(const Dem2Result& r);
json to_json(const ReductionOutput& out,
             const std::vector<int>& forced_sets);
json to_json(const ReductionReport& rep);

LocalizationTable table_from_json(const json& doc);

// doc + {"meta": {"runtime_ms": ...}} rendered with 2-space indentation
std::string render_with_meta(json doc, double runtime_ms);

}  // namespace demkit
