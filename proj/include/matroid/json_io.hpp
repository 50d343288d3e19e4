#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "matroid/check_report.hpp"
#include "matroid/linearalg.hpp"
#include "matroid/matroid.hpp"
#include "matroid/transversal.hpp"

namespace matroid::io {

using nlohmann::json;

// Parses a matroid source object:
//   {"ground": [...], "kind": "rank_table" | "bases" | "uniform", "data": ...}
//   {"kind": "set_system", "ground": [...], "sets": [[...], ...]}
//   {"kind": "matrix", "p": ..., "rows": ..., "cols": [...], "entries": [[...]]}
// All errors are reported as ParseError naming the offending path.
Matroid matroid_from_json(const json& j, const std::string& path = "$");

// Serializes as the canonical rank_table form.
json matroid_to_json(const Matroid& m);

FpMatrix matrix_from_json(const json& j, const std::string& path = "$");
json matrix_to_json(const FpMatrix& d);

SetSystem set_system_from_json(const json& j, const std::string& path = "$");
json set_system_to_json(const SetSystem& s);

// Evaluates a construction expression: either a matroid source object or
//   {"op": "...", ...}  with operands that are themselves expressions.
Matroid eval_expression(const json& j, const std::string& path = "$");

// A family of subsets as label lists, sorted lexicographically.
json family_to_json(const GroundSet& g, const std::vector<Mask>& family);

json report_to_json(const CheckReport& r);

}  // namespace matroid::io
