#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "flagcover/certify.hpp"
#include "flagcover/cover3.hpp"
#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"
#include "flagcover/prism.hpp"

namespace flagcover::io {

using nlohmann::json;

/// {"field": "rational" | {"prime": p}, "d": n, "flags": [matrix, ...]}, each
/// matrix a list of d columns of d scalar strings.
json field_to_json(const Field& field);
Field field_from_json(const json& j);

json flags_to_json(const FlagTuple& t);
/// Throws InvalidArgument on schema violations.
FlagTuple flags_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, const Field& field, std::size_t d);

/// {"size": n, "sets": [{"layers": [{"flag": "U", "level": i}, ...],
///   "witness": [scalars]}]}
json generating_set_to_json(const GeneratingSet& s);
GeneratingSet generating_set_from_json(const json& j, const Field& field, std::size_t d);

json classification_to_json(const CycleClassification& c);
/// Sizes, per-cycle costs, the inequality |A|/2 + |B|/3 >= d and pass/fail.
json certificate_to_json(const CostReport& report);
json graph_to_json(const PrismGraph& g);

json read_json(const std::filesystem::path& path);
/// Writes to a sibling temporary and renames it into place.
void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace flagcover::io
