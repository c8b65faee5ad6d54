#pragma once

#include <lpont/pachner.hpp>

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace lpont {

using Json = nlohmann::ordered_json;

Json to_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

// [{"delta1": [...], "delta2": [...]}, ...]; subdivisions carry "new_vertex".
Json moves_to_json(const std::vector<Move>& moves);
// Resolves each step against the complex it applies to. "new_vertex" is optional for
// subdivisions (defaults to one above the largest label so far); "delta2", when
// present, must match. Throws MoveNotAdmissible naming the step, or Parse.
std::vector<Move> moves_from_json(const Json& j, const OrientedComplex& start);

Json read_json_file(const std::filesystem::path& path);

}  // namespace lpont
