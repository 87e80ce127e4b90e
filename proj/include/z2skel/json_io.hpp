// json_io.hpp
// The canonical JSON interchange format for skeletons, the uncolored-graph
// and search-spec inputs, and the JSON/DOT exports used by the CLI.

#pragma once

#include <string>

#include <json.hpp>

#include "z2skel/connectivity.hpp"
#include "z2skel/duality.hpp"
#include "z2skel/faces.hpp"
#include "z2skel/generators.hpp"
#include "z2skel/obstruction.hpp"
#include "z2skel/skeleton.hpp"

namespace z2skel {

using json = nlohmann::json;

// {"k":.., "n":.., "vertices":[..], "edges":[{"id","ends","color"}]}
ColoredSkeleton skeleton_from_json(const json& doc);
ColoredSkeleton load_skeleton_file(const std::string& path);
json skeleton_to_json(const ColoredSkeleton& s);

// same shape without "k" and colors
UncoloredMultigraph graph_from_json(const json& doc);
UncoloredMultigraph load_graph_file(const std::string& path);

SearchSpec search_spec_from_json(const json& doc);
SearchSpec load_search_spec_file(const std::string& path);

json face_to_json(const ColoredSkeleton& s, const Face& f);
json validation_to_json(const ValidationReport& r);
json connectivity_to_json(const ConnectivityReport& r);
json poset_to_json(const ColoredSkeleton& s, const SimplicialPoset& p);
json lambda_to_json(const ColoredSkeleton& s, const CharacteristicFunction& cf);
json fraction_to_json(const GF2Fraction& f);

std::string to_dot(const ColoredSkeleton& s);

// FNV-1a 64-bit over the raw file bytes, as "fnv1a64:<hex>"
std::string content_hash(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace z2skel
