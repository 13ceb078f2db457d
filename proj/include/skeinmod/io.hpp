#pragma once

// Text and document formats consumed by the CLI.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skeinmod/skein.hpp"

namespace skeinmod {

/// Inline link-class spec: "[1,2]", "[1,0,0; 0,1,0]", "[id:beta, id:gamma]",
/// "[]". Components are ';'-separated; when the model has h1_rank 1, or every
/// entry is an id reference, ',' separates components as well.
LinkClass parse_alpha(std::string_view spec, const ManifoldModel& M);

/// Trace document:
///   {"alpha": [{"id": "beta"} | {"id"?: "x", "h": [..], "torsion_tag"?: ".."}, ...],
///    "moves": [{"type": "twist"|"self_cross"|"mixed_cross"|"slide",
///               "i": 1, "j"?: 2, "s"?: ±1, "t"?: [..]}, ...]}
/// Component indices in the document are 1-based.
MoveTrace trace_from_json(const nlohmann::json& doc, const ManifoldModel& M);
MoveTrace trace_from_file(const std::filesystem::path& path, const ManifoldModel& M);
nlohmann::json trace_to_json(const MoveTrace& trace);

/// One "coefficient [label]" term of an element rendering.
struct ElementTextTerm {
  LaurentPoly2 coefficient;
  std::string label;  // text between the brackets
};

/// Parses "q1^3 q2 [x] - (q1 + 1) [1,2]". A missing coefficient means 1.
std::vector<ElementTextTerm> parse_element_text(std::string_view text);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace skeinmod
