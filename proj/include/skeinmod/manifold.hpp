#pragma once

// Homological model of an oriented 3-manifold: the intersection pairing
// H2 x H1 -> Z, the homology classes of tori swept by moving a loop of a
// given class, and the Hurewicz image of pi_2.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace skeinmod {

/// Class in H1(M)/torsion, optionally tagged with a torsion label. The tag
/// distinguishes classes but never enters a pairing.
struct HomologyClass1 {
  std::vector<std::int64_t> free;
  std::optional<std::string> torsion_tag;

  friend auto operator<=>(const HomologyClass1&, const HomologyClass1&) = default;
  friend bool operator==(const HomologyClass1&, const HomologyClass1&) = default;
};

/// Class in H2(M)/torsion.
struct HomologyClass2 {
  std::vector<std::int64_t> vec;

  friend auto operator<=>(const HomologyClass2&, const HomologyClass2&) = default;
  friend bool operator==(const HomologyClass2&, const HomologyClass2&) = default;
};

/// A free homotopy class of loops, at the fidelity the model supports.
struct ClassLabel {
  std::string id;
  HomologyClass1 h;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Canonical order: by homology, then id.
std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b);

/// Id given to classes specified only by their homology: "1", "1,0,-2".
std::string inline_id(const HomologyClass1& h);

/// Sweep rule: a loop of class h dragged once around basis direction e_k
/// sweeps a torus of class h ∧ e_k. Only meaningful for three-dimensional
/// flat models (n = m = 3).
enum class TorusRule { None, Sweep };

struct ManifoldModel {
  std::string name;
  std::size_t n = 0;  // rank of H1 / torsion
  std::size_t m = 0;  // rank of H2 / torsion
  std::vector<std::vector<std::int64_t>> pairing;  // m rows of n entries
  std::vector<HomologyClass2> torus_default;
  std::map<std::string, std::vector<HomologyClass2>> torus_exceptions;
  TorusRule torus_rule = TorusRule::None;
  std::vector<HomologyClass2> sphere_gens;
  std::vector<ClassLabel> classes;
  std::string boundary_note;

  /// Throws Error(Dimension) listing every inconsistent field.
  void validate() const;

  const ClassLabel* find_class(std::string_view id) const;

  friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;
};

/// s^T Λ h. Throws Error(Dimension) on length mismatch.
std::int64_t pairing_eval(const ManifoldModel& M, const HomologyClass2& s, const HomologyClass1& h);

/// Generators of the homology image of π1(𝕃M, f_c): the exception list for
/// c.id if one exists, else the rule output, else the default list.
std::vector<HomologyClass2> torus_subgroup(const ManifoldModel& M, const ClassLabel& c);

inline const std::vector<HomologyClass2>& sphere_subgroup(const ManifoldModel& M) {
  return M.sphere_gens;
}

/// Built-in models: "S3", "S2xS1", "T3", "lens" (p, q), "handlebody" (g).
ManifoldModel builtin(std::string_view name, std::span<const std::int64_t> params = {});

/// Parses a manifold document. Validation problems are collected and thrown
/// together: Error(Parse) if any is a schema problem, else Error(Dimension).
ManifoldModel model_from_json(const nlohmann::json& doc);
ManifoldModel model_from_file(const std::filesystem::path& path);

nlohmann::json model_to_json(const ManifoldModel& M);

/// Resolves "builtin:NAME[:p,q,...]" or a filesystem path.
ManifoldModel load_model(std::string_view spec);

}  // namespace skeinmod
