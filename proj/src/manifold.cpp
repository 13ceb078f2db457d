#include "skeinmod/manifold.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "skeinmod/arith.hpp"
#include "skeinmod/error.hpp"

namespace skeinmod {

using nlohmann::json;

namespace {

std::string render_vector(std::span<const std::int64_t> v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + "]";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

// h ∧ v in the basis (e2∧e3, e3∧e1, e1∧e2): the cross product.
HomologyClass2 wedge3(std::span<const std::int64_t> h, std::span<const std::int64_t> v) {
  return {{h[1] * v[2] - h[2] * v[1], h[2] * v[0] - h[0] * v[2], h[0] * v[1] - h[1] * v[0]}};
}

}  // namespace

std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b) {
  if (auto c = a.h <=> b.h; c != 0) return c;
  return a.id <=> b.id;
}

std::string inline_id(const HomologyClass1& h) {
  std::string out;
  for (std::size_t k = 0; k < h.free.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(h.free[k]);
  }
  return out;
}

void ManifoldModel::validate() const {
  std::vector<std::string> problems;
  if (pairing.size() != m) {
    problems.push_back("pairing has " + std::to_string(pairing.size()) + " rows, expected h2_rank=" +
                       std::to_string(m));
  }
  for (std::size_t r = 0; r < pairing.size(); ++r) {
    if (pairing[r].size() != n) {
      problems.push_back("pairing row " + std::to_string(r) + " has length " +
                         std::to_string(pairing[r].size()) + ", expected h1_rank=" + std::to_string(n));
    }
  }
  auto check_h2 = [&](const std::string& where, const std::vector<HomologyClass2>& list) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k].vec.size() != m) {
        problems.push_back(where + "[" + std::to_string(k) + "] = " + render_vector(list[k].vec) +
                           " has length " + std::to_string(list[k].vec.size()) +
                           ", expected h2_rank=" + std::to_string(m));
      }
    }
  };
  check_h2("torus_default", torus_default);
  for (const auto& [id, list] : torus_exceptions) check_h2("torus_exceptions." + id, list);
  check_h2("sphere_gens", sphere_gens);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].h.free.size() != n) {
      problems.push_back("classes[" + std::to_string(k) + "] (id " + classes[k].id + ") h = " +
                         render_vector(classes[k].h.free) + " has length " +
                         std::to_string(classes[k].h.free.size()) + ", expected h1_rank=" +
                         std::to_string(n));
    }
  }
  if (torus_rule == TorusRule::Sweep && (n != 3 || m != 3)) {
    problems.push_back("torus_rule \"sweep\" requires h1_rank = h2_rank = 3");
  }
  if (!problems.empty()) throw Error(ErrorKind::Dimension, join(problems, "; "));
}

const ClassLabel* ManifoldModel::find_class(std::string_view id) const {
  for (const ClassLabel& c : classes) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::int64_t pairing_eval(const ManifoldModel& M, const HomologyClass2& s, const HomologyClass1& h) {
  if (s.vec.size() != M.m) {
    throw Error(ErrorKind::Dimension, "surface class " + render_vector(s.vec) + " has length " +
                                          std::to_string(s.vec.size()) + ", expected " +
                                          std::to_string(M.m));
  }
  if (h.free.size() != M.n) {
    throw Error(ErrorKind::Dimension, "loop class " + render_vector(h.free) + " has length " +
                                          std::to_string(h.free.size()) + ", expected " +
                                          std::to_string(M.n));
  }
  wide_int acc = 0;
  for (std::size_t r = 0; r < M.m; ++r) {
    if (s.vec[r] == 0) continue;
    wide_int row = 0;
    for (std::size_t c = 0; c < M.n; ++c) row += static_cast<wide_int>(M.pairing[r][c]) * h.free[c];
    acc += row * s.vec[r];
  }
  return narrow_checked(acc);
}

std::vector<HomologyClass2> torus_subgroup(const ManifoldModel& M, const ClassLabel& c) {
  if (auto it = M.torus_exceptions.find(c.id); it != M.torus_exceptions.end()) return it->second;
  if (M.torus_rule == TorusRule::Sweep) {
    if (c.h.free.size() != 3) {
      throw Error(ErrorKind::Dimension, "class " + c.id + " has length " +
                                            std::to_string(c.h.free.size()) + ", expected 3");
    }
    std::vector<HomologyClass2> out;
    for (std::size_t k = 0; k < 3; ++k) {
      std::array<std::int64_t, 3> e{};
      e[k] = 1;
      out.push_back(wedge3(c.h.free, e));
    }
    return out;
  }
  return M.torus_default;
}

ManifoldModel builtin(std::string_view name, std::span<const std::int64_t> params) {
  auto want_params = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::Invalid, "builtin " + std::string(name) + " takes " +
                                          std::to_string(count) + " parameter(s), got " +
                                          std::to_string(params.size()));
    }
  };
  ManifoldModel M;
  if (name == "S3") {
    want_params(0);
    M.name = "S3";
    M.boundary_note = "3-sphere; H1 = H2 = 0";
  } else if (name == "S2xS1") {
    want_params(0);
    M.name = "S2xS1";
    M.n = 1;
    M.m = 1;
    M.pairing = {{1}};
    M.torus_default = {{{1}}};
    M.sphere_gens = {{{1}}};
    M.boundary_note = "H1 = Z generated by the core *xS1; H2 = Z generated by S2x*";
  } else if (name == "T3") {
    want_params(0);
    M.name = "T3";
    M.n = 3;
    M.m = 3;
    // H2 basis (e2∧e3, e3∧e1, e1∧e2) is dual to (e1, e2, e3).
    M.pairing = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    M.torus_rule = TorusRule::Sweep;
    M.boundary_note = "3-torus; aspherical, swept tori h∧e_k";
  } else if (name == "lens") {
    want_params(2);
    const std::int64_t p = params[0];
    const std::int64_t q = params[1];
    if (p <= 0) throw Error(ErrorKind::Invalid, "lens space needs p > 0, got p=" + std::to_string(p));
    if (std::gcd(p, q < 0 ? -q : q) != 1) {
      throw Error(ErrorKind::Invalid, "lens space needs gcd(p,q) = 1, got p=" + std::to_string(p) +
                                          " q=" + std::to_string(q));
    }
    M.name = "lens(" + std::to_string(p) + "," + std::to_string(q) + ")";
    for (std::int64_t k = 0; k < p; ++k) {
      M.classes.push_back({"a^" + std::to_string(k), {{}, "Z/" + std::to_string(p) + ":" + std::to_string(k)}});
    }
    M.boundary_note = "H1 = Z/p torsion only; H2 = 0";
  } else if (name == "handlebody") {
    want_params(1);
    const std::int64_t g = params[0];
    if (g < 0) throw Error(ErrorKind::Invalid, "handlebody needs genus g >= 0, got " + std::to_string(g));
    M.name = "handlebody(" + std::to_string(g) + ")";
    M.n = static_cast<std::size_t>(g);
    M.boundary_note = "H1 = Z^g, H2 = 0";
  } else {
    throw Error(ErrorKind::Invalid, "unknown builtin model \"" + std::string(name) + "\"");
  }
  M.validate();
  return M;
}

namespace {

class DocReader {
 public:
  std::vector<std::string> schema;
  std::vector<std::string> dimension;

  std::optional<std::int64_t> integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
      schema.push_back(where + " must be an integer");
      return std::nullopt;
    }
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      schema.push_back(where + " is out of range");
      return std::nullopt;
    }
    return v.get<std::int64_t>();
  }

  std::optional<std::vector<std::int64_t>> vector(const json& v, const std::string& where,
                                                  std::optional<std::size_t> len) {
    if (!v.is_array()) {
      schema.push_back(where + " must be an array of integers");
      return std::nullopt;
    }
    std::vector<std::int64_t> out;
    bool ok = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
      auto x = integer(v[k], where + "[" + std::to_string(k) + "]");
      if (x) {
        out.push_back(*x);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    if (len && out.size() != *len) {
      dimension.push_back(where + " = " + render_vector(out) + " has length " +
                          std::to_string(out.size()) + ", expected " + std::to_string(*len));
      return std::nullopt;
    }
    return out;
  }

  std::vector<HomologyClass2> h2_list(const json& v, const std::string& where,
                                      std::optional<std::size_t> m) {
    std::vector<HomologyClass2> out;
    if (!v.is_array()) {
      schema.push_back(where + " must be an array of vectors");
      return out;
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (auto vec = vector(v[k], where + "[" + std::to_string(k) + "]", m)) out.push_back({*vec});
    }
    return out;
  }
};

}  // namespace

ManifoldModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "manifold document must be a JSON object");

  static const std::set<std::string> known = {"name",         "h1_rank",     "h2_rank",
                                              "pairing",      "torus_default", "torus_exceptions",
                                              "torus_rule",   "sphere_gens", "classes",
                                              "boundary_note"};
  DocReader rd;
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) rd.schema.push_back("unknown field \"" + key + "\"");
  }
  for (const char* req : {"name", "h1_rank", "h2_rank", "pairing", "torus_default", "sphere_gens"}) {
    if (!doc.contains(req)) rd.schema.push_back(std::string("missing required field \"") + req + "\"");
  }

  ManifoldModel M;
  std::optional<std::size_t> n, m;
  if (doc.contains("name")) {
    if (doc["name"].is_string()) {
      M.name = doc["name"].get<std::string>();
    } else {
      rd.schema.push_back("name must be a string");
    }
  }
  auto rank = [&](const char* key) -> std::optional<std::size_t> {
    if (!doc.contains(key)) return std::nullopt;
    auto r = rd.integer(doc[key], key);
    if (r && *r < 0) {
      rd.schema.push_back(std::string(key) + " must be >= 0");
      return std::nullopt;
    }
    return r ? std::optional<std::size_t>(static_cast<std::size_t>(*r)) : std::nullopt;
  };
  n = rank("h1_rank");
  m = rank("h2_rank");
  if (n) M.n = *n;
  if (m) M.m = *m;

  if (doc.contains("pairing")) {
    const json& P = doc["pairing"];
    if (!P.is_array()) {
      rd.schema.push_back("pairing must be an array of rows");
    } else {
      if (m && P.size() != *m) {
        rd.dimension.push_back("pairing has " + std::to_string(P.size()) +
                               " rows, expected h2_rank=" + std::to_string(*m));
      }
      for (std::size_t r = 0; r < P.size(); ++r) {
        if (auto row = rd.vector(P[r], "pairing[" + std::to_string(r) + "]", n)) {
          M.pairing.push_back(*row);
        }
      }
    }
  }
  if (doc.contains("torus_default")) M.torus_default = rd.h2_list(doc["torus_default"], "torus_default", m);
  if (doc.contains("sphere_gens")) M.sphere_gens = rd.h2_list(doc["sphere_gens"], "sphere_gens", m);
  if (doc.contains("torus_exceptions")) {
    const json& T = doc["torus_exceptions"];
    if (!T.is_object()) {
      rd.schema.push_back("torus_exceptions must be an object mapping class ids to vector lists");
    } else {
      for (const auto& [id, list] : T.items()) {
        M.torus_exceptions[id] = rd.h2_list(list, "torus_exceptions." + id, m);
      }
    }
  }
  if (doc.contains("torus_rule")) {
    const json& R = doc["torus_rule"];
    if (R.is_string() && R.get<std::string>() == "sweep") {
      M.torus_rule = TorusRule::Sweep;
    } else {
      rd.schema.push_back("torus_rule must be absent or the string \"sweep\"");
    }
  }
  if (doc.contains("boundary_note")) {
    if (doc["boundary_note"].is_string()) {
      M.boundary_note = doc["boundary_note"].get<std::string>();
    } else {
      rd.schema.push_back("boundary_note must be a string");
    }
  }
  if (doc.contains("classes")) {
    const json& C = doc["classes"];
    if (!C.is_array()) {
      rd.schema.push_back("classes must be an array");
    } else {
      std::set<std::string> seen;
      for (std::size_t k = 0; k < C.size(); ++k) {
        const std::string where = "classes[" + std::to_string(k) + "]";
        const json& c = C[k];
        if (!c.is_object()) {
          rd.schema.push_back(where + " must be an object");
          continue;
        }
        for (const auto& [key, _] : c.items()) {
          if (key != "id" && key != "h" && key != "torsion_tag") {
            rd.schema.push_back(where + " has unknown field \"" + key + "\"");
          }
        }
        ClassLabel label;
        if (c.contains("id") && c["id"].is_string()) {
          label.id = c["id"].get<std::string>();
          if (!seen.insert(label.id).second) rd.schema.push_back(where + " repeats id \"" + label.id + "\"");
        } else {
          rd.schema.push_back(where + ".id must be a string");
        }
        if (c.contains("h")) {
          if (auto h = rd.vector(c["h"], where + ".h", n)) label.h.free = *h;
        } else {
          rd.schema.push_back(where + " is missing h");
        }
        if (c.contains("torsion_tag")) {
          if (c["torsion_tag"].is_string()) {
            label.h.torsion_tag = c["torsion_tag"].get<std::string>();
          } else {
            rd.schema.push_back(where + ".torsion_tag must be a string");
          }
        }
        M.classes.push_back(std::move(label));
      }
    }
  }
  if (M.torus_rule == TorusRule::Sweep && n && m && (*n != 3 || *m != 3)) {
    rd.dimension.push_back("torus_rule \"sweep\" requires h1_rank = h2_rank = 3");
  }

  if (!rd.schema.empty()) {
    std::vector<std::string> all = rd.schema;
    all.insert(all.end(), rd.dimension.begin(), rd.dimension.end());
    throw Error(ErrorKind::Parse, join(all, "; "));
  }
  if (!rd.dimension.empty()) throw Error(ErrorKind::Dimension, join(rd.dimension, "; "));
  M.validate();
  return M;
}

ManifoldModel model_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open manifold document " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return model_from_json(doc);
}

json model_to_json(const ManifoldModel& M) {
  auto h2 = [](const std::vector<HomologyClass2>& list) {
    json arr = json::array();
    for (const auto& s : list) arr.push_back(s.vec);
    return arr;
  };
  json doc;
  doc["name"] = M.name;
  doc["h1_rank"] = M.n;
  doc["h2_rank"] = M.m;
  doc["pairing"] = json::array();
  for (const auto& row : M.pairing) doc["pairing"].push_back(row);
  doc["torus_default"] = h2(M.torus_default);
  doc["torus_exceptions"] = json::object();
  for (const auto& [id, list] : M.torus_exceptions) doc["torus_exceptions"][id] = h2(list);
  if (M.torus_rule == TorusRule::Sweep) doc["torus_rule"] = "sweep";
  doc["sphere_gens"] = h2(M.sphere_gens);
  doc["classes"] = json::array();
  for (const ClassLabel& c : M.classes) {
    json entry = {{"id", c.id}, {"h", c.h.free}};
    if (c.h.torsion_tag) entry["torsion_tag"] = *c.h.torsion_tag;
    doc["classes"].push_back(entry);
  }
  if (!M.boundary_note.empty()) doc["boundary_note"] = M.boundary_note;
  return doc;
}

ManifoldModel load_model(std::string_view spec) {
  constexpr std::string_view prefix = "builtin:";
  if (!spec.starts_with(prefix)) return model_from_file(std::filesystem::path(spec));
  std::string_view rest = spec.substr(prefix.size());
  std::string_view name = rest;
  std::vector<std::int64_t> params;
  if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    name = rest.substr(0, colon);
    std::stringstream ss{std::string(rest.substr(colon + 1))};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "builtin parameter \"" + item + "\" is not an integer");
      }
    }
  }
  return builtin(name, params);
}

}  // namespace skeinmod
