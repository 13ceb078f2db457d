#include "skeinmod/io.hpp"

#include <cctype>
#include <fstream>
#include <set>

#include "skeinmod/error.hpp"

namespace skeinmod {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::int64_t parse_int(std::string_view tok, std::string_view context) {
  std::string s(tok);
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, std::string(context) + ": \"" + s + "\" is not an integer");
}

ClassLabel resolve_id(std::string_view id, const ManifoldModel& M) {
  if (const ClassLabel* c = M.find_class(id)) return *c;
  throw Error(ErrorKind::Parse, "unknown class id \"" + std::string(id) + "\" in model " + M.name);
}

ClassLabel parse_component(std::string_view tok, const ManifoldModel& M, std::string_view spec) {
  if (tok.starts_with("id:")) return resolve_id(trim(tok.substr(3)), M);
  HomologyClass1 h;
  for (std::string_view coord : split(tok, ',')) h.free.push_back(parse_int(coord, spec));
  if (h.free.size() != M.n) {
    throw Error(ErrorKind::Dimension, "alpha component \"" + std::string(tok) + "\" has " +
                                          std::to_string(h.free.size()) + " coordinates, model " +
                                          M.name + " has h1_rank " + std::to_string(M.n));
  }
  return ClassLabel{inline_id(h), h};
}

}  // namespace

LinkClass parse_alpha(std::string_view spec, const ManifoldModel& M) {
  std::string_view s = trim(spec);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorKind::Parse, "alpha \"" + std::string(spec) + "\" must be bracketed, e.g. [1,2]");
  }
  std::string_view inner = trim(s.substr(1, s.size() - 2));
  std::vector<ClassLabel> comps;
  if (inner.empty()) return LinkClass{};

  std::vector<std::string_view> tokens;
  if (inner.find(';') != std::string_view::npos) {
    tokens = split(inner, ';');
  } else {
    auto commas = split(inner, ',');
    bool all_ids = std::all_of(commas.begin(), commas.end(),
                               [](std::string_view t) { return t.starts_with("id:"); });
    if (M.n == 1 || all_ids) {
      tokens = commas;
    } else {
      tokens = {inner};
    }
  }
  for (std::string_view tok : tokens) {
    if (tok.empty()) throw Error(ErrorKind::Parse, "alpha \"" + std::string(spec) + "\" has an empty component");
    comps.push_back(parse_component(tok, M, spec));
  }
  return LinkClass(std::move(comps));
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw Error(ErrorKind::Parse, where + ": unknown field \"" + key + "\"");
  }
}

std::int64_t get_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw Error(ErrorKind::Parse, where + ": missing field \"" + key + "\"");
  const json& v = obj[key];
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, where + "." + key + " must be an integer");
  return v.get<std::int64_t>();
}

std::size_t get_index(const json& obj, const char* key, const std::string& where, std::size_t count) {
  std::int64_t i = get_int(obj, key, where);
  if (i < 1 || static_cast<std::size_t>(i) > count) {
    throw Error(ErrorKind::Dimension, where + "." + key + " = " + std::to_string(i) +
                                          " is out of range 1.." + std::to_string(count));
  }
  return static_cast<std::size_t>(i - 1);
}

std::vector<std::int64_t> get_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw Error(ErrorKind::Parse, where + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorKind::Parse, where + " must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

}  // namespace

MoveTrace trace_from_json(const json& doc, const ManifoldModel& M) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "trace document must be a JSON object");
  reject_unknown(doc, {"alpha", "moves"}, "trace");
  if (!doc.contains("alpha") || !doc["alpha"].is_array()) {
    throw Error(ErrorKind::Parse, "trace: \"alpha\" must be an array of class refs");
  }
  MoveTrace tr;
  const json& A = doc["alpha"];
  for (std::size_t k = 0; k < A.size(); ++k) {
    const std::string where = "alpha[" + std::to_string(k) + "]";
    const json& c = A[k];
    if (!c.is_object()) throw Error(ErrorKind::Parse, where + " must be an object");
    reject_unknown(c, {"id", "h", "torsion_tag"}, where);
    if (c.contains("id") && !c["id"].is_string()) throw Error(ErrorKind::Parse, where + ".id must be a string");
    if (!c.contains("h")) {
      if (!c.contains("id")) throw Error(ErrorKind::Parse, where + " needs an id or an h");
      tr.components.push_back(resolve_id(c["id"].get<std::string>(), M));
      continue;
    }
    ClassLabel label;
    label.h.free = get_vector(c["h"], where + ".h");
    if (label.h.free.size() != M.n) {
      throw Error(ErrorKind::Dimension, where + ".h has length " + std::to_string(label.h.free.size()) +
                                            ", expected h1_rank=" + std::to_string(M.n));
    }
    if (c.contains("torsion_tag")) {
      if (!c["torsion_tag"].is_string()) throw Error(ErrorKind::Parse, where + ".torsion_tag must be a string");
      label.h.torsion_tag = c["torsion_tag"].get<std::string>();
    }
    label.id = c.contains("id") ? c["id"].get<std::string>() : inline_id(label.h);
    tr.components.push_back(std::move(label));
  }

  const std::size_t count = tr.components.size();
  if (doc.contains("moves")) {
    const json& Ms = doc["moves"];
    if (!Ms.is_array()) throw Error(ErrorKind::Parse, "trace: \"moves\" must be an array");
    for (std::size_t k = 0; k < Ms.size(); ++k) {
      const std::string where = "moves[" + std::to_string(k) + "]";
      const json& mv = Ms[k];
      if (!mv.is_object()) throw Error(ErrorKind::Parse, where + " must be an object");
      reject_unknown(mv, {"type", "i", "j", "s", "t"}, where);
      if (!mv.contains("type") || !mv["type"].is_string()) {
        throw Error(ErrorKind::Parse, where + ".type must be a string");
      }
      const std::string type = mv["type"].get<std::string>();
      auto sign = [&]() {
        if (!mv.contains("s")) return 1;
        std::int64_t s = get_int(mv, "s", where);
        if (s != 1 && s != -1) throw Error(ErrorKind::Parse, where + ".s must be +1 or -1");
        return static_cast<int>(s);
      };
      if (type == "twist") {
        tr.moves.emplace_back(Twist{get_index(mv, "i", where, count), sign()});
      } else if (type == "self_cross") {
        tr.moves.emplace_back(SelfCross{get_index(mv, "i", where, count), sign()});
      } else if (type == "mixed_cross") {
        tr.moves.emplace_back(
            MixedCross{get_index(mv, "i", where, count), get_index(mv, "j", where, count), sign()});
      } else if (type == "slide") {
        if (!mv.contains("t")) throw Error(ErrorKind::Parse, where + ": slide needs \"t\"");
        tr.moves.emplace_back(Slide{get_index(mv, "i", where, count), {get_vector(mv["t"], where + ".t")}});
      } else {
        throw Error(ErrorKind::Parse, where + ".type \"" + type + "\" is not a known move");
      }
    }
  }
  return tr;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

MoveTrace trace_from_file(const std::filesystem::path& path, const ManifoldModel& M) {
  return trace_from_json(read_json_file(path), M);
}

json trace_to_json(const MoveTrace& trace) {
  json doc;
  doc["alpha"] = json::array();
  for (const ClassLabel& c : trace.components) {
    json entry = {{"id", c.id}, {"h", c.h.free}};
    if (c.h.torsion_tag) entry["torsion_tag"] = *c.h.torsion_tag;
    doc["alpha"].push_back(entry);
  }
  doc["moves"] = json::array();
  for (const Move& mv : trace.moves) {
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          json j;
          if constexpr (std::is_same_v<T, Twist>) {
            j = {{"type", "twist"}, {"i", m.i + 1}, {"s", m.s}};
          } else if constexpr (std::is_same_v<T, SelfCross>) {
            j = {{"type", "self_cross"}, {"i", m.i + 1}, {"s", m.s}};
          } else if constexpr (std::is_same_v<T, MixedCross>) {
            j = {{"type", "mixed_cross"}, {"i", m.i + 1}, {"j", m.j + 1}, {"s", m.s}};
          } else {
            j = {{"type", "slide"}, {"i", m.i + 1}, {"t", m.t.vec}};
          }
          doc["moves"].push_back(j);
        },
        mv);
  }
  return doc;
}

std::vector<ElementTextTerm> parse_element_text(std::string_view text) {
  std::vector<ElementTextTerm> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t open = text.find('[', pos);
    if (open == std::string_view::npos) {
      if (!trim(text.substr(pos)).empty()) {
        throw Error(ErrorKind::Parse, "element \"" + std::string(text) + "\": trailing text without a [class]");
      }
      break;
    }
    std::size_t close = text.find(']', open);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "element \"" + std::string(text) + "\": unbalanced '['");
    }
    // A nested '[' inside a label like [x_[1,2]] extends to the matching ']'.
    int depth = 0;
    for (close = open; close < text.size(); ++close) {
      if (text[close] == '[') ++depth;
      if (text[close] == ']' && --depth == 0) break;
    }
    if (close == text.size()) {
      throw Error(ErrorKind::Parse, "element \"" + std::string(text) + "\": unbalanced '['");
    }
    std::string_view coef = trim(text.substr(pos, open - pos));
    LaurentPoly2 c;
    if (coef.empty() || coef == "+") {
      c = LaurentPoly2::one();
    } else if (coef == "-") {
      c = LaurentPoly2(-1L);
    } else {
      c = parse_laurent<2>(coef);
    }
    out.push_back({std::move(c), std::string(trim(text.substr(open + 1, close - open - 1)))});
    pos = close + 1;
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "element \"" + std::string(text) + "\" has no [class] terms");
  return out;
}

}  // namespace skeinmod
