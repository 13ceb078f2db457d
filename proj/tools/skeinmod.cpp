// skeinmod: cyclic-summand tables, trace reduction and freeness checks for
// skein modules of framed oriented links.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeinmod/decompose.hpp"
#include "skeinmod/error.hpp"
#include "skeinmod/io.hpp"
#include "skeinmod/skein.hpp"

namespace {

using nlohmann::json;
using namespace skeinmod;

struct Options {
  std::string manifold;
  std::string alpha;
  std::string trace;
  std::string alphas;
  std::string element;
  std::string module = "sprime";
  bool module_given = false;
  std::int64_t bound = 0;
  bool json = false;
  bool serial = false;
};

std::string render_vector(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + "]";
}

std::shared_ptr<const ManifoldModel> load(const Options& o) {
  if (o.manifold.empty()) throw Error(ErrorKind::Usage, "--manifold is required");
  return std::make_shared<const ManifoldModel>(load_model(o.manifold));
}

json row_json(const DecomposeRow& r, ModuleTag tag, const ManifoldModel& M) {
  return {{"alpha", to_string(r.alpha)},
          {"eps_prime", {r.eps_prime.e1, r.eps_prime.e2, r.eps_prime.e3}},
          {"eps", r.eps},
          {"mu", r.mu},
          {"summand", to_string(summand(M, r.alpha, tag))}};
}

std::string row_text(const DecomposeRow& r, ModuleTag tag, const ManifoldModel& M) {
  return "alpha=" + to_string(r.alpha) + " eps'=" + to_string(r.eps_prime) + " eps=" +
         std::to_string(r.eps) + " mu=" + std::to_string(r.mu) +
         " summand=" + to_string(summand(M, r.alpha, tag));
}

void print_rows(const std::vector<DecomposeRow>& rows, ModuleTag tag, const ManifoldModel& M,
                const Options& o, json header, const std::string& text_header) {
  const auto bad = sphere_torus_discrepancies(rows);
  if (o.json) {
    header["module"] = std::string(option_name(tag));
    header["rows"] = json::array();
    for (const auto& r : rows) header["rows"].push_back(row_json(r, tag, M));
    header["sphere_torus_discrepancies"] = json::array();
    for (const auto& r : bad) header["sphere_torus_discrepancies"].push_back(to_string(r.alpha));
    std::cout << header.dump(2) << "\n";
    return;
  }
  std::cout << text_header << " module=" << to_string(tag) << "\n";
  for (const auto& r : rows) std::cout << row_text(r, tag, M) << "\n";
  for (const auto& r : bad) {
    std::cout << "# discrepancy: alpha=" << to_string(r.alpha) << " gcd(e1,e3)=" << r.first_image
              << " but mu=" << r.mu << "\n";
  }
}

int cmd_decompose(const Options& o) {
  auto M = load(o);
  const ModuleTag tag = parse_module_tag(o.module);
  if (o.bound < 0) throw Error(ErrorKind::Usage, "--bound must be >= 0");
  const auto alphas = enumerate_link_classes(*M, o.bound);
  const auto rows = o.serial ? decompose_serial(*M, alphas) : decompose_parallel(*M, alphas);
  print_rows(rows, tag, *M, o, {{"manifold", M->name}, {"bound", o.bound}},
             "# decompose manifold=" + M->name + " bound=" + std::to_string(o.bound));
  return 0;
}

int cmd_table(const Options& o) {
  auto M = load(o);
  const ModuleTag tag = parse_module_tag(o.module);
  if (o.alphas.empty()) throw Error(ErrorKind::Usage, "--alphas is required");
  std::ifstream in(o.alphas);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + o.alphas);
  std::vector<LinkClass> alphas;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    alphas.push_back(parse_alpha(line, *M));
  }
  const auto rows = o.serial ? decompose_serial(*M, alphas) : decompose_parallel(*M, alphas);
  print_rows(rows, tag, *M, o, {{"manifold", M->name}}, "# table manifold=" + M->name);
  return 0;
}

int cmd_index(const Options& o) {
  auto M = load(o);
  if (o.alpha.empty()) throw Error(ErrorKind::Usage, "--alpha is required");
  const LinkClass alpha = parse_alpha(o.alpha, *M);
  const DecomposeRow r = decompose_row(*M, alpha);
  const ExponentLattice g = gamma_prime(*M, alpha);
  std::map<ModuleTag, Summand> sums;
  bool all_free = true;
  for (ModuleTag t : {ModuleTag::Sprime, ModuleTag::S, ModuleTag::L, ModuleTag::W}) {
    sums.emplace(t, summand(*M, alpha, t));
    all_free = all_free && sums.at(t).is_free();
  }
  if (o.json) {
    json out = {{"alpha", to_string(alpha)},
                {"eps_prime", {r.eps_prime.e1, r.eps_prime.e2, r.eps_prime.e3}},
                {"eps", r.eps},
                {"mu", r.mu},
                {"eps2", r.eps2},
                {"gamma_prime", g.basis_string()},
                {"free_in_all", all_free}};
    for (const auto& [t, s] : sums) out["summands"][std::string(option_name(t))] = to_string(s);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "alpha=" << to_string(alpha) << "\n";
  std::cout << "eps'=" << to_string(r.eps_prime) << " eps=" << r.eps << " mu=" << r.mu
            << " eps2=" << r.eps2 << "\n";
  std::cout << "Gamma'=" << g.basis_string() << "\n";
  for (const auto& [t, s] : sums) std::cout << to_string(t) << ": " << to_string(s) << "\n";
  if (all_free) std::cout << "free in all four modules\n";
  return 0;
}

int cmd_reduce(const Options& o) {
  auto M = load(o);
  if (o.trace.empty()) throw Error(ErrorKind::Usage, "--trace is required");
  const ModuleTag tag = parse_module_tag(o.module);
  const MoveTrace tr = trace_from_file(o.trace, *M);
  const TraceResult res = trace_evaluate(M, tr);
  const LinkClass alpha = tr.alpha();
  std::string coefficient;
  if (tag == ModuleTag::Sprime) {
    coefficient = to_string(LaurentPoly2::monomial(res.reduced));
  } else {
    const ReducedElement e = trace_evaluate_in(M, tr, tag);
    coefficient = e.is_zero() ? "0" : to_string(e.terms().begin()->second);
  }
  const std::string monomial =
      "q1^" + std::to_string(res.reduced[0]) + " q2^" + std::to_string(res.reduced[1]);
  if (o.json) {
    json out = {{"alpha", to_string(alpha)},
                {"raw", {res.raw.w1, res.raw.w2}},
                {"reduced", {res.reduced[0], res.reduced[1]}},
                {"module", std::string(option_name(tag))},
                {"coefficient", coefficient}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "alpha=" << to_string(alpha) << "\n";
  std::cout << "raw (" << res.raw.w1 << "," << res.raw.w2 << "), reduced (" << res.reduced[0] << ","
            << res.reduced[1] << ")\n";
  std::cout << "monomial: " << monomial << " [x_alpha]\n";
  std::cout << "reduced: " << coefficient << " [x_alpha] in " << to_string(tag) << "\n";
  return 0;
}

std::string verdict_text(const ManifoldModel& M, ModuleTag tag, const FreenessVerdict& v) {
  const bool spheres = tag == ModuleTag::W;
  if (v.free) {
    const bool none = spheres ? M.sphere_gens.empty()
                              : (M.torus_default.empty() && M.torus_exceptions.empty() &&
                                 M.torus_rule == TorusRule::None);
    if (none) return spheres ? "free (no sphere classes)" : "free (no torus classes)";
    return spheres ? "free (all sphere pairings vanish)" : "free (all torus pairings vanish)";
  }
  return std::string("NOT free; witness ") + (spheres ? "sphere " : "torus ") +
         render_vector(v.witness->surface.vec) + " pairs " + std::to_string(v.witness->pairing) +
         " with class " + render_vector(v.witness->loop.free);
}

int cmd_freeness(const Options& o) {
  auto M = load(o);
  std::vector<ModuleTag> tags;
  if (o.module_given) {
    tags.push_back(parse_module_tag(o.module));
  } else {
    tags = {ModuleTag::Sprime, ModuleTag::S, ModuleTag::L, ModuleTag::W};
  }
  json out = json::object();
  for (ModuleTag t : tags) {
    const FreenessVerdict v = is_free(*M, t);
    if (o.json) {
      json entry = {{"free", v.free}, {"verdict", verdict_text(*M, t, v)}};
      if (v.witness) {
        entry["witness"] = {{"surface", v.witness->surface.vec},
                            {"loop", v.witness->loop.free},
                            {"pairing", v.witness->pairing}};
      }
      out[std::string(option_name(t))] = entry;
    } else {
      std::cout << to_string(t) << ": " << verdict_text(*M, t, v) << "\n";
    }
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_specialize(const Options& o) {
  if (o.element.empty()) throw Error(ErrorKind::Usage, "--element is required");
  const ModuleTag tag = parse_module_tag(o.module);
  const auto terms = parse_element_text(o.element);
  std::string rendered;
  if (o.manifold.empty()) {
    // Labels are opaque: apply the ring map and collect, no reduction.
    std::vector<std::string> order;
    std::map<std::string, LaurentPoly2> two;
    std::map<std::string, LaurentPoly1> one;
    for (const auto& t : terms) {
      if (!two.contains(t.label)) order.push_back(t.label);
      two[t.label] += t.coefficient;
      if (tag != ModuleTag::Sprime) one[t.label] += specialize(t.coefficient, specialization_for(tag));
    }
    for (const auto& label : order) {
      std::string coef = tag == ModuleTag::Sprime ? to_string(two[label]) : to_string(one[label]);
      const std::size_t size = tag == ModuleTag::Sprime ? two[label].size() : one[label].size();
      if (size == 0) continue;
      if (size > 1) coef = "(" + coef + ")";
      if (!rendered.empty()) rendered += " + ";
      rendered += coef + " [" + label + "]";
    }
    if (rendered.empty()) rendered = "0";
  } else {
    auto M = load(o);
    PrimeElement e(M, ModuleTag::Sprime);
    for (const auto& t : terms) e.add(parse_alpha("[" + t.label + "]", *M), t.coefficient);
    rendered = tag == ModuleTag::Sprime ? to_string(e) : to_string(element_specialize(e, tag));
  }
  if (o.json) {
    std::cout << json{{"module", std::string(option_name(tag))}, {"element", rendered}}.dump(2) << "\n";
  } else {
    std::cout << rendered << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skein modules of framed oriented links from homological intersection data"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool manifold_required) {
    auto* opt = sub->add_option("--manifold", o.manifold,
                                "manifold document path, or builtin:NAME[:params] (S3, S2xS1, T3, lens:p,q, "
                                "handlebody:g)");
    if (manifold_required) opt->required();
    sub->add_flag("--json", o.json, "structured output");
  };
  auto add_module = [&](CLI::App* sub) {
    sub->add_option("--module", o.module, "sprime|s|l|w")->each([&](const std::string&) {
      o.module_given = true;
    });
  };

  auto* decompose = app.add_subcommand("decompose", "summand table over enumerated link classes");
  add_common(decompose, true);
  add_module(decompose);
  decompose->add_option("--bound", o.bound, "coordinate and multiset-size bound B")->required();
  decompose->add_flag("--serial", o.serial, "use the single-threaded reference kernel");

  auto* index = app.add_subcommand("index", "indices and summands of one link class");
  add_common(index, true);
  index->add_option("--alpha", o.alpha, "link class, e.g. \"[1,2]\" or \"[id:beta, id:gamma]\"")->required();

  auto* reduce = app.add_subcommand("reduce", "evaluate a move trace to its canonical skein element");
  add_common(reduce, true);
  add_module(reduce);
  reduce->add_option("--trace", o.trace, "trace document path")->required();

  auto* freeness = app.add_subcommand("freeness", "freeness verdicts with witnesses");
  add_common(freeness, true);
  add_module(freeness);

  auto* specialize_cmd = app.add_subcommand("specialize", "map an S' element rendering to S, L or W");
  add_common(specialize_cmd, false);
  add_module(specialize_cmd);
  specialize_cmd->add_option("--element", o.element, "element text, e.g. \"q1^3 q2 [x]\"")->required();

  auto* table = app.add_subcommand("table", "summand table for the link classes listed in a file");
  add_common(table, true);
  add_module(table);
  table->add_option("--alphas", o.alphas, "file with one link class per line")->required();
  table->add_flag("--serial", o.serial, "use the single-threaded reference kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error:usage: " << e.what() << "\n";
    return exit_code(ErrorKind::Usage);
  }

  try {
    if (*decompose) return cmd_decompose(o);
    if (*index) return cmd_index(o);
    if (*reduce) return cmd_reduce(o);
    if (*freeness) return cmd_freeness(o);
    if (*specialize_cmd) return cmd_specialize(o);
    if (*table) return cmd_table(o);
  } catch (const Error& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    std::cerr << "error:" << category_name(e.kind()) << ": " << msg << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
