// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <unistd.h>

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "run_cli.hpp"
#include "trace_gen.hpp"
#include "skeinmod/decompose.hpp"
#include "skeinmod/error.hpp"
#include "skeinmod/io.hpp"
#include "skeinmod/skein.hpp"

using namespace skeinmod;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

LinkClass A(const std::vector<std::int64_t>& ks) {
  std::vector<ClassLabel> comps;
  for (std::int64_t k : ks) {
    HomologyClass1 h{{k}, std::nullopt};
    comps.push_back({inline_id(h), h});
  }
  return LinkClass(comps);
}

std::shared_ptr<const ManifoldModel> s2xs1() {
  static auto M = std::make_shared<const ManifoldModel>(builtin("S2xS1"));
  return M;
}

Check c1_worked_example() {
  Check c;
  const ManifoldModel& M = *s2xs1();
  c.expect(epsilon_prime(M, A({1, 2})) == IndexTriple{2, 1, 3}, "eps'([1,2])");
  c.expect(summand(M, A({1, 2}), ModuleTag::Sprime).relations_prime() ==
               std::vector{LaurentPoly2::binomial_minus_one({4, 2}), LaurentPoly2::binomial_minus_one({6, 0})},
           "summand([1,2])");
  for (std::int64_t r = 1; r <= 6; ++r) {
    const LinkClass ones = A(std::vector<std::int64_t>(r, 1));
    c.expect(epsilon_prime(M, ones) == IndexTriple{1, r - 1, 0}, "eps'(r ones) r=" + std::to_string(r));
    c.expect(summand(M, ones, ModuleTag::Sprime).relations_prime() ==
                 std::vector{LaurentPoly2::binomial_minus_one({2, 2 * (r - 1)})},
             "summand(r ones) r=" + std::to_string(r));
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int it = 0; it < 50; ++it) {
    std::vector<std::int64_t> ks(size(rng));
    for (auto& k : ks) k = entry(rng);
    const std::int64_t sum = std::accumulate(ks.begin(), ks.end(), std::int64_t{0});
    c.expect(epsilon(M, A(ks)) == std::abs(sum), "eps(" + to_string(A(ks)) + ")");
  }
  return c;
}

Check c2_torsion() {
  Check c;
  const auto M = s2xs1();
  for (std::int64_t k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    const ReducedElement x = ReducedElement::basis(M, ModuleTag::S, A({k}));
    const LaurentPoly1 ann = LaurentPoly1::monomial({2 * k}) - LaurentPoly1::one();
    c.expect(element_scale(ann, x).is_zero(), "annihilation k=" + std::to_string(k));
    for (std::int64_t kp = 1; kp < std::abs(k); ++kp) {
      if (k % kp == 0) continue;
      const LaurentPoly1 p = LaurentPoly1::monomial({2 * kp}) - LaurentPoly1::one();
      c.expect(!element_scale(p, x).is_zero(), "k=" + std::to_string(k) + " k'=" + std::to_string(kp));
    }
  }
  return c;
}

Check c3_diagram() {
  Check c;
  std::mt19937_64 rng(3);
  const auto models = testgen::builtin_models();
  for (int it = 0; it < 200; ++it) {
    const auto& M = models[static_cast<std::size_t>(it) % models.size()];
    const MoveTrace tr = testgen::random_trace(*M, rng);
    const PrimeElement e = trace_evaluate(M, tr).element;
    for (ModuleTag t : {ModuleTag::S, ModuleTag::L, ModuleTag::W}) {
      c.expect(element_specialize(e, t) == trace_evaluate_in(M, tr, t),
               M->name + " " + to_string(tr.alpha()) + " " + std::string(to_string(t)));
    }
  }
  return c;
}

Check c4_sphere_torus() {
  Check c;
  const ManifoldModel& M = *s2xs1();
  std::size_t count = 0;
  for (const LinkClass& alpha : enumerate_link_classes(M, 0)) {
    c.expect(std::gcd(epsilon_prime(M, alpha).e1, epsilon_prime(M, alpha).e3) == mu_index(M, alpha), "[]");
    ++count;
  }
  for (std::int64_t a = -5; a <= 5; ++a) {
    for (std::int64_t b = a; b <= 5; ++b) {
      for (std::int64_t d = b; d <= 5; ++d) {
        for (const LinkClass& alpha : {A({a}), A({a, b}), A({a, b, d})}) {
          const IndexTriple t = epsilon_prime(M, alpha);
          c.expect(std::gcd(t.e1, t.e3) == mu_index(M, alpha), to_string(alpha));
          ++count;
        }
      }
    }
  }
  c.note << (c.ok ? "" : " ") << "(" << count << " class evaluations)";
  return c;
}

// Membership and reduction against one oracle kind, 500 generator sets.
template <class Oracle>
Check lattice_against(const std::function<Oracle(const std::vector<oracle::Point>&)>& make, std::int64_t box,
                      std::size_t* mismatched_sets, std::string* first_example) {
  Check c;
  std::mt19937_64 rng(20261016);
  *mismatched_sets = 0;
  for (int set = 0; set < 500; ++set) {
    const std::vector<oracle::Point> gens = oracle::random_generators(rng, 5, 4);
    const std::vector<Exponent2> eg(gens.begin(), gens.end());
    const ExponentLattice lat = ExponentLattice::from_generators(eg);
    const Oracle o = make(gens);
    bool set_ok = true;
    for (std::int64_t x = -20; x <= 20 && set_ok; ++x) {
      for (std::int64_t y = -20; y <= 20 && set_ok; ++y) {
        const bool member = o.contains({x, y});
        bool ok = lat.contains({x, y}) == member;
        const Exponent2 r = lat.reduce({x, y});
        const oracle::Point d{x - r[0], y - r[1]};
        if (std::abs(d[0]) <= box && std::abs(d[1]) <= box) ok = ok && o.contains(d);
        if (member) ok = ok && r == Exponent2{0, 0};
        ok = ok && lat.reduce(r) == r;
        if (!ok) {
          set_ok = false;
          if (first_example->empty()) {
            std::ostringstream ss;
            ss << "gens";
            for (const auto& g : gens) ss << " (" << g[0] << "," << g[1] << ")";
            ss << " at (" << x << "," << y << "): lattice " << lat.contains({x, y}) << ", oracle " << member;
            *first_example = ss.str();
          }
        }
      }
    }
    if (!set_ok) ++*mismatched_sets;
    c.expect(set_ok, "");
  }
  return c;
}

Check c5_lattice(std::string* exact_line) {
  std::size_t bad = 0, bad_exact = 0;
  std::string example, example_exact;
  Check c = lattice_against<oracle::CombinationSet>(
      [](const std::vector<oracle::Point>& g) { return oracle::CombinationSet(g, 50, 20); }, 20, &bad, &example);
  c.note.str("");
  if (!c.ok) c.note << bad << "/500 sets disagree; first: " << example;
  Check exact = lattice_against<oracle::WindowClosure>(
      [](const std::vector<oracle::Point>& g) { return oracle::WindowClosure(g, 130); }, 130, &bad_exact,
      &example_exact);
  *exact_line = std::string("[info] 5 with the exact window-walk oracle (no coefficient cap): ") +
                (exact.ok ? "PASS" : "FAIL") + " (" + std::to_string(500 - bad_exact) + "/500 sets agree)";
  return c;
}

Check c6_freeness() {
  Check c;
  const std::vector<ModuleTag> all{ModuleTag::Sprime, ModuleTag::S, ModuleTag::L, ModuleTag::W};
  std::vector<ManifoldModel> free_models{builtin("S3")};
  const std::int64_t lp[] = {5, 1};
  free_models.push_back(builtin("lens", lp));
  for (std::int64_t g = 0; g <= 3; ++g) {
    const std::int64_t gg[] = {g};
    free_models.push_back(builtin("handlebody", gg));
  }
  for (const auto& M : free_models) {
    for (ModuleTag t : all) c.expect(is_free(M, t).free, M.name + " " + std::string(to_string(t)));
  }
  auto not_free = [&c](const ManifoldModel& M, ModuleTag t) {
    const FreenessVerdict v = is_free(M, t);
    c.expect(!v.free && v.witness && v.witness->pairing != 0 &&
                 pairing_eval(M, v.witness->surface, v.witness->loop) == v.witness->pairing,
             M.name + " " + std::string(to_string(t)));
  };
  for (ModuleTag t : all) not_free(builtin("S2xS1"), t);
  const ManifoldModel T3 = builtin("T3");
  for (ModuleTag t : {ModuleTag::S, ModuleTag::Sprime, ModuleTag::L}) not_free(T3, t);
  c.expect(is_free(T3, ModuleTag::W).free, "T3 W");
  return c;
}

Check c7_slides() {
  Check c;
  std::mt19937_64 rng(7);
  const auto models = testgen::builtin_models();
  std::size_t nontrivial = 0;
  for (int it = 0; it < 200; ++it) {
    const auto& M = models[static_cast<std::size_t>(it) % models.size()];
    MoveTrace tr = testgen::random_trace(*M, rng);
    const TraceResult before = trace_evaluate(M, tr);
    tr.moves.emplace_back(testgen::random_slide(*M, tr, rng));
    const TraceResult after = trace_evaluate(M, tr);
    const Exponent2 delta{after.raw.w1 - before.raw.w1, after.raw.w2 - before.raw.w2};
    if (delta != Exponent2{0, 0}) ++nontrivial;
    c.expect(before.element == after.element, M->name + " " + to_string(tr.alpha()) + " element changed");
    c.expect(gamma_prime(*M, tr.alpha()).scaled(2).contains(delta), M->name + " raw change outside 2Gamma'");
  }
  c.note << (c.ok ? "" : " ") << "(" << nontrivial << "/200 slides moved the raw pair)";
  return c;
}

Check c8_cli() {
  Check c;
  using testcli::data;
  using testcli::run;
  const auto golden = testcli::slurp(SKEINMOD_SOURCE_DIR "/tests/golden/decompose_s2xs1_b2.txt");
  const auto r = run({"decompose", "--manifold", "builtin:S2xS1", "--bound", "2"});
  c.expect(r.code == 0 && !golden.empty() && r.out == golden, "decompose --bound 2 differs from golden table");
  c.expect(golden.find("alpha=[1,2] eps'=(2,1,3) eps=3 mu=1 summand=R'/(q1^4 q2^2 - 1, q1^6 - 1)") !=
               std::string::npos,
           "golden table lacks the [1,2] row");
  struct Case {
    std::vector<std::string> args;
    int code;
    std::string category;
  };
  const std::vector<Case> cases = {
      {{}, 1, "usage"},
      {{"index", "--manifold", "builtin:S2xS1"}, 1, "usage"},
      {{"index", "--manifold", "builtin:S2xS1", "--alpha", "[1,x]"}, 2, "parse"},
      {{"index", "--manifold", "builtin:T3", "--alpha", "[1,0]"}, 3, "dimension"},
      {{"reduce", "--manifold", "builtin:S2xS1", "--trace", data("traces/bad_index.json")}, 3, "dimension"},
      {{"index", "--manifold", data("manifolds/missing.json"), "--alpha", "[1]"}, 4, "io"},
      {{"index", "--manifold", "builtin:lens:4,2", "--alpha", "[]"}, 5, "invalid"},
  };
  for (const Case& k : cases) {
    const auto e = run(k.args);
    c.expect(e.code == k.code && e.err.rfind("error:" + k.category + ":", 0) == 0,
             "error path exit " + std::to_string(e.code) + " for expected " + k.category);
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  std::string exact_line;
  const std::vector<Criterion> criteria = {
      {"1 S2xS1 worked example", c1_worked_example},
      {"2 torsion (q^{2k}-1)[x_[k]] = 0 in S", c2_torsion},
      {"3 specialization commutes with reduction", c3_diagram},
      {"4 gcd(e1,e3) = mu on S2xS1", c4_sphere_torus},
      {"5 lattice vs bounded-combination oracle", [&] { return c5_lattice(&exact_line); }},
      {"6 freeness verdicts", c6_freeness},
      {"7 slide neutrality", c7_slides},
      {"8 CLI golden table and exit codes", c8_cli},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    const std::string note = c.note.str();
    std::cout << (c.ok ? "PASS " : "FAIL ") << cr.name << (note.empty() ? "" : ": " + note) << "\n";
    if (!c.ok) ++failed;
    if (!exact_line.empty()) {
      std::cout << exact_line << "\n";
      exact_line.clear();
    }
  }
  std::cout << (8 - failed) << "/8 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
