#include <array>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skeinmod/error.hpp"
#include "skeinmod/manifold.hpp"

using namespace skeinmod;
using nlohmann::json;

namespace {

HomologyClass1 H1(std::vector<std::int64_t> v) { return {std::move(v), std::nullopt}; }
HomologyClass2 H2(std::vector<std::int64_t> v) { return {std::move(v)}; }

// e_a ∧ e_b in the basis (e2∧e3, e3∧e1, e1∧e2).
HomologyClass2 wedge_basis(int a, int b) {
  std::array<std::int64_t, 3> x{}, y{};
  x[a] = 1;
  y[b] = 1;
  return H2({x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Usage;
}

}  // namespace

TEST(Manifold, S2xS1PairingIsIntersectionNumber) {
  const ManifoldModel M = builtin("S2xS1");
  for (std::int64_t k = -7; k <= 7; ++k) EXPECT_EQ(pairing_eval(M, H2({1}), H1({k})), k);
  EXPECT_EQ(pairing_eval(M, H2({0}), H1({5})), 0);
}

TEST(Manifold, T3PairingIsTripleDeterminant) {
  const ManifoldModel M = builtin("T3");
  EXPECT_EQ(pairing_eval(M, wedge_basis(0, 2), H1({0, 1, 0})), -1);
  EXPECT_EQ(oracle::det3({1, 0, 0}, {0, 0, 1}, {0, 1, 0}), -1);
}

TEST(Manifold, PairingDimensionErrorNamesVector) {
  const ManifoldModel M = builtin("T3");
  try {
    pairing_eval(M, H2({1, 2}), H1({1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Dimension);
    EXPECT_NE(std::string(e.what()).find("[1,2]"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([&] { pairing_eval(M, H2({1, 0, 0}), H1({1})); }), ErrorKind::Dimension);
}

TEST(ManifoldProperty, PairingIsBilinear) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  const ManifoldModel M = builtin("T3");
  auto vec = [&] { return std::vector<std::int64_t>{d(rng), d(rng), d(rng)}; };
  for (int it = 0; it < 500; ++it) {
    auto s1 = vec(), s2 = vec(), h1 = vec(), h2 = vec();
    std::vector<std::int64_t> ss(3), hs(3);
    for (int k = 0; k < 3; ++k) {
      ss[k] = s1[k] + s2[k];
      hs[k] = h1[k] + h2[k];
    }
    ASSERT_EQ(pairing_eval(M, H2(ss), H1(h1)), pairing_eval(M, H2(s1), H1(h1)) + pairing_eval(M, H2(s2), H1(h1)));
    ASSERT_EQ(pairing_eval(M, H2(s1), H1(hs)), pairing_eval(M, H2(s1), H1(h1)) + pairing_eval(M, H2(s1), H1(h2)));
    ASSERT_EQ(pairing_eval(M, H2({0, 0, 0}), H1(h1)), 0);
  }
}

TEST(ManifoldProperty, SweptToriPairByDeterminant) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  const ManifoldModel M = builtin("T3");
  for (int it = 0; it < 100; ++it) {
    const std::array<std::int64_t, 3> h{d(rng), d(rng), d(rng)}, hp{d(rng), d(rng), d(rng)};
    const HomologyClass1 hc = H1({h[0], h[1], h[2]});
    const auto tori = torus_subgroup(M, {inline_id(hc), hc});
    ASSERT_EQ(tori.size(), 3u);
    for (int k = 0; k < 3; ++k) {
      std::array<std::int64_t, 3> v{};
      v[k] = 1;
      ASSERT_EQ(pairing_eval(M, tori[k], H1({hp[0], hp[1], hp[2]})), oracle::det3(h, v, hp));
    }
  }
}

TEST(Manifold, TorusAndSphereSubgroups) {
  const ManifoldModel s2 = builtin("S2xS1");
  for (std::int64_t k : {-2, 0, 3}) EXPECT_EQ(torus_subgroup(s2, {inline_id(H1({k})), H1({k})}), std::vector{H2({1})});
  EXPECT_EQ(sphere_subgroup(s2), std::vector{H2({1})});
  const ManifoldModel s3 = builtin("S3");
  EXPECT_TRUE(torus_subgroup(s3, {"", H1({})}).empty());
  EXPECT_TRUE(sphere_subgroup(builtin("T3")).empty());
  const std::int64_t lp[] = {7, 2};
  EXPECT_TRUE(sphere_subgroup(builtin("lens", lp)).empty());
  const HomologyClass1 e1 = H1({1, 0, 0});
  const std::vector<HomologyClass2> swept{H2({0, 0, 0}), wedge_basis(0, 1), wedge_basis(0, 2)};
  EXPECT_EQ(torus_subgroup(builtin("T3"), {inline_id(e1), e1}), swept);
}

TEST(Manifold, Builtins) {
  EXPECT_EQ(builtin("S3").n, 0u);
  const std::int64_t g2[] = {2};
  const ManifoldModel hb = builtin("handlebody", g2);
  EXPECT_EQ(hb.n, 2u);
  EXPECT_EQ(hb.m, 0u);
  EXPECT_EQ(hb.name, "handlebody(2)");
  const std::int64_t lp[] = {5, 1};
  const ManifoldModel lens = builtin("lens", lp);
  EXPECT_EQ(lens.classes.size(), 5u);
  EXPECT_EQ(lens.name, "lens(5,1)");
  const std::int64_t bad_p[] = {0, 1}, bad_gcd[] = {4, 2}, neg_g[] = {-1};
  EXPECT_EQ(kind_of([&] { builtin("lens", bad_p); }), ErrorKind::Invalid);
  EXPECT_EQ(kind_of([&] { builtin("lens", bad_gcd); }), ErrorKind::Invalid);
  EXPECT_EQ(kind_of([&] { builtin("handlebody", neg_g); }), ErrorKind::Invalid);
  EXPECT_EQ(kind_of([&] { builtin("K3"); }), ErrorKind::Invalid);
  EXPECT_EQ(kind_of([&] { builtin("S3", g2); }), ErrorKind::Invalid);
}

TEST(Manifold, JsonRoundTripForBuiltins) {
  const std::int64_t lp[] = {5, 2}, g[] = {3};
  for (const ManifoldModel& M : {builtin("S3"), builtin("S2xS1"), builtin("T3"), builtin("lens", lp),
                                 builtin("handlebody", g)}) {
    EXPECT_EQ(model_from_json(model_to_json(M)), M) << M.name;
  }
}

TEST(Manifold, DocumentEqualsBuiltin) {
  const json doc = json::parse(R"({
    "name": "S2xS1", "h1_rank": 1, "h2_rank": 1, "pairing": [[1]],
    "torus_default": [[1]], "sphere_gens": [[1]],
    "boundary_note": "H1 = Z generated by the core *xS1; H2 = Z generated by S2x*"})");
  EXPECT_EQ(model_from_json(doc), builtin("S2xS1"));
  const ManifoldModel file = model_from_file(SKEINMOD_SOURCE_DIR "/data/manifolds/s2xs1.json");
  EXPECT_EQ(file.pairing, builtin("S2xS1").pairing);
  EXPECT_EQ(file.torus_default, builtin("S2xS1").torus_default);
  EXPECT_EQ(file.sphere_gens, builtin("S2xS1").sphere_gens);
}

TEST(Manifold, DimensionErrorsAreAggregated) {
  const json doc = json::parse(R"({
    "name": "bad", "h1_rank": 3, "h2_rank": 2, "pairing": [[1,0,0],[0,1,0]],
    "torus_default": [], "sphere_gens": [[1,0,0]]})");
  EXPECT_EQ(kind_of([&] { model_from_json(doc); }), ErrorKind::Dimension);
  json two = doc;
  two["torus_default"] = json::array({json::array({1})});
  try {
    model_from_json(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Dimension);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("sphere"), std::string::npos) << msg;
    EXPECT_NE(msg.find("torus"), std::string::npos) << msg;
  }
}

TEST(Manifold, SchemaErrors) {
  const json good = json::parse(R"({"name": "x", "h1_rank": 1, "h2_rank": 0, "pairing": [],
                                    "torus_default": [], "sphere_gens": []})");
  EXPECT_NO_THROW(model_from_json(good));
  json unknown = good;
  unknown["genus"] = 2;
  EXPECT_EQ(kind_of([&] { model_from_json(unknown); }), ErrorKind::Parse);
  json missing = good;
  missing.erase("pairing");
  EXPECT_EQ(kind_of([&] { model_from_json(missing); }), ErrorKind::Parse);
  json nonint = good;
  nonint["h1_rank"] = 1.5;
  EXPECT_EQ(kind_of([&] { model_from_json(nonint); }), ErrorKind::Parse);
  json rule = good;
  rule["torus_rule"] = "spin";
  EXPECT_EQ(kind_of([&] { model_from_json(rule); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([&] { model_from_file("/nonexistent/model.json"); }), ErrorKind::Io);
}

TEST(Manifold, TorusExceptionsDispatch) {
  const json doc = json::parse(R"({
    "name": "ex", "h1_rank": 2, "h2_rank": 2, "pairing": [[1,0],[0,1]],
    "torus_default": [[1,0]], "torus_exceptions": {"beta": [[0,1],[1,1]]}, "sphere_gens": [],
    "classes": [{"id": "beta", "h": [1,0]}, {"id": "gamma", "h": [1,0]}]})");
  const ManifoldModel M = model_from_json(doc);
  EXPECT_EQ(torus_subgroup(M, *M.find_class("beta")), (std::vector{H2({0, 1}), H2({1, 1})}));
  EXPECT_EQ(torus_subgroup(M, *M.find_class("gamma")), std::vector{H2({1, 0})});
  EXPECT_EQ(M.find_class("delta"), nullptr);
  EXPECT_EQ(model_from_json(model_to_json(M)), M);
}

TEST(Manifold, LoadModel) {
  EXPECT_EQ(load_model("builtin:S2xS1"), builtin("S2xS1"));
  const std::int64_t lp[] = {5, 1};
  EXPECT_EQ(load_model("builtin:lens:5,1"), builtin("lens", lp));
  EXPECT_EQ(load_model(SKEINMOD_SOURCE_DIR "/data/manifolds/t3.json").torus_rule, TorusRule::Sweep);
  EXPECT_EQ(kind_of([] { load_model("builtin:lens:5,x"); }), ErrorKind::Parse);
}

TEST(Manifold, ClassOrderingIsByHomologyThenId) {
  const ClassLabel a{"b", H1({1})}, b{"a", H1({2})}, c{"a", H1({1})};
  EXPECT_LT(a, b);
  EXPECT_LT(c, a);
  EXPECT_EQ(inline_id(H1({1, 0, -2})), "1,0,-2");
}
