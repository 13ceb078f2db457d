#include "skeinmod/lattice.hpp"

#include <optional>

namespace skeinmod {

std::string to_string(const IndexTriple& t) {
  return "(" + std::to_string(t.e1) + "," + std::to_string(t.e2) + "," +
         std::to_string(t.e3) + ")";
}

ExponentLattice ExponentLattice::from_generators(std::span<const Exponent2> gens) {
  ExponentLattice L;
  L.gens_.assign(gens.begin(), gens.end());

  // Two-column row reduction. `pivot` carries the gcd of the second
  // coordinates seen so far; everything eliminated to (x, 0) is folded into
  // `horizontal`, the generator of L ∩ (Z x 0).
  std::optional<Exponent2> pivot;
  std::int64_t horizontal = 0;
  for (const Exponent2& v : gens) {
    if (v[1] == 0) {
      horizontal = gcd_abs(horizontal, v[0]);
    } else if (!pivot) {
      pivot = v;
    } else {
      const Exponent2 p = *pivot;
      const ExtendedGcd eg = extended_gcd(p[1], v[1]);
      // [[s, t], [v1/g, -p1/g]] is unimodular; the second row kills column 2.
      Exponent2 combined{add_checked(mul_checked(eg.s, p[0]), mul_checked(eg.t, v[0])), eg.g};
      std::int64_t rest = add_checked(mul_checked(v[1] / eg.g, p[0]),
                                      -mul_checked(p[1] / eg.g, v[0]));
      horizontal = gcd_abs(horizontal, rest);
      pivot = combined;
    }
    if (pivot && horizontal > 0) (*pivot)[0] = floor_mod((*pivot)[0], horizontal);
  }

  if (!pivot) {
    if (horizontal == 0) {
      L.rank_ = 0;
    } else {
      L.rank_ = 1;
      L.canon_ = {horizontal, 0, 0};
    }
    return L;
  }

  Exponent2 p = *pivot;
  if (p[1] < 0) p = {-p[0], -p[1]};
  if (horizontal == 0) {
    if (p[0] < 0) p = {-p[0], -p[1]};
    L.rank_ = 1;
    L.canon_ = {p[0], p[1], 0};
  } else {
    L.rank_ = 2;
    L.canon_ = {floor_mod(p[0], horizontal), p[1], horizontal};
  }
  return L;
}

namespace {

// Generator of L ∩ (Z x 0): e3, or e1 for a cyclic lattice (e1, 0).
std::int64_t horizontal_period(const IndexTriple& t) {
  if (t.e3 > 0) return t.e3;
  return t.e2 == 0 ? t.e1 : 0;
}

}  // namespace

bool ExponentLattice::contains(const Exponent2& v) const {
  const auto [e1, e2, e3] = canon_;
  if (e2 == 0) {
    const std::int64_t h = horizontal_period(canon_);
    return v[1] == 0 && (h == 0 ? v[0] == 0 : v[0] % h == 0);
  }
  if (v[1] % e2 != 0) return false;
  const std::int64_t x = add_checked(v[0], -mul_checked(v[1] / e2, e1));
  return e3 == 0 ? x == 0 : x % e3 == 0;
}

Exponent2 ExponentLattice::reduce(const Exponent2& v) const {
  const auto [e1, e2, e3] = canon_;
  std::int64_t x = v[0];
  std::int64_t y = v[1];
  if (e2 != 0) {
    const std::int64_t r = floor_mod(y, abs_checked(e2));
    const std::int64_t k = (y - r) / e2;
    x = add_checked(x, -mul_checked(k, e1));
    y = r;
  }
  if (const std::int64_t h = horizontal_period(canon_); h > 0) x = floor_mod(x, h);
  return {x, y};
}

std::int64_t ExponentLattice::sum_image() const {
  return gcd_abs(add_checked(canon_.e1, canon_.e2), canon_.e3);
}

std::int64_t ExponentLattice::first_image() const { return gcd_abs(canon_.e1, canon_.e3); }

std::int64_t ExponentLattice::second_image() const { return abs_checked(canon_.e2); }

ExponentLattice ExponentLattice::scaled(std::int64_t k) const {
  std::vector<Exponent2> g;
  g.reserve(gens_.size());
  for (const Exponent2& v : gens_) g.push_back({mul_checked(k, v[0]), mul_checked(k, v[1])});
  return from_generators(g);
}

std::string ExponentLattice::basis_string() const {
  return "(" + std::to_string(canon_.e1) + "," + std::to_string(canon_.e2) + "),(" +
         std::to_string(canon_.e3) + ",0)";
}

}  // namespace skeinmod
