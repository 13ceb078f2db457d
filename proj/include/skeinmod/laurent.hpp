#pragma once

// Exact Laurent polynomials over the integers in one or two variables.
//
// LaurentPoly<2> is the coefficient ring Z[q1^±1, q2^±1]; LaurentPoly<1> is
// Z[q^±1]. Coefficients are GMP integers, so no arithmetic here can overflow
// except the exponents themselves, which are 64-bit and checked.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "skeinmod/arith.hpp"

namespace skeinmod {

using Integer = mpz_class;

template <std::size_t N>
using Exponent = std::array<std::int64_t, N>;

using Exponent1 = Exponent<1>;
using Exponent2 = Exponent<2>;

template <std::size_t N>
struct ExponentHash {
  std::size_t operator()(const Exponent<N>& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::int64_t x : e) {
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

template <std::size_t N>
class LaurentPoly {
  static_assert(N == 1 || N == 2, "only one- and two-variable rings are supported");

 public:
  using exponent_type = Exponent<N>;
  using term_map = std::unordered_map<exponent_type, Integer, ExponentHash<N>>;
  using term = std::pair<exponent_type, Integer>;

  LaurentPoly() = default;

  /// Constant polynomial.
  explicit LaurentPoly(const Integer& c) { add_term(exponent_type{}, c); }
  explicit LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

  static LaurentPoly monomial(const exponent_type& e, const Integer& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPoly one() { return LaurentPoly(1L); }

  /// m - 1 for the monomial m = q^e; the zero polynomial when e = 0.
  static LaurentPoly binomial_minus_one(const exponent_type& e) {
    LaurentPoly p = monomial(e);
    p.add_term(exponent_type{}, -1);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const term_map& terms() const noexcept { return terms_; }

  Integer coefficient(const exponent_type& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Terms in canonical display order: descending lexicographic exponent.
  std::vector<term> sorted_terms() const {
    std::vector<term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const term& a, const term& b) { return a.first > b.first; });
    return out;
  }

  /// Adds c*q^e, dropping the entry if it cancels.
  void add_term(const exponent_type& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Image under an exponent map, collecting terms that land together.
  template <std::size_t M, class F>
  LaurentPoly<M> map_exponents(F&& f) const {
    LaurentPoly<M> out;
    for (const auto& [e, c] : terms_) out.add_term(f(e), c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& r) {
    *this = *this * r;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }

  friend LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
    LaurentPoly out;
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [er, cr] : r.terms_) {
        exponent_type e;
        for (std::size_t k = 0; k < N; ++k) e[k] = add_checked(ep[k], er[k]);
        out.add_term(e, cp * cr);
      }
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [e, c] : a.terms_) {
      auto it = b.terms_.find(e);
      if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
  }

 private:
  term_map terms_;
};

using LaurentPoly1 = LaurentPoly<1>;
using LaurentPoly2 = LaurentPoly<2>;

/// Where a variable of Z[q1^±1, q2^±1] goes under a ring map into Z[q^±1].
enum class VarTarget { Q, One };

struct SpecializationMap {
  VarTarget q1 = VarTarget::Q;
  VarTarget q2 = VarTarget::Q;

  /// q1, q2 -> q (the two-term module onto the classical one).
  static constexpr SpecializationMap writhe() { return {VarTarget::Q, VarTarget::Q}; }
  /// q1 -> 1, q2 -> q (linking number module).
  static constexpr SpecializationMap linking() { return {VarTarget::One, VarTarget::Q}; }
  /// q1 -> q, q2 -> 1 (self-writhe module).
  static constexpr SpecializationMap self_writhe() { return {VarTarget::Q, VarTarget::One}; }
  /// q1, q2 -> 1.
  static constexpr SpecializationMap augmentation() { return {VarTarget::One, VarTarget::One}; }

  std::int64_t apply(const Exponent2& e) const {
    std::int64_t a = q1 == VarTarget::Q ? e[0] : 0;
    std::int64_t b = q2 == VarTarget::Q ? e[1] : 0;
    return add_checked(a, b);
  }

  friend bool operator==(const SpecializationMap&, const SpecializationMap&) = default;
};

LaurentPoly1 specialize(const LaurentPoly2& p, SpecializationMap s);

/// Renders "3*q1^2*q2^-1 + 1" (two variables) or "-q^3 + 2" (one variable),
/// terms in descending lexicographic exponent order. Zero renders as "0".
template <std::size_t N>
std::string to_string(const LaurentPoly<N>& p);

/// Inverse of to_string. Also accepts whitespace or '*' between factors,
/// parentheses, repeated factors and "^+k". Throws Error(Parse).
template <std::size_t N>
LaurentPoly<N> parse_laurent(std::string_view text);

extern template std::string to_string<1>(const LaurentPoly<1>&);
extern template std::string to_string<2>(const LaurentPoly<2>&);
extern template LaurentPoly<1> parse_laurent<1>(std::string_view);
extern template LaurentPoly<2> parse_laurent<2>(std::string_view);

}  // namespace skeinmod
