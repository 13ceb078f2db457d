#pragma once

// Cyclic-summand decomposition of the two-variable skein module and its
// specializations, canonical skein elements, and move-trace evaluation.
//
// For a multiset α of loop classes the summand of S'(M) is
//
//   R' / (q1^{2e1} q2^{2e2} - 1, q1^{2e3} - 1),     (e1, e2, e3) = ε'(α),
//
// where ((e1, e2), (e3, 0)) is the normal form of the lattice Γ'(α) generated
// by the pairs (λ(t, αi), λ(t, α∖αi)) over all swept-torus classes t of each
// component αi. Because the ideal is generated by binomials q^v - 1 with v
// running over 2Γ'(α), the quotient is the group ring of Z^2 / 2Γ'(α), and a
// coefficient is canonical once each exponent is replaced by its coset
// representative.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skeinmod/laurent.hpp"
#include "skeinmod/lattice.hpp"
#include "skeinmod/manifold.hpp"

namespace skeinmod {

/// Unordered sequence of loop classes, stored sorted.
class LinkClass {
 public:
  LinkClass() = default;
  explicit LinkClass(std::vector<ClassLabel> components);

  const std::vector<ClassLabel>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  bool empty() const noexcept { return components_.empty(); }

  friend auto operator<=>(const LinkClass&, const LinkClass&) = default;
  friend bool operator==(const LinkClass&, const LinkClass&) = default;

 private:
  std::vector<ClassLabel> components_;
};

/// "[1,2]", "[1,0,0; 0,1,0]", "[id:beta,id:gamma]", "[]".
std::string to_string(const LinkClass& alpha);

/// S' is the two-variable module; S, L, W are its images under
/// q1,q2 -> q; q1 -> 1, q2 -> q; and q1 -> q, q2 -> 1 respectively.
enum class ModuleTag { Sprime, S, L, W };

std::string_view to_string(ModuleTag tag);           // "S'", "S", "L", "W"
std::string_view option_name(ModuleTag tag);         // "sprime", "s", "l", "w"
ModuleTag parse_module_tag(std::string_view text);   // accepts option_name
SpecializationMap specialization_for(ModuleTag target);

ExponentLattice gamma_prime(const ManifoldModel& M, const LinkClass& alpha);
IndexTriple epsilon_prime(const ManifoldModel& M, const LinkClass& alpha);
std::int64_t epsilon(const ManifoldModel& M, const LinkClass& alpha);
/// gcd over components and sphere generators of |λ(s, αi)|.
std::int64_t mu_index(const ManifoldModel& M, const LinkClass& alpha);

/// Relation set of one cyclic summand. Every relation is q^e - 1; for the
/// one-variable modules only e[0] is used. No relations means free.
struct Summand {
  ModuleTag tag = ModuleTag::Sprime;
  std::vector<Exponent2> relation_exponents;

  bool is_free() const noexcept { return relation_exponents.empty(); }
  std::vector<LaurentPoly2> relations_prime() const;
  std::vector<LaurentPoly1> relations() const;
};

Summand summand(const ManifoldModel& M, const LinkClass& alpha, ModuleTag tag);

/// "R'/(q1^4 q2^2 - 1, q1^6 - 1)", "R/(q^6 - 1)", "R' (free)".
std::string to_string(const Summand& s);

/// q^{2k} - 1 for the one-variable modules (zero when the summand is free).
LaurentPoly1 torsion_annihilator(const ManifoldModel& M, const LinkClass& alpha, ModuleTag tag);
/// The ideal generators of the S' summand (empty when free).
std::vector<LaurentPoly2> torsion_annihilator_prime(const ManifoldModel& M, const LinkClass& alpha);

/// Canonical exponent reduction for the summand of one class in one module.
class CosetReducer {
 public:
  CosetReducer(const ManifoldModel& M, const LinkClass& alpha, ModuleTag tag);

  ModuleTag tag() const noexcept { return tag_; }
  /// The doubled lattice 2Γ'(α); meaningful for S' only.
  const ExponentLattice& doubled_lattice() const noexcept { return doubled_; }
  /// 2ε, 2|e2| or 2μ; meaningful for S, L, W.
  std::int64_t modulus() const noexcept { return modulus_; }

  Exponent2 reduce(const Exponent2& e) const { return doubled_.reduce(e); }
  std::int64_t reduce(std::int64_t e) const { return modulus_ > 0 ? floor_mod(e, modulus_) : e; }

  template <std::size_t N>
  LaurentPoly<N> reduce(const LaurentPoly<N>& p) const {
    if constexpr (N == 2) {
      return p.template map_exponents<2>([this](const Exponent2& e) { return reduce(e); });
    } else {
      return p.template map_exponents<1>([this](const Exponent1& e) { return Exponent1{reduce(e[0])}; });
    }
  }

 private:
  ModuleTag tag_;
  ExponentLattice doubled_;
  std::int64_t modulus_ = 0;
};

/// Finite-support element of S'(M) (N = 2) or of S, L, W (N = 1). Every
/// coefficient is kept in canonical reduced form for its class.
template <std::size_t N>
class SkeinElement {
 public:
  using coefficient_type = LaurentPoly<N>;
  using term_map = std::map<LinkClass, coefficient_type>;

  /// The zero element.
  SkeinElement(std::shared_ptr<const ManifoldModel> model, ModuleTag tag);

  /// coefficient * [x_α].
  static SkeinElement basis(std::shared_ptr<const ManifoldModel> model, ModuleTag tag,
                            const LinkClass& alpha,
                            const coefficient_type& coefficient = coefficient_type::one());

  ModuleTag tag() const noexcept { return tag_; }
  const ManifoldModel& model() const noexcept { return *model_; }
  const std::shared_ptr<const ManifoldModel>& model_ptr() const noexcept { return model_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coefficient * [x_α], reducing and dropping a vanishing coefficient.
  void add(const LinkClass& alpha, const coefficient_type& coefficient);

  friend bool operator==(const SkeinElement& a, const SkeinElement& b) {
    return a.tag_ == b.tag_ && (a.model_ == b.model_ || *a.model_ == *b.model_) && a.terms_ == b.terms_;
  }

 private:
  std::shared_ptr<const ManifoldModel> model_;
  ModuleTag tag_;
  term_map terms_;
};

using PrimeElement = SkeinElement<2>;
using ReducedElement = SkeinElement<1>;

extern template class SkeinElement<1>;
extern template class SkeinElement<2>;

/// Throws Error(Invalid) on tag or manifold mismatch.
template <std::size_t N>
SkeinElement<N> element_add(const SkeinElement<N>& a, const SkeinElement<N>& b);

template <std::size_t N>
SkeinElement<N> element_scale(const LaurentPoly<N>& p, const SkeinElement<N>& a);

/// Applies the ring map of `target` to every coefficient and reduces in the
/// target summand.
ReducedElement element_specialize(const PrimeElement& a, ModuleTag target);

/// "q1*q2^2 [1,2] + (q1 + 1) [3]"; "0" for the zero element.
template <std::size_t N>
std::string to_string(const SkeinElement<N>& a);

extern template PrimeElement element_add<2>(const PrimeElement&, const PrimeElement&);
extern template ReducedElement element_add<1>(const ReducedElement&, const ReducedElement&);
extern template PrimeElement element_scale<2>(const LaurentPoly2&, const PrimeElement&);
extern template ReducedElement element_scale<1>(const LaurentPoly1&, const ReducedElement&);
extern template std::string to_string<1>(const ReducedElement&);
extern template std::string to_string<2>(const PrimeElement&);

// ---------------------------------------------------------------------------
// Move traces. Component indices are 0-based positions in `components`.

struct Twist {
  std::size_t i;
  int s;
};
struct SelfCross {
  std::size_t i;
  int s;
};
struct MixedCross {
  std::size_t i;
  std::size_t j;
  int s;
};
/// Drag component i once around a loop in the free loop space whose trace
/// is a torus of class t.
struct Slide {
  std::size_t i;
  HomologyClass2 t;
};

using Move = std::variant<Twist, SelfCross, MixedCross, Slide>;

struct MoveTrace {
  std::vector<ClassLabel> components;
  std::vector<Move> moves;

  LinkClass alpha() const { return LinkClass(components); }
};

/// Relative self-writhe and total linking number against x_α.
struct WrithePair {
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;

  friend bool operator==(const WrithePair&, const WrithePair&) = default;
};

struct TraceResult {
  WrithePair raw;
  Exponent2 reduced;
  PrimeElement element;
};

/// Raw (w1, w2). Throws Error(Dimension) for an out-of-range component index
/// or a slide vector of the wrong length, Error(Parse) for a sign other than
/// ±1, and Error(Invalid) for a slide whose intersection pair lies outside
/// Γ'(α) (no such torus exists in the model).
WrithePair trace_writhe(const ManifoldModel& M, const MoveTrace& trace);

TraceResult trace_evaluate(const std::shared_ptr<const ManifoldModel>& model, const MoveTrace& trace);

/// Evaluates the trace directly in S, L or W: the raw pair is mapped by the
/// target's ring map and reduced by the target relation.
ReducedElement trace_evaluate_in(const std::shared_ptr<const ManifoldModel>& model,
                                 const MoveTrace& trace, ModuleTag target);

// ---------------------------------------------------------------------------
// Freeness.

struct FreenessWitness {
  HomologyClass2 surface;  // a torus generator (S', S, L) or sphere generator (W)
  HomologyClass1 loop;     // an H1 basis vector
  std::int64_t pairing = 0;
};

struct FreenessVerdict {
  bool free = true;
  std::optional<FreenessWitness> witness;
};

/// S', S, L: every torus generator (default list, exception lists, sweep rule
/// on basis classes) pairs to zero with every H1 basis vector. W: the same
/// test against the sphere generators.
FreenessVerdict is_free(const ManifoldModel& M, ModuleTag tag);

}  // namespace skeinmod
