#include "skeinmod/skein.hpp"

#include <algorithm>

#include "skeinmod/error.hpp"

namespace skeinmod {

LinkClass::LinkClass(std::vector<ClassLabel> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

std::string to_string(const LinkClass& alpha) {
  bool wide = false;
  for (const ClassLabel& c : alpha.components()) {
    if (c.h.free.size() > 1) wide = true;
  }
  std::string out = "[";
  bool first = true;
  for (const ClassLabel& c : alpha.components()) {
    if (!first) out += wide ? "; " : ",";
    first = false;
    const bool is_inline = !c.h.torsion_tag && c.id == inline_id(c.h) && !c.h.free.empty();
    out += is_inline ? c.id : "id:" + c.id;
  }
  return out + "]";
}

std::string_view to_string(ModuleTag tag) {
  switch (tag) {
    case ModuleTag::Sprime: return "S'";
    case ModuleTag::S: return "S";
    case ModuleTag::L: return "L";
    case ModuleTag::W: return "W";
  }
  return "?";
}

std::string_view option_name(ModuleTag tag) {
  switch (tag) {
    case ModuleTag::Sprime: return "sprime";
    case ModuleTag::S: return "s";
    case ModuleTag::L: return "l";
    case ModuleTag::W: return "w";
  }
  return "?";
}

ModuleTag parse_module_tag(std::string_view text) {
  for (ModuleTag t : {ModuleTag::Sprime, ModuleTag::S, ModuleTag::L, ModuleTag::W}) {
    if (text == option_name(t)) return t;
  }
  throw Error(ErrorKind::Parse, "unknown module \"" + std::string(text) + "\" (expected sprime|s|l|w)");
}

SpecializationMap specialization_for(ModuleTag target) {
  switch (target) {
    case ModuleTag::S: return SpecializationMap::writhe();
    case ModuleTag::L: return SpecializationMap::linking();
    case ModuleTag::W: return SpecializationMap::self_writhe();
    case ModuleTag::Sprime: break;
  }
  throw Error(ErrorKind::Invalid, "S' is the source module, not a specialization target");
}

namespace {

void check_components(const ManifoldModel& M, const std::vector<ClassLabel>& comps) {
  for (const ClassLabel& c : comps) {
    if (c.h.free.size() != M.n) {
      throw Error(ErrorKind::Dimension, "class " + (c.id.empty() ? std::string("()") : c.id) +
                                            " has " + std::to_string(c.h.free.size()) +
                                            " coordinates, model " + M.name + " has h1_rank " +
                                            std::to_string(M.n));
    }
  }
}

HomologyClass1 total_class(const ManifoldModel& M, const std::vector<ClassLabel>& comps) {
  HomologyClass1 sum{std::vector<std::int64_t>(M.n, 0), std::nullopt};
  for (const ClassLabel& c : comps) {
    for (std::size_t k = 0; k < M.n; ++k) sum.free[k] = add_checked(sum.free[k], c.h.free[k]);
  }
  return sum;
}

HomologyClass1 minus(const HomologyClass1& a, const HomologyClass1& b) {
  HomologyClass1 out{a.free, std::nullopt};
  for (std::size_t k = 0; k < out.free.size(); ++k) out.free[k] = add_checked(out.free[k], -b.free[k]);
  return out;
}

}  // namespace

ExponentLattice gamma_prime(const ManifoldModel& M, const LinkClass& alpha) {
  const auto& comps = alpha.components();
  check_components(M, comps);
  const HomologyClass1 total = total_class(M, comps);
  std::vector<Exponent2> gens;
  for (const ClassLabel& c : comps) {
    const HomologyClass1 rest = minus(total, c.h);
    for (const HomologyClass2& t : torus_subgroup(M, c)) {
      gens.push_back({pairing_eval(M, t, c.h), pairing_eval(M, t, rest)});
    }
  }
  return ExponentLattice::from_generators(gens);
}

IndexTriple epsilon_prime(const ManifoldModel& M, const LinkClass& alpha) {
  return gamma_prime(M, alpha).canon();
}

std::int64_t epsilon(const ManifoldModel& M, const LinkClass& alpha) {
  return gamma_prime(M, alpha).sum_image();
}

std::int64_t mu_index(const ManifoldModel& M, const LinkClass& alpha) {
  check_components(M, alpha.components());
  std::int64_t g = 0;
  for (const ClassLabel& c : alpha.components()) {
    for (const HomologyClass2& s : M.sphere_gens) g = gcd_abs(g, pairing_eval(M, s, c.h));
  }
  return g;
}

std::vector<LaurentPoly2> Summand::relations_prime() const {
  std::vector<LaurentPoly2> out;
  for (const Exponent2& e : relation_exponents) out.push_back(LaurentPoly2::binomial_minus_one(e));
  return out;
}

std::vector<LaurentPoly1> Summand::relations() const {
  std::vector<LaurentPoly1> out;
  for (const Exponent2& e : relation_exponents) out.push_back(LaurentPoly1::binomial_minus_one({e[0]}));
  return out;
}

Summand summand(const ManifoldModel& M, const LinkClass& alpha, ModuleTag tag) {
  Summand s{tag, {}};
  if (tag == ModuleTag::W) {
    if (std::int64_t mu = mu_index(M, alpha); mu != 0) s.relation_exponents.push_back({2 * mu, 0});
    return s;
  }
  const ExponentLattice g = gamma_prime(M, alpha);
  const IndexTriple t = g.canon();
  switch (tag) {
    case ModuleTag::Sprime:
      if (t.e1 != 0 || t.e2 != 0) s.relation_exponents.push_back({mul_checked(2, t.e1), mul_checked(2, t.e2)});
      if (t.e3 != 0) s.relation_exponents.push_back({mul_checked(2, t.e3), 0});
      break;
    case ModuleTag::S:
      if (std::int64_t e = g.sum_image(); e != 0) s.relation_exponents.push_back({mul_checked(2, e), 0});
      break;
    case ModuleTag::L:
      if (std::int64_t e = g.second_image(); e != 0) s.relation_exponents.push_back({mul_checked(2, e), 0});
      break;
    case ModuleTag::W: break;
  }
  return s;
}

namespace {

std::string render_binomial(const Exponent2& e, bool two_variables) {
  std::string mono;
  auto factor = [&mono](std::string_view var, std::int64_t k) {
    if (k == 0) return;
    if (!mono.empty()) mono += ' ';
    mono += var;
    if (k != 1) mono += "^" + std::to_string(k);
  };
  if (two_variables) {
    factor("q1", e[0]);
    factor("q2", e[1]);
  } else {
    factor("q", e[0]);
  }
  return mono + " - 1";
}

}  // namespace

std::string to_string(const Summand& s) {
  const bool prime = s.tag == ModuleTag::Sprime;
  const std::string ring = prime ? "R'" : "R";
  if (s.is_free()) return ring + " (free)";
  std::string out = ring + "/(";
  for (std::size_t k = 0; k < s.relation_exponents.size(); ++k) {
    if (k) out += ", ";
    out += render_binomial(s.relation_exponents[k], prime);
  }
  return out + ")";
}

LaurentPoly1 torsion_annihilator(const ManifoldModel& M, const LinkClass& alpha, ModuleTag tag) {
  if (tag == ModuleTag::Sprime) {
    throw Error(ErrorKind::Invalid, "use torsion_annihilator_prime for S'");
  }
  const Summand s = summand(M, alpha, tag);
  return s.is_free() ? LaurentPoly1{} : s.relations().front();
}

std::vector<LaurentPoly2> torsion_annihilator_prime(const ManifoldModel& M, const LinkClass& alpha) {
  return summand(M, alpha, ModuleTag::Sprime).relations_prime();
}

CosetReducer::CosetReducer(const ManifoldModel& M, const LinkClass& alpha, ModuleTag tag) : tag_(tag) {
  if (tag == ModuleTag::W) {
    modulus_ = mul_checked(2, mu_index(M, alpha));
    return;
  }
  const ExponentLattice g = gamma_prime(M, alpha);
  switch (tag) {
    case ModuleTag::Sprime: doubled_ = g.scaled(2); break;
    case ModuleTag::S: modulus_ = mul_checked(2, g.sum_image()); break;
    case ModuleTag::L: modulus_ = mul_checked(2, g.second_image()); break;
    case ModuleTag::W: break;
  }
}

// ---------------------------------------------------------------------------

namespace {

template <std::size_t N>
void check_tag(ModuleTag tag) {
  const bool prime = tag == ModuleTag::Sprime;
  if (prime != (N == 2)) {
    throw Error(ErrorKind::Invalid, std::string("module ") + std::string(to_string(tag)) +
                                        (N == 2 ? " has one-variable coefficients"
                                                : " has two-variable coefficients"));
  }
}

}  // namespace

template <std::size_t N>
SkeinElement<N>::SkeinElement(std::shared_ptr<const ManifoldModel> model, ModuleTag tag)
    : model_(std::move(model)), tag_(tag) {
  if (!model_) throw Error(ErrorKind::Invalid, "skein element needs a manifold model");
  check_tag<N>(tag);
}

template <std::size_t N>
SkeinElement<N> SkeinElement<N>::basis(std::shared_ptr<const ManifoldModel> model, ModuleTag tag,
                                       const LinkClass& alpha, const coefficient_type& coefficient) {
  SkeinElement e(std::move(model), tag);
  e.add(alpha, coefficient);
  return e;
}

template <std::size_t N>
void SkeinElement<N>::add(const LinkClass& alpha, const coefficient_type& coefficient) {
  if (coefficient.is_zero()) return;
  const CosetReducer reducer(*model_, alpha, tag_);
  auto it = terms_.find(alpha);
  coefficient_type sum = it == terms_.end() ? coefficient : it->second + coefficient;
  coefficient_type reduced = reducer.reduce(sum);
  if (reduced.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(alpha, std::move(reduced));
  } else {
    it->second = std::move(reduced);
  }
}

template class SkeinElement<1>;
template class SkeinElement<2>;

namespace {

template <std::size_t N>
void check_compatible(const SkeinElement<N>& a, const SkeinElement<N>& b) {
  if (a.tag() != b.tag()) {
    throw Error(ErrorKind::Invalid, std::string("cannot combine elements of ") +
                                        std::string(to_string(a.tag())) + " and " +
                                        std::string(to_string(b.tag())));
  }
  if (a.model_ptr() != b.model_ptr() && !(a.model() == b.model())) {
    throw Error(ErrorKind::Invalid, "cannot combine elements over different manifolds (" +
                                        a.model().name + ", " + b.model().name + ")");
  }
}

}  // namespace

template <std::size_t N>
SkeinElement<N> element_add(const SkeinElement<N>& a, const SkeinElement<N>& b) {
  check_compatible(a, b);
  SkeinElement<N> out = a;
  for (const auto& [alpha, c] : b.terms()) out.add(alpha, c);
  return out;
}

template <std::size_t N>
SkeinElement<N> element_scale(const LaurentPoly<N>& p, const SkeinElement<N>& a) {
  SkeinElement<N> out(a.model_ptr(), a.tag());
  for (const auto& [alpha, c] : a.terms()) out.add(alpha, p * c);
  return out;
}

ReducedElement element_specialize(const PrimeElement& a, ModuleTag target) {
  if (a.tag() != ModuleTag::Sprime) throw Error(ErrorKind::Invalid, "specialization starts from S'");
  const SpecializationMap map = specialization_for(target);
  ReducedElement out(a.model_ptr(), target);
  for (const auto& [alpha, c] : a.terms()) out.add(alpha, specialize(c, map));
  return out;
}

template <std::size_t N>
std::string to_string(const SkeinElement<N>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [alpha, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string coef = to_string(c);
    if (c.size() > 1) coef = "(" + coef + ")";
    out += coef + " " + to_string(alpha);
  }
  return out;
}

template PrimeElement element_add<2>(const PrimeElement&, const PrimeElement&);
template ReducedElement element_add<1>(const ReducedElement&, const ReducedElement&);
template PrimeElement element_scale<2>(const LaurentPoly2&, const PrimeElement&);
template ReducedElement element_scale<1>(const LaurentPoly1&, const ReducedElement&);
template std::string to_string<1>(const ReducedElement&);
template std::string to_string<2>(const PrimeElement&);

// ---------------------------------------------------------------------------

namespace {

void check_index(const MoveTrace& trace, std::size_t i, std::size_t move_no) {
  if (i >= trace.components.size()) {
    throw Error(ErrorKind::Dimension, "move " + std::to_string(move_no + 1) + ": component index " +
                                          std::to_string(i + 1) + " out of range 1.." +
                                          std::to_string(trace.components.size()));
  }
}

void check_sign(int s, std::size_t move_no) {
  if (s != 1 && s != -1) {
    throw Error(ErrorKind::Parse, "move " + std::to_string(move_no + 1) + ": sign must be +1 or -1, got " +
                                      std::to_string(s));
  }
}

}  // namespace

WrithePair trace_writhe(const ManifoldModel& M, const MoveTrace& trace) {
  check_components(M, trace.components);
  const HomologyClass1 total = total_class(M, trace.components);
  std::optional<ExponentLattice> gamma;  // built on the first slide
  WrithePair w;
  for (std::size_t k = 0; k < trace.moves.size(); ++k) {
    const Move& mv = trace.moves[k];
    if (const auto* tw = std::get_if<Twist>(&mv)) {
      check_index(trace, tw->i, k);
      check_sign(tw->s, k);
      w.w1 = add_checked(w.w1, tw->s);
    } else if (const auto* sc = std::get_if<SelfCross>(&mv)) {
      check_index(trace, sc->i, k);
      check_sign(sc->s, k);
      w.w1 = add_checked(w.w1, 2 * sc->s);
    } else if (const auto* mc = std::get_if<MixedCross>(&mv)) {
      check_index(trace, mc->i, k);
      check_index(trace, mc->j, k);
      check_sign(mc->s, k);
      if (mc->i == mc->j) {
        throw Error(ErrorKind::Dimension, "move " + std::to_string(k + 1) +
                                              ": mixed crossing needs two distinct components");
      }
      w.w2 = add_checked(w.w2, 2 * mc->s);
    } else {
      const auto& sl = std::get<Slide>(mv);
      check_index(trace, sl.i, k);
      if (sl.t.vec.size() != M.m) {
        throw Error(ErrorKind::Dimension, "move " + std::to_string(k + 1) + ": slide class has length " +
                                              std::to_string(sl.t.vec.size()) + ", expected " +
                                              std::to_string(M.m));
      }
      const ClassLabel& c = trace.components[sl.i];
      const Exponent2 pair{pairing_eval(M, sl.t, c.h), pairing_eval(M, sl.t, minus(total, c.h))};
      if (!gamma) gamma = gamma_prime(M, trace.alpha());
      if (!gamma->contains(pair)) {
        throw Error(ErrorKind::Invalid,
                    "move " + std::to_string(k + 1) + ": slide pair (" + std::to_string(pair[0]) + "," +
                        std::to_string(pair[1]) + ") is not in the torus lattice " +
                        gamma->basis_string() + " of this link class");
      }
      w.w1 = add_checked(w.w1, mul_checked(2, pair[0]));
      w.w2 = add_checked(w.w2, mul_checked(2, pair[1]));
    }
  }
  return w;
}

TraceResult trace_evaluate(const std::shared_ptr<const ManifoldModel>& model, const MoveTrace& trace) {
  const WrithePair raw = trace_writhe(*model, trace);
  const LinkClass alpha = trace.alpha();
  const CosetReducer reducer(*model, alpha, ModuleTag::Sprime);
  const Exponent2 reduced = reducer.reduce(Exponent2{raw.w1, raw.w2});
  PrimeElement element = PrimeElement::basis(model, ModuleTag::Sprime, alpha, LaurentPoly2::monomial(reduced));
  return {raw, reduced, std::move(element)};
}

ReducedElement trace_evaluate_in(const std::shared_ptr<const ManifoldModel>& model,
                                 const MoveTrace& trace, ModuleTag target) {
  const WrithePair raw = trace_writhe(*model, trace);
  const std::int64_t e = specialization_for(target).apply({raw.w1, raw.w2});
  return ReducedElement::basis(model, target, trace.alpha(), LaurentPoly1::monomial({e}));
}

// ---------------------------------------------------------------------------

FreenessVerdict is_free(const ManifoldModel& M, ModuleTag tag) {
  std::vector<HomologyClass2> surfaces;
  if (tag == ModuleTag::W) {
    surfaces = M.sphere_gens;
  } else {
    surfaces = M.torus_default;
    for (const auto& [id, list] : M.torus_exceptions) surfaces.insert(surfaces.end(), list.begin(), list.end());
    if (M.torus_rule == TorusRule::Sweep) {
      for (std::size_t j = 0; j < M.n; ++j) {
        HomologyClass1 e{std::vector<std::int64_t>(M.n, 0), std::nullopt};
        e.free[j] = 1;
        auto swept = torus_subgroup(M, ClassLabel{inline_id(e), e});
        surfaces.insert(surfaces.end(), swept.begin(), swept.end());
      }
    }
  }
  for (const HomologyClass2& s : surfaces) {
    for (std::size_t k = 0; k < M.n; ++k) {
      HomologyClass1 e{std::vector<std::int64_t>(M.n, 0), std::nullopt};
      e.free[k] = 1;
      if (std::int64_t v = pairing_eval(M, s, e); v != 0) return {false, FreenessWitness{s, e, v}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace skeinmod
