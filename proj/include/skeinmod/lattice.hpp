#pragma once

// Subgroups of Z^2 in the normal form ((e1, e2), (e3, 0)).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skeinmod/laurent.hpp"

namespace skeinmod {

/// (e1, e2, e3) with e1, e3 >= 0 and e1 < e3 whenever e3 > 0.
struct IndexTriple {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t e3 = 0;

  friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

std::string to_string(const IndexTriple& t);  // "(e1,e2,e3)"

/// A subgroup of Z^2 kept alongside its raw generators.
///
/// Canonical form:
///  - rank 0: (0, 0, 0)
///  - rank 2: e3 generates L ∩ (Z x 0), e2 > 0 generates the projection to the
///    second coordinate, and (e1, e2) ∈ L with 0 <= e1 < e3
///  - rank 1 with generator (a, b), sign fixed so a > 0 or (a == 0, b >= 0):
///    (a, b, 0); cyclic lattices are exactly those with e3 == 0
class ExponentLattice {
 public:
  ExponentLattice() = default;

  static ExponentLattice from_generators(std::span<const Exponent2> gens);

  const std::vector<Exponent2>& generators() const noexcept { return gens_; }
  const IndexTriple& canon() const noexcept { return canon_; }
  int rank() const noexcept { return rank_; }

  bool contains(const Exponent2& v) const;

  /// Canonical coset representative: second coordinate in [0, |e2|) when
  /// e2 != 0, then first coordinate in [0, e3) when e3 > 0, or in [0, e1)
  /// for a cyclic lattice (e1, 0).
  Exponent2 reduce(const Exponent2& v) const;

  /// Generator of the image under (a, b) -> a + b.
  std::int64_t sum_image() const;
  /// Generator of the projection to the first coordinate.
  std::int64_t first_image() const;
  /// Generator of the projection to the second coordinate.
  std::int64_t second_image() const;

  /// The lattice k*L.
  ExponentLattice scaled(std::int64_t k) const;

  /// "(e1,e2),(e3,0)"
  std::string basis_string() const;

  friend bool operator==(const ExponentLattice& a, const ExponentLattice& b) {
    return a.canon_ == b.canon_;
  }

 private:
  std::vector<Exponent2> gens_;
  IndexTriple canon_;
  int rank_ = 0;
};

}  // namespace skeinmod
