#pragma once

// Summand tables over enumerated link classes. The per-class index
// computations are independent; decompose_parallel fans them out with
// OpenMP and decompose_serial is the reference it is tested against.

#include <cstdint>
#include <span>
#include <vector>

#include "skeinmod/skein.hpp"

namespace skeinmod {

struct DecomposeRow {
  LinkClass alpha;
  IndexTriple eps_prime;
  std::int64_t eps = 0;
  std::int64_t mu = 0;
  std::int64_t eps2 = 0;         // |e2|, the linking-number index
  std::int64_t first_image = 0;  // gcd(e1, e3)

  friend bool operator==(const DecomposeRow&, const DecomposeRow&) = default;
};

/// Candidate classes for enumeration: the model's class table entries with
/// every coordinate in [-bound, bound] when the table is non-empty,
/// otherwise every inline class of the box [-bound, bound]^n (none if n = 0).
std::vector<ClassLabel> candidate_classes(const ManifoldModel& M, std::int64_t bound);

/// Every multiset of candidate classes of size <= bound, ordered by size and
/// then lexicographically in candidate order.
std::vector<LinkClass> enumerate_link_classes(const ManifoldModel& M, std::int64_t bound);

DecomposeRow decompose_row(const ManifoldModel& M, const LinkClass& alpha);

std::vector<DecomposeRow> decompose_serial(const ManifoldModel& M, std::span<const LinkClass> alphas);
std::vector<DecomposeRow> decompose_parallel(const ManifoldModel& M, std::span<const LinkClass> alphas);

/// Rows where the torus-side W index gcd(e1, e3) differs from the sphere
/// index μ(α). Genuine manifolds have none; hand-written tables might.
std::vector<DecomposeRow> sphere_torus_discrepancies(std::span<const DecomposeRow> rows);

}  // namespace skeinmod
