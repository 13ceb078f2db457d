#include "skeinmod/decompose.hpp"

#include <algorithm>

#include "skeinmod/error.hpp"

namespace skeinmod {

std::vector<ClassLabel> candidate_classes(const ManifoldModel& M, std::int64_t bound) {
  if (bound < 0) throw Error(ErrorKind::Invalid, "enumeration bound must be >= 0");
  std::vector<ClassLabel> out;
  if (!M.classes.empty()) {
    for (const ClassLabel& c : M.classes) {
      if (std::all_of(c.h.free.begin(), c.h.free.end(),
                      [bound](std::int64_t x) { return x >= -bound && x <= bound; })) {
        out.push_back(c);
      }
    }
  } else if (M.n > 0) {
    std::vector<std::int64_t> v(M.n, -bound);
    for (;;) {
      HomologyClass1 h{v, std::nullopt};
      out.push_back({inline_id(h), h});
      std::size_t k = M.n;
      while (k > 0 && v[k - 1] == bound) v[--k] = -bound;
      if (k == 0) break;
      ++v[k - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinkClass> enumerate_link_classes(const ManifoldModel& M, std::int64_t bound) {
  const std::vector<ClassLabel> cands = candidate_classes(M, bound);
  std::vector<LinkClass> out;
  out.emplace_back();
  if (cands.empty()) return out;
  const std::size_t c = cands.size();
  for (std::int64_t size = 1; size <= bound; ++size) {
    // Non-decreasing index sequences in lexicographic order.
    std::vector<std::size_t> idx(static_cast<std::size_t>(size), 0);
    for (;;) {
      std::vector<ClassLabel> comps;
      comps.reserve(idx.size());
      for (std::size_t i : idx) comps.push_back(cands[i]);
      out.emplace_back(std::move(comps));
      std::size_t k = idx.size();
      while (k > 0 && idx[k - 1] == c - 1) --k;
      if (k == 0) break;
      const std::size_t next = idx[k - 1] + 1;
      for (std::size_t j = k - 1; j < idx.size(); ++j) idx[j] = next;
    }
  }
  return out;
}

DecomposeRow decompose_row(const ManifoldModel& M, const LinkClass& alpha) {
  const ExponentLattice g = gamma_prime(M, alpha);
  return {alpha, g.canon(), g.sum_image(), mu_index(M, alpha), g.second_image(), g.first_image()};
}

std::vector<DecomposeRow> decompose_serial(const ManifoldModel& M, std::span<const LinkClass> alphas) {
  std::vector<DecomposeRow> rows;
  rows.reserve(alphas.size());
  for (const LinkClass& a : alphas) rows.push_back(decompose_row(M, a));
  return rows;
}

std::vector<DecomposeRow> sphere_torus_discrepancies(std::span<const DecomposeRow> rows) {
  std::vector<DecomposeRow> out;
  for (const DecomposeRow& r : rows) {
    if (r.first_image != r.mu) out.push_back(r);
  }
  return out;
}

}  // namespace skeinmod
