#include <exception>

#include "skeinmod/decompose.hpp"

namespace skeinmod {

std::vector<DecomposeRow> decompose_parallel(const ManifoldModel& M, std::span<const LinkClass> alphas) {
  const auto count = static_cast<std::ptrdiff_t>(alphas.size());
  std::vector<DecomposeRow> rows(alphas.size());
  // Exceptions cannot cross the parallel region; keep the one from the
  // lowest index so the reported error matches the serial kernel.
  std::exception_ptr failure;
  std::ptrdiff_t failed_at = count;

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      rows[static_cast<std::size_t>(k)] = decompose_row(M, alphas[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical(skeinmod_decompose_failure)
      {
        if (k < failed_at) {
          failed_at = k;
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace skeinmod
