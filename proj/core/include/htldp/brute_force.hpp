#pragma once

#include <cstddef>
#include <cstdint>

#include "htldp/sparse_hermitian.hpp"
#include "htldp/tail_params.hpp"

namespace htldp {

struct BruteForceBudget {
  int restarts = 32;               // local searches per (size, phase pattern)
  std::size_t max_patterns = 64;   // patterns per size; all are enumerated when fewer exist
  int max_iterations = 400;        // BFGS iterations per local search
  double tolerance = 1e-8;         // stop when successive values differ by less (relative)
  std::size_t polish_candidates = 3;  // best local optima per size refined by discrete moves
  unsigned threads = 0;            // 0: resolve_threads()
};

struct BruteForceResult {
  double c = 0.0;
  SparseHermitian argmin;          // scaled to λ_max = 1
  std::size_t patterns = 0;
  std::size_t local_searches = 0;
};

/// Numerical minimum of I(A) over Hermitian A of size ≤ max_n with λ_max(A) = 1 and
/// entry phases in the supports.
///
/// Phases are fixed per pattern and magnitudes optimized by BFGS in log space on
/// log I(A) − α log λ_max(A), which is invariant under A → tA and so carries the
/// spectral constraint implicitly. The first two restarts start from equal
/// magnitudes on all slots and on the off-diagonal slots only; the others from
/// a random (often sparse) support. The best optima per size are then refined by dropping entries
/// and switching phases. Deterministic in `seed` for any thread count.
///
/// Throws ValidationError for max_n outside [1, 6] or when no size admits a
/// matrix with positive top eigenvalue.
BruteForceResult brute_force_c(const TailParams& params, int max_n, std::uint64_t seed = 0,
                               const BruteForceBudget& budget = {});

}  // namespace htldp
