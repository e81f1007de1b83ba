#pragma once

#include <cstddef>

#include "htldp/sparse_hermitian.hpp"

namespace htldp {

/// Largest number of touched rows per matrix accepted by perm_invariant_distance.
inline constexpr std::size_t kMaxTouchedRows = 8;

/// min over simultaneous relabelings σ, σ' of max_{i,j} |A_σ(i)σ(j) − B_σ'(i)σ'(j)|,
/// both matrices padded with zeros to a common dimension.
///
/// Exact branch and bound over partial matchings of the touched rows of A to
/// those of B (an unmatched row is sent to a zero row). Throws ValidationError
/// when either matrix touches more than kMaxTouchedRows rows.
double perm_invariant_distance(const SparseHermitian& A, const SparseHermitian& B);

}  // namespace htldp
