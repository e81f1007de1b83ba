#pragma once

namespace htldp {

/// max ⟨By, y⟩ over y ≥ 0 with Σ y_i^δ = 1, where B is n×n with diagonal λ and
/// off-diagonal μ: max_{1≤k≤n} (λ + (k−1)μ)·k^{1−2/δ}.
/// Requires 0 ≤ λ < μ, δ ∈ (0, 1), n ≥ 1; throws DomainError otherwise.
double quadform_max_simplex(double lambda, double mu, double delta, int n);

/// Same maximum for the bipartite matrix [[λI_k, μU], [μUᵀ, λI_l]]:
/// max(λ, (λ + μ)·2^{1−2/δ}). Requires λ, μ ≥ 0 and δ ∈ (0, 1).
double quadform_max_bipartite(double lambda, double mu, double delta);

/// max Σ_{i≠j} |X_ij|^β over PSD trace-one Hermitian X of size n:
/// max_{2≤k≤n} (k−1)·k^{1−β}. Requires β ≥ 2, n ≥ 2.
double psd_offdiag_max(double beta, int n);

}  // namespace htldp
