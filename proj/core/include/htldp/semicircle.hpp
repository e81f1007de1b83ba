#pragma once

#include <complex>

namespace htldp {

/// Semicircle density (1/2π)√(4−t²) on [−2, 2], zero outside.
double semicircle_density(double t) noexcept;

/// Distribution function of the semicircle law.
double semicircle_cdf(double t) noexcept;

/// Stieltjes transform of the semicircle law on [2, ∞): (x − √(x²−4))/2.
/// Throws DomainError for x < 2 (or NaN).
double stieltjes(double x);

/// Stieltjes transform G(z) = ∫ dσ(t)/(z−t) for z off the cut (−2, 2).
///
/// The square root branch is the one with G(z) ~ 1/z at infinity, obtained as
/// √(z−2)·√(z+2) with principal roots. Real z in (−2, 2) throws DomainError.
std::complex<double> stieltjes_complex(std::complex<double> z);

/// Inverse of `stieltjes` on (0, 1]: g + 1/g.
double stieltjes_inverse(double g);

/// Parameters of the rate function: tail exponent and variational constant.
struct RateFunctionParams {
  double alpha;
  double c;

  /// Throws ValidationError unless 0 < alpha < 2 and 0 < c < ∞.
  void validate() const;
};

/// Rate function of the largest eigenvalue:
/// +∞ below 2, 0 at 2, c·G(x)^(−α) above 2. Never NaN for non-NaN x.
double rate_J(double x, const RateFunctionParams& params);

}  // namespace htldp
