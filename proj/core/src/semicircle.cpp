#include "htldp/semicircle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "htldp/errors.hpp"

namespace htldp {

double semicircle_density(double t) noexcept {
  if (!(std::abs(t) <= 2.0)) return 0.0;
  return std::sqrt((2.0 - t) * (2.0 + t)) / (2.0 * std::numbers::pi);
}

double semicircle_cdf(double t) noexcept {
  if (t <= -2.0) return 0.0;
  if (t >= 2.0) return 1.0;
  const double root = std::sqrt((2.0 - t) * (2.0 + t));
  return 0.5 + t * root / (4.0 * std::numbers::pi) + std::asin(t / 2.0) / std::numbers::pi;
}

// Written as 2/(x + √(x²−4)) to avoid the cancellation in x − √(x²−4) for large x.
double stieltjes(double x) {
  if (!(x >= 2.0)) {
    throw DomainError("stieltjes: x must be >= 2, got " + std::to_string(x));
  }
  return 2.0 / (x + std::sqrt((x - 2.0) * (x + 2.0)));
}

std::complex<double> stieltjes_complex(std::complex<double> z) {
  if (z.imag() == 0.0 && std::abs(z.real()) < 2.0) {
    throw DomainError("stieltjes_complex: z lies on the cut (-2, 2)");
  }
  if (std::isnan(z.real()) || std::isnan(z.imag())) {
    throw DomainError("stieltjes_complex: NaN argument");
  }
  const std::complex<double> root = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
  return 2.0 / (z + root);
}

double stieltjes_inverse(double g) {
  if (!(g > 0.0 && g <= 1.0)) {
    throw DomainError("stieltjes_inverse: g must lie in (0, 1], got " + std::to_string(g));
  }
  return g + 1.0 / g;
}

void RateFunctionParams::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw ValidationError("rate function: alpha must lie in (0, 2)");
  }
  if (!(c > 0.0 && std::isfinite(c))) {
    throw ValidationError("rate function: c must be positive and finite");
  }
}

double rate_J(double x, const RateFunctionParams& params) {
  params.validate();
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < 2.0) return std::numeric_limits<double>::infinity();
  if (x == 2.0) return 0.0;
  return params.c * std::pow(stieltjes(x), -params.alpha);
}

}  // namespace htldp
