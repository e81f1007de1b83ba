#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace htldp {

using Phase = std::complex<double>;
using PhaseSet = std::vector<Phase>;

/// Tolerance used when comparing phases (unit complex numbers).
inline constexpr double kPhaseTolerance = 1e-9;

/// Statistical model of the matrix entries.
///
/// `a` and `b` are the stretched-exponential tail constants of the off-diagonal
/// and diagonal moduli, `kappa` a uniform tail bound constant, and the two
/// supports hold the limiting angle laws of large diagonal / off-diagonal
/// entries. Diagonal entries are real, so `nu1_support` ⊆ {−1, +1}.
struct TailParams {
  double alpha = 1.0;
  double a = 1.0;
  double b = 1.0;
  double kappa = 0.5;
  PhaseSet nu1_support{{1.0, 0.0}, {-1.0, 0.0}};
  PhaseSet nu2_support{{1.0, 0.0}, {-1.0, 0.0}};
  bool complex_entries = false;

  /// Throws ValidationError on any broken invariant.
  void validate() const;
};

bool support_contains(const PhaseSet& support, Phase z, double tol = kPhaseTolerance);
/// True iff the support is exactly the single phase `z`.
bool support_is_only(const PhaseSet& support, Phase z, double tol = kPhaseTolerance);

/// Parses one phase token: "1", "+1", "-1", "i", "+i", "-i", or an angle "<deg>deg".
Phase parse_phase(std::string_view token);
/// Parses a comma separated list of phase tokens.
PhaseSet parse_support(std::string_view csv);
/// Inverse of parse_phase for the named phases; other angles print as "<deg>deg".
std::string format_phase(Phase z);
std::string format_support(const PhaseSet& support);

void to_json(nlohmann::json& j, const TailParams& p);
void from_json(const nlohmann::json& j, TailParams& p);

}  // namespace htldp
