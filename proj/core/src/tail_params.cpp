#include "htldp/tail_params.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "htldp/errors.hpp"

namespace htldp {

namespace {

void validate_support(const PhaseSet& support, const char* name) {
  if (support.empty()) {
    throw ValidationError(std::string(name) + " must not be empty");
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (std::abs(std::abs(support[i]) - 1.0) > 1e-12) {
      throw ValidationError(std::string(name) + " contains a phase of modulus != 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(support[i] - support[j]) < kPhaseTolerance) {
        throw ValidationError(std::string(name) + " contains duplicate phases");
      }
    }
  }
}

bool is_real_sign(Phase z) {
  return std::abs(z - Phase(1.0, 0.0)) < kPhaseTolerance ||
         std::abs(z - Phase(-1.0, 0.0)) < kPhaseTolerance;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

void TailParams::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0)) throw ValidationError("alpha must lie in (0, 2)");
  if (!(a > 0.0 && std::isfinite(a))) throw ValidationError("a must be positive and finite");
  if (!(b > 0.0 && std::isfinite(b))) throw ValidationError("b must be positive and finite");
  if (!(kappa > 0.0 && std::isfinite(kappa))) {
    throw ValidationError("kappa must be positive and finite");
  }
  validate_support(nu1_support, "nu1_support");
  validate_support(nu2_support, "nu2_support");
  for (const Phase& z : nu1_support) {
    if (!is_real_sign(z)) throw ValidationError("nu1_support must be a subset of {-1, +1}");
  }
  if (!complex_entries) {
    for (const Phase& z : nu2_support) {
      if (!is_real_sign(z)) {
        throw ValidationError("nu2_support must be a subset of {-1, +1} for real entries");
      }
    }
  }
}

bool support_contains(const PhaseSet& support, Phase z, double tol) {
  for (const Phase& w : support) {
    if (std::abs(w - z) < tol) return true;
  }
  return false;
}

bool support_is_only(const PhaseSet& support, Phase z, double tol) {
  return support.size() == 1 && std::abs(support.front() - z) < tol;
}

Phase parse_phase(std::string_view token) {
  const std::string t = trim(token);
  if (t == "1" || t == "+1") return {1.0, 0.0};
  if (t == "-1") return {-1.0, 0.0};
  if (t == "i" || t == "+i") return {0.0, 1.0};
  if (t == "-i") return {0.0, -1.0};
  if (t.size() > 3 && t.ends_with("deg")) {
    double degrees = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size() - 3;
    auto [ptr, ec] = std::from_chars(begin, end, degrees);
    if (ec == std::errc() && ptr == end) {
      const double rad = degrees * std::numbers::pi / 180.0;
      return std::polar(1.0, rad);
    }
  }
  throw ValidationError("cannot parse phase token '" + t + "'");
}

PhaseSet parse_support(std::string_view csv) {
  PhaseSet out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto piece = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    out.push_back(parse_phase(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_phase(Phase z) {
  if (std::abs(z - Phase(1.0, 0.0)) < kPhaseTolerance) return "+1";
  if (std::abs(z - Phase(-1.0, 0.0)) < kPhaseTolerance) return "-1";
  if (std::abs(z - Phase(0.0, 1.0)) < kPhaseTolerance) return "i";
  if (std::abs(z - Phase(0.0, -1.0)) < kPhaseTolerance) return "-i";
  std::ostringstream os;
  os.precision(17);
  os << std::arg(z) * 180.0 / std::numbers::pi << "deg";
  return os.str();
}

std::string format_support(const PhaseSet& support) {
  std::string out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) out += ',';
    out += format_phase(support[i]);
  }
  return out;
}

void to_json(nlohmann::json& j, const TailParams& p) {
  j = nlohmann::json{{"alpha", p.alpha},
                     {"a", p.a},
                     {"b", p.b},
                     {"kappa", p.kappa},
                     {"nu1_support", format_support(p.nu1_support)},
                     {"nu2_support", format_support(p.nu2_support)},
                     {"complex_entries", p.complex_entries}};
}

void from_json(const nlohmann::json& j, TailParams& p) {
  TailParams out;
  out.alpha = j.value("alpha", out.alpha);
  out.a = j.value("a", out.a);
  out.b = j.value("b", out.b);
  out.kappa = j.value("kappa", out.kappa);
  if (j.contains("nu1_support")) out.nu1_support = parse_support(j.at("nu1_support").get<std::string>());
  if (j.contains("nu2_support")) out.nu2_support = parse_support(j.at("nu2_support").get<std::string>());
  out.complex_entries = j.value("complex_entries", out.complex_entries);
  p = std::move(out);
}

}  // namespace htldp
