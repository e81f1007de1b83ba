#include "config.hpp"

#include <fstream>
#include <sstream>

#include "htldp/csv.hpp"
#include "htldp/errors.hpp"

namespace htldp::cli {

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw ValidationError("config file must hold a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ValidationError("config file '" + path + "': " + e.what());
  }
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (sep == ':') {
    if (parts.size() != 3) throw ValidationError("grid range must read lo:hi:count");
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const long count = std::stol(parts[2]);
    if (count < 1 || !(lo <= hi)) throw ValidationError("grid range needs lo <= hi and count >= 1");
    std::vector<double> out;
    for (long i = 0; i < count; ++i) out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return out;
  }
  std::vector<double> out;
  for (const auto& p : parts) {
    if (!p.empty()) out.push_back(parse_real(p));
  }
  if (out.empty()) throw ValidationError("empty grid '" + text + "'");
  return out;
}

double get_real(const json& cfg, const char* key, double fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get<std::string>());
  throw ValidationError(std::string("config key '") + key + "' must be a number");
}

std::int64_t get_int(const json& cfg, const char* key, std::int64_t fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg.at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  throw ValidationError(std::string("config key '") + key + "' must be an integer");
}

bool get_bool(const json& cfg, const char* key, bool fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg.at(key);
  if (v.is_boolean()) return v.get<bool>();
  throw ValidationError(std::string("config key '") + key + "' must be true or false");
}

std::string get_string(const json& cfg, const char* key, const std::string& fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg.at(key);
  if (v.is_string()) return v.get<std::string>();
  throw ValidationError(std::string("config key '") + key + "' must be a string");
}

std::vector<double> get_grid(const json& cfg, const char* key, const std::string& fallback) {
  if (!cfg.contains(key)) return parse_grid(fallback);
  const auto& v = cfg.at(key);
  if (v.is_string()) return parse_grid(v.get<std::string>());
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) throw ValidationError(std::string("config key '") + key + "' must hold numbers");
      out.push_back(e.get<double>());
    }
    if (out.empty()) throw ValidationError(std::string("config key '") + key + "' is empty");
    return out;
  }
  throw ValidationError(std::string("config key '") + key + "' must be a list or a grid string");
}

TailParams params_from(const json& cfg) {
  TailParams p;
  p.alpha = get_real(cfg, "alpha", p.alpha);
  p.a = get_real(cfg, "a", p.a);
  p.b = get_real(cfg, "b", p.b);
  p.kappa = get_real(cfg, "kappa", p.kappa);
  p.complex_entries = get_bool(cfg, "complex", p.complex_entries);
  if (cfg.contains("nu1")) p.nu1_support = parse_support(get_string(cfg, "nu1", ""));
  if (cfg.contains("nu2")) p.nu2_support = parse_support(get_string(cfg, "nu2", ""));
  p.validate();
  return p;
}

EntrySampler sampler_from(const json& cfg, const std::string& default_law) {
  return EntrySampler(params_from(cfg), parse_law_kind(get_string(cfg, "law", default_law)),
                      get_real(cfg, "tail_weight", 0.0));
}

json resolved_model(const json& cfg, const std::string& default_law) {
  json out = cfg;
  const TailParams p = params_from(cfg);
  out["alpha"] = p.alpha;
  out["a"] = p.a;
  out["b"] = p.b;
  out["kappa"] = p.kappa;
  out["complex"] = p.complex_entries;
  out["nu1"] = format_support(p.nu1_support);
  out["nu2"] = format_support(p.nu2_support);
  out["law"] = get_string(cfg, "law", default_law);
  out["tail_weight"] = get_real(cfg, "tail_weight", 0.0);
  return out;
}

}  // namespace htldp::cli
