#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "htldp/heavy_tail.hpp"
#include "htldp/tail_params.hpp"

namespace htldp::cli {

using nlohmann::json;

/// Reads a JSON object from `path`. Throws ValidationError.
json load_config_file(const std::string& path);

/// Parses "v1,v2,..." or "lo:hi:count" (inclusive linspace).
std::vector<double> parse_grid(const std::string& text);

/// Typed lookups with defaults; a present key of the wrong type throws ValidationError.
double get_real(const json& cfg, const char* key, double fallback);
std::int64_t get_int(const json& cfg, const char* key, std::int64_t fallback);
bool get_bool(const json& cfg, const char* key, bool fallback);
std::string get_string(const json& cfg, const char* key, const std::string& fallback);
/// Array of numbers or a grid string.
std::vector<double> get_grid(const json& cfg, const char* key, const std::string& fallback);

TailParams params_from(const json& cfg);
EntrySampler sampler_from(const json& cfg, const std::string& default_law);

/// Fills the model keys of `cfg` with their resolved values so the JSON fully
/// describes the run.
json resolved_model(const json& cfg, const std::string& default_law);

}  // namespace htldp::cli
