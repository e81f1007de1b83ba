#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "htldp/csv.hpp"
#include "htldp/experiments.hpp"
#include "htldp/tail_params.hpp"

namespace htldp {

inline constexpr int kRecordSchema = 1;

/// One tail campaign at a fixed N. Everything here is a function of
/// (config, seed); timing lives in a separate sidecar so records stay byte-stable.
struct ExperimentRecord {
  nlohmann::json config;  // canonical run configuration
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string law = "weibull";
  TailParams params;
  std::vector<double> x_grid;
  std::vector<TailEstimate> tail_estimates;
  std::vector<double> lambda_samples;
};

/// FNV-1a (64 bit) of the compact JSON dump, as 16 lowercase hex digits.
std::string config_hash(const nlohmann::json& config);

/// Seed of the trial streams of size N within a campaign rooted at `master`.
std::uint64_t campaign_seed(std::uint64_t master, std::size_t n);

/// Samples `trials` eigenvalues at size N and tabulates the tail over x_grid.
ExperimentRecord run_tail_record(const nlohmann::json& config, std::uint64_t master_seed, std::size_t n,
                                 const std::vector<double>& x_grid, std::size_t trials,
                                 const EntrySampler& sampler, unsigned threads = 0);

nlohmann::json record_to_json(const ExperimentRecord& record);
ExperimentRecord record_from_json(const nlohmann::json& j);

/// x,p_hat,ci_low,ci_high,hits,trials
CsvTable estimates_table(const ExperimentRecord& record);
/// trial,lambda_max
CsvTable samples_table(const ExperimentRecord& record);

}  // namespace htldp
