#include "htldp/record_io.hpp"

#include <cstdio>

#include "htldp/errors.hpp"
#include "htldp/random.hpp"

namespace htldp {

std::string config_hash(const nlohmann::json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t campaign_seed(std::uint64_t master, std::size_t n) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(n)));
}

ExperimentRecord run_tail_record(const nlohmann::json& config, std::uint64_t master_seed, std::size_t n,
                                 const std::vector<double>& x_grid, std::size_t trials,
                                 const EntrySampler& sampler, unsigned threads) {
  if (trials == 0) throw ValidationError("run_tail_record: trials must be positive");
  ExperimentRecord r;
  r.config = config;
  r.seed = master_seed;
  r.n = n;
  r.law = to_string(sampler.kind());
  r.params = sampler.params();
  r.x_grid = x_grid;
  r.lambda_samples = sample_largest_eigenvalues(n, trials, sampler, campaign_seed(master_seed, n), threads);
  for (double x : x_grid) r.tail_estimates.push_back(tail_from_samples(r.lambda_samples, x));
  return r;
}

nlohmann::json record_to_json(const ExperimentRecord& r) {
  nlohmann::json estimates = nlohmann::json::array();
  for (const auto& e : r.tail_estimates) {
    estimates.push_back({{"x", e.x},
                         {"p_hat", e.p_hat},
                         {"ci_low", e.ci_low},
                         {"ci_high", e.ci_high},
                         {"hits", e.hits},
                         {"trials", e.trials}});
  }
  return {{"schema", kRecordSchema},
          {"config", r.config},
          {"config_hash", config_hash(r.config)},
          {"seed", r.seed},
          {"N", r.n},
          {"law", r.law},
          {"params", r.params},
          {"x_grid", r.x_grid},
          {"tail_estimates", estimates},
          {"lambda_samples", r.lambda_samples}};
}

ExperimentRecord record_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != kRecordSchema) throw ValidationError("unsupported record schema");
    ExperimentRecord r;
    r.config = j.at("config");
    if (j.at("config_hash").get<std::string>() != config_hash(r.config)) {
      throw ValidationError("record config hash does not match its config");
    }
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("N").get<std::size_t>();
    r.law = j.at("law").get<std::string>();
    r.params = j.at("params").get<TailParams>();
    r.x_grid = j.at("x_grid").get<std::vector<double>>();
    for (const auto& e : j.at("tail_estimates")) {
      TailEstimate t;
      t.x = e.at("x").get<double>();
      t.p_hat = e.at("p_hat").get<double>();
      t.ci_low = e.at("ci_low").get<double>();
      t.ci_high = e.at("ci_high").get<double>();
      t.hits = e.at("hits").get<std::size_t>();
      t.trials = e.at("trials").get<std::size_t>();
      r.tail_estimates.push_back(t);
    }
    r.lambda_samples = j.at("lambda_samples").get<std::vector<double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed experiment record: ") + e.what());
  }
}

CsvTable estimates_table(const ExperimentRecord& r) {
  CsvTable t;
  t.header = {"x", "p_hat", "ci_low", "ci_high", "hits", "trials"};
  for (const auto& e : r.tail_estimates) {
    t.add_row({format_real(e.x), format_real(e.p_hat), format_real(e.ci_low), format_real(e.ci_high),
               std::to_string(e.hits), std::to_string(e.trials)});
  }
  return t;
}

CsvTable samples_table(const ExperimentRecord& r) {
  CsvTable t;
  t.header = {"trial", "lambda_max"};
  for (std::size_t i = 0; i < r.lambda_samples.size(); ++i) {
    t.add_row({std::to_string(i), format_real(r.lambda_samples[i])});
  }
  return t;
}

}  // namespace htldp
