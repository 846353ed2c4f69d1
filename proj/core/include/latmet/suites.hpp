#ifndef LATMET_SUITES_HPP
#define LATMET_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latmet/rational.hpp"

namespace latmet {

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  std::size_t horizon = 64;
  std::size_t size_cap = 4;
  Rational epsilon = Rational(1, 256);
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  nlohmann::json details;
};

nlohmann::json to_json(const SuiteResult& result);

/// Registered suite names, in execution order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name. A suite
/// that throws internally is reported as failed with the error recorded in
/// its details.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config);

}  // namespace latmet

#endif  // LATMET_SUITES_HPP
