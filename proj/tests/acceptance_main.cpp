// Acceptance suite: every check is exact rational arithmetic with zero
// tolerance. Prints one line per criterion and exits nonzero if any fails.
//
// Usage: latmet_acceptance [--cli /path/to/latmet]
// The CLI path is needed only for the determinism criterion.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "latmet/suites.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250810;

std::pair<bool, std::string> from_suite(const std::string& name,
                                        const latmet::SuiteConfig& config) {
  latmet::SuiteResult result = latmet::run_suite(name, config);
  return {result.passed, std::to_string(result.checks) + " checks, " +
                             std::to_string(result.failures) + " failures"};
}

std::pair<bool, std::string> run_cli(const std::string& cli, std::string& out) {
  const std::string command =
      cli + " check-properties --seed 42 --output json --samples 500 --horizon 24";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return {false, "failed to spawn: " + command};
  }
  char buffer[4096];
  out.clear();
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    out.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (status != 0) {
    return {false, "nonzero exit from: " + command};
  }
  return {true, ""};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") {
      cli_path = argv[i + 1];
    }
  }

  latmet::SuiteConfig base;
  base.seed = kSeed;
  base.samples = 10000;
  base.size_cap = 4;
  base.epsilon = latmet::Rational(1, 256);

  latmet::SuiteConfig completion_cfg = base;
  completion_cfg.horizon = 32;

  using Criterion = std::pair<std::string, std::function<std::pair<bool, std::string>()>>;
  std::vector<Criterion> criteria;

  criteria.emplace_back(
      "1. metric axioms for d and d_C on 10000 seeded triples",
      [&] { return from_suite("metric-axioms", base); });
  criteria.emplace_back(
      "2. ring continuity: translation equality and product contraction",
      [&] { return from_suite("ring-continuity", base); });
  criteria.emplace_back(
      "3. typewriter reproduction and fast-subsequence gaps",
      [&] { return from_suite("typewriter", base); });
  criteria.emplace_back(
      "4. bisection ladders, 100 oracles, 20 steps, ring and Z/6Z",
      [&] { return from_suite("bisection", base); });
  criteria.emplace_back(
      "5. Lipschitz lift over Z/6Z and the two disagreement formulas",
      [&] { return from_suite("lift-lipschitz", base); });
  criteria.emplace_back(
      "6. partition normalization on 1000 candidates plus deficient inputs",
      [&] { return from_suite("partition", base); });
  criteria.emplace_back(
      "7. completion pipeline bounds and exact limits at horizon 32",
      [&] { return from_suite("completion", completion_cfg); });
  criteria.emplace_back(
      "8. counterexample lattice: weak laws, witness, nonconvergence, isolation",
      [&]() -> std::pair<bool, std::string> {
        auto a = from_suite("counterexamples", completion_cfg);
        auto b = from_suite("weak-inequalities", completion_cfg);
        auto c = from_suite("dv-witness", completion_cfg);
        return {a.first && b.first && c.first,
                a.second + "; " + b.second + "; " + c.second};
      });
  criteria.emplace_back(
      "9. duality: meet on the order dual gives the dual bounds",
      [&] { return from_suite("duality", completion_cfg); });
  criteria.emplace_back(
      "10. determinism: identical seed gives byte-identical JSON",
      [&]() -> std::pair<bool, std::string> {
        if (cli_path.empty()) {
          return {false, "no --cli path provided"};
        }
        std::string first;
        std::string second;
        if (auto [ok, why] = run_cli(cli_path, first); !ok) {
          return {false, why};
        }
        if (auto [ok, why] = run_cli(cli_path, second); !ok) {
          return {false, why};
        }
        if (first != second) {
          return {false, "outputs differ"};
        }
        return {true, std::to_string(first.size()) + " bytes, identical"};
      });

  int failures = 0;
  for (auto& [title, run] : criteria) {
    auto [passed, detail] = run();
    if (!passed) {
      ++failures;
    }
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << title
              << (detail.empty() ? "" : " (" + detail + ")") << "\n";
  }
  std::cout << (failures == 0 ? "acceptance: all criteria hold\n"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
