#ifndef LATMET_SCENARIOS_HPP
#define LATMET_SCENARIOS_HPP

#include <functional>
#include <string>
#include <vector>

#include "latmet/algebra_star.hpp"
#include "latmet/completion.hpp"
#include "latmet/lattice.hpp"

namespace latmet {

/// Which lattice operation drives the running joins: plain union, or
/// intersection on the order dual.
enum class LatticeMode { join, meet };

/// A ready-to-run completion input over interval sets: a summable-gap
/// certificate, an oracle resolving the monotone limits, and the known
/// metric limit of the sequence for cross-checking.
struct IntervalScenario {
  std::string name;
  LatticeMode mode = LatticeMode::join;
  GapCertificate<IntervalSet> certificate;
  MonotoneLimitOracle<IntervalSet> oracle;
  IntervalSet expected_limit;
};

/// The sweeping-interval sequence thinned to its fast subsequence
/// [0, 2^-i); converges to the empty set although every point recurs in the
/// full sequence.
IntervalScenario scenario_typewriter_fast(LatticeMode mode = LatticeMode::join);

/// Strictly increasing sets [0, 1 - 2^-i) whose limit [0, 1) is attained at
/// no finite stage.
IntervalScenario scenario_increasing_sets(LatticeMode mode = LatticeMode::join);

/// One label of a step-function scenario: the per-label set sequence with
/// its own certificate, oracle and known limit.
struct StepScenarioLabel {
  std::string label;
  GapCertificate<IntervalSet> certificate;
  MonotoneLimitOracle<IntervalSet> oracle;
  IntervalSet expected_limit;
};

/// A Cauchy sequence of two-label step functions built by perturbing a known
/// target on slabs of measure 2^-i-3. The per-label pipelines converge to a
/// partition candidate which assembles back to the target.
struct StepFunctionScenario {
  std::string name;
  LatticeMode mode = LatticeMode::join;
  std::vector<StepScenarioLabel> labels;
  StepFunction expected;
  std::function<StepFunction(std::size_t)> term;
  std::function<Rational(std::size_t)> dprime_gap_bound;
};

StepFunctionScenario scenario_step_functions(LatticeMode mode = LatticeMode::join);

}  // namespace latmet

#endif  // LATMET_SCENARIOS_HPP
