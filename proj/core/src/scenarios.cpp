#include "latmet/scenarios.hpp"

namespace latmet {

namespace {

// Stabilization first; when the prefix is still moving, fall back to the
// closed-form value the scenario derives analytically.
MonotoneLimitOracle<IntervalSet> oracle_with_fallback(IntervalSet increasing_fallback,
                                                      IntervalSet decreasing_fallback) {
  MonotoneLimitOracle<IntervalSet> stab = stabilization_oracle<IntervalSet>(2);
  MonotoneLimitOracle<IntervalSet> oracle;
  oracle.increasing_limit = [stab, increasing_fallback](
                                const MonotoneLimitOracle<IntervalSet>::SeqFn& seq,
                                std::size_t count) -> std::optional<IntervalSet> {
    if (auto stable = stab.increasing_limit(seq, count)) {
      return stable;
    }
    return increasing_fallback;
  };
  oracle.decreasing_limit = [stab, decreasing_fallback](
                                const MonotoneLimitOracle<IntervalSet>::SeqFn& seq,
                                std::size_t count) -> std::optional<IntervalSet> {
    if (auto stable = stab.decreasing_limit(seq, count)) {
      return stable;
    }
    return decreasing_fallback;
  };
  return oracle;
}

GapCertificate<IntervalSet> geometric_certificate(
    std::function<IntervalSet(std::size_t)> term, long gap_exponent_at_zero) {
  // gap_bound(i) = 2^(g - i), tail(h) = 2^(g + 1 - h).
  const long g = gap_exponent_at_zero;
  return GapCertificate<IntervalSet>(
      std::move(term),
      [g](std::size_t i) { return pow2(g - static_cast<long>(i)); },
      [g](std::size_t h) { return pow2(g + 1 - static_cast<long>(h)); });
}

}  // namespace

IntervalScenario scenario_typewriter_fast(LatticeMode mode) {
  auto term = [](std::size_t i) {
    return IntervalSet::interval(Rational(0), pow2(-static_cast<long>(i)));
  };
  // Gaps are exactly 2^-i-1, so tail(h) = 2^-h.
  GapCertificate<IntervalSet> cert = geometric_certificate(term, -1);
  const IntervalSet empty;
  // Join rows are constant [0, 2^-h) and stabilize; meet rows shrink to the
  // empty set. Either way the unresolved monotone limit is empty.
  MonotoneLimitOracle<IntervalSet> oracle = oracle_with_fallback(empty, empty);
  return IntervalScenario{"typewriter-fast", mode, std::move(cert), std::move(oracle),
                          empty};
}

IntervalScenario scenario_increasing_sets(LatticeMode mode) {
  auto term = [](std::size_t i) {
    if (i == 0) {
      return IntervalSet();
    }
    return IntervalSet::interval(Rational(0), 1 - pow2(-static_cast<long>(i)));
  };
  GapCertificate<IntervalSet> cert = geometric_certificate(term, -1);
  const IntervalSet full = IntervalSet::unit();
  // Join rows grow toward [0, 1); meet rows are constant and stabilize. The
  // decreasing sequence of row limits ends at [0, 1) in both modes.
  MonotoneLimitOracle<IntervalSet> oracle = oracle_with_fallback(full, full);
  return IntervalScenario{"increasing-sets", mode, std::move(cert), std::move(oracle),
                          full};
}

StepFunctionScenario scenario_step_functions(LatticeMode mode) {
  // Target: "a" on [0, 1/2), "b" on [1/2, 1). Stage i moves the boundary to
  // 1/2 - 2^-i-2, so stages differ on a slab of measure 2^-i-3.
  auto boundary = [](std::size_t i) {
    return Rational(1, 2) - pow2(-static_cast<long>(i) - 2);
  };
  auto part_a = [boundary](std::size_t i) {
    return IntervalSet::interval(Rational(0), boundary(i));
  };
  auto part_b = [boundary](std::size_t i) {
    return IntervalSet::interval(boundary(i), Rational(1));
  };

  const IntervalSet limit_a = IntervalSet::interval(Rational(0), Rational(1, 2));
  const IntervalSet limit_b = IntervalSet::interval(Rational(1, 2), Rational(1));

  StepFunctionScenario scenario;
  scenario.name = "step-function-assembly";
  scenario.mode = mode;
  scenario.labels.push_back(StepScenarioLabel{
      "a", geometric_certificate(part_a, -3), oracle_with_fallback(limit_a, limit_a),
      limit_a});
  scenario.labels.push_back(StepScenarioLabel{
      "b", geometric_certificate(part_b, -3), oracle_with_fallback(limit_b, limit_b),
      limit_b});
  scenario.expected = StepFunction::from_pieces(
      {StepFunction::Piece{"a", limit_a}, StepFunction::Piece{"b", limit_b}});
  scenario.term = [part_a, part_b](std::size_t i) {
    return StepFunction::from_pieces({StepFunction::Piece{"a", part_a(i)},
                                      StepFunction::Piece{"b", part_b(i)}});
  };
  scenario.dprime_gap_bound = [](std::size_t i) {
    return pow2(-static_cast<long>(i) - 3);
  };
  return scenario;
}

}  // namespace latmet
