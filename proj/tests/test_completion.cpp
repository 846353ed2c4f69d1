#include "latmet/completion.hpp"

#include "doctest.h"
#include "latmet/algebra_star.hpp"
#include "latmet/counterexamples.hpp"
#include "latmet/errors.hpp"
#include "latmet/scenarios.hpp"

using namespace latmet;

namespace {

GapCertificate<IntervalSet> geometric_cert(std::function<IntervalSet(std::size_t)> term) {
  return GapCertificate<IntervalSet>(
      std::move(term),
      [](std::size_t i) { return pow2(-static_cast<long>(i) - 1); },
      [](std::size_t h) { return pow2(-static_cast<long>(h)); });
}

GapCertificate<IntervalSet> typewriter_fast_cert() {
  return geometric_cert([](std::size_t i) {
    return IntervalSet::interval(Rational(0), pow2(-static_cast<long>(i)));
  });
}

}  // namespace

TEST_CASE("running joins") {
  IntervalSetLatticeCarrier carrier;
  CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, typewriter_fast_cert(), 16);
  CHECK(engine.running_join(3, 3) ==
        IntervalSet::interval(Rational(0), Rational(1, 8)));
  // Nested decreasing sets: the join of a window is its first element.
  CHECK(engine.running_join(2, 9) ==
        IntervalSet::interval(Rational(0), Rational(1, 4)));
  CHECK_THROWS_AS(engine.running_join(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(engine.running_join(0, 17), std::invalid_argument);

  GapCertificate<IntervalSet> antichain(
      [](std::size_t i) {
        return i == 0 ? IntervalSet::interval(Rational(0), Rational(1, 2))
                      : IntervalSet::interval(Rational(1, 2), Rational(1));
      },
      [](std::size_t) { return Rational(1); },
      [](std::size_t h) { return h == 0 ? Rational(1) : Rational(0); });
  CompletionEngine<IntervalSetLatticeCarrier> engine2(carrier, antichain, 1);
  CHECK(engine2.running_join(0, 1) == IntervalSet::unit());
}

TEST_CASE("certified approximate limits") {
  IntervalSetLatticeCarrier carrier;

  SUBCASE("constant sequence") {
    GapCertificate<IntervalSet> constant(
        [](std::size_t) { return IntervalSet::unit(); },
        [](std::size_t) { return Rational(0); },
        [](std::size_t) { return Rational(0); });
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, constant, 8);
    auto approx = engine.approx_limit(Rational(1, 100));
    CHECK(approx.value == IntervalSet::unit());
    CHECK(approx.start_index == 0);
    CHECK(approx.bound == 0);
  }

  SUBCASE("typewriter fast subsequence at eps = 1/256") {
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, typewriter_fast_cert(),
                                                       32);
    auto approx = engine.approx_limit(Rational(1, 256));
    CHECK(approx.start_index == 9);
    CHECK(approx.bound == Rational(1, 256));
    CHECK(approx.value == IntervalSet::interval(Rational(0), pow2(-9)));
    CHECK(metric_d(approx.value, IntervalSet()) == pow2(-9));
  }

  SUBCASE("increasing sets stay within twice the tail") {
    auto cert = geometric_cert([](std::size_t i) {
      return i == 0 ? IntervalSet()
                    : IntervalSet::interval(Rational(0),
                                            1 - pow2(-static_cast<long>(i)));
    });
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, cert, 32);
    auto approx = engine.approx_limit(Rational(1, 64));
    CHECK(approx.bound <= Rational(1, 64));
    for (std::size_t m = approx.start_index; m <= approx.end_index; ++m) {
      CHECK(metric_d(cert.term(m), approx.value) <= approx.bound);
    }
  }

  SUBCASE("rejects bad accuracy targets and short horizons") {
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, typewriter_fast_cert(),
                                                       4);
    CHECK_THROWS_AS(engine.approx_limit(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(engine.approx_limit(Rational(1, 1000)), horizon_exceeded);
  }
}

TEST_CASE("pipeline resolves the double limit") {
  IntervalSetLatticeCarrier carrier;

  SUBCASE("eventually constant sequences stabilize") {
    GapCertificate<IntervalSet> cert(
        [](std::size_t i) {
          return i < 3 ? IntervalSet::interval(Rational(0), Rational(1, 2) +
                                               pow2(-static_cast<long>(i) - 2))
                       : IntervalSet::interval(Rational(0), Rational(1, 2));
        },
        [](std::size_t i) { return pow2(-static_cast<long>(i) - 2); },
        [](std::size_t h) { return pow2(-static_cast<long>(h) - 1); });
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, cert, 12);
    auto run = engine.run_pipeline(stabilization_oracle<IntervalSet>(3));
    REQUIRE(run.final_limit.has_value());
    // Early rows keep the overshoot, but the decreasing row limits settle on
    // the stable value.
    CHECK(*run.final_limit == IntervalSet::interval(Rational(0), Rational(1, 2)));
    CHECK(verify_run(carrier, run).ok());
  }

  SUBCASE("declining oracle leaves the limit unresolved") {
    MonotoneLimitOracle<IntervalSet> none;
    none.increasing_limit = [](const auto&, std::size_t) { return std::nullopt; };
    none.decreasing_limit = [](const auto&, std::size_t) { return std::nullopt; };
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, typewriter_fast_cert(),
                                                       8);
    auto run = engine.run_pipeline(none);
    CHECK(!run.final_limit.has_value());
    CHECK(verify_run(carrier, run).ok());  // distance families still hold
    auto approx = engine.approx_limit(Rational(1, 16));
    CHECK(approx.bound <= Rational(1, 16));
  }

  SUBCASE("a certificate that lies about gaps is rejected") {
    GapCertificate<IntervalSet> lying(
        [](std::size_t i) {
          return i % 2 == 0 ? IntervalSet() : IntervalSet::unit();
        },
        [](std::size_t) { return Rational(1, 4); },
        [](std::size_t) { return Rational(1, 2); });
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, lying, 8);
    CHECK_THROWS_AS(engine.run_pipeline(stabilization_oracle<IntervalSet>(2)),
                    contract_breach);
  }
}

TEST_CASE("built-in scenarios verify with zero violations") {
  IntervalSetLatticeCarrier carrier;
  for (auto scenario : {scenario_typewriter_fast(), scenario_increasing_sets()}) {
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, scenario.certificate,
                                                       24);
    auto run = engine.run_pipeline(scenario.oracle);
    REQUIRE(run.final_limit.has_value());
    CHECK(*run.final_limit == scenario.expected_limit);
    VerifyReport report = verify_run(carrier, run);
    CHECK(report.ok());
    CHECK(report.families.size() == 10);
  }
}

TEST_CASE("step-function scenario assembles its target") {
  IntervalSetLatticeCarrier carrier;
  StepFunctionScenario scenario = scenario_step_functions();
  std::vector<std::pair<std::string, IntervalSet>> finals;
  for (const auto& label : scenario.labels) {
    CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, label.certificate, 24);
    auto run = engine.run_pipeline(label.oracle);
    REQUIRE(run.final_limit.has_value());
    CHECK(*run.final_limit == label.expected_limit);
    CHECK(verify_run(carrier, run).ok());
    finals.emplace_back(label.label, *run.final_limit);
  }
  CHECK(assemble_limit(finals) == scenario.expected);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(d_prime(scenario.term(i), scenario.term(i + 1)) <=
          scenario.dprime_gap_bound(i));
  }
}

TEST_CASE("duality: the same scenarios run on the order dual") {
  DualLatticeCarrier<IntervalSetLatticeCarrier> dual;
  for (auto scenario : {scenario_typewriter_fast(LatticeMode::meet),
                        scenario_increasing_sets(LatticeMode::meet)}) {
    CompletionEngine<DualLatticeCarrier<IntervalSetLatticeCarrier>> engine(
        dual, scenario.certificate, 24);
    auto run = engine.run_pipeline(scenario.oracle);
    REQUIRE(run.final_limit.has_value());
    CHECK(*run.final_limit == scenario.expected_limit);
    CHECK(verify_run(dual, run).ok());
  }
}

TEST_CASE("fault injection is caught by verification") {
  IntervalSetLatticeCarrier carrier;
  IntervalScenario scenario = scenario_typewriter_fast();
  CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, scenario.certificate, 12);
  auto run = engine.run_pipeline(scenario.oracle);
  REQUIRE(verify_run(carrier, run).ok());

  SUBCASE("corrupted join memo") {
    run.joins[0][1] = IntervalSet::interval(Rational(1, 3), Rational(2, 3));
    VerifyReport report = verify_run(carrier, run);
    CHECK_FALSE(report.ok());
    bool named = false;
    for (const auto& family : report.families) {
      if (!family.ok() && (family.name == "join-window" ||
                           family.name == "join-step" ||
                           family.name == "join-monotone")) {
        named = true;
      }
    }
    CHECK(named);
  }

  SUBCASE("corrupted final limit") {
    run.final_limit = IntervalSet::unit();
    VerifyReport report = verify_run(carrier, run);
    CHECK_FALSE(report.ok());
    bool named = false;
    for (const auto& family : report.families) {
      if (!family.ok() && (family.name == "final-bound" || family.name == "final-tail")) {
        named = true;
      }
    }
    CHECK(named);
  }
}

TEST_CASE("weak-only carriers are refused") {
  PointSpace space = PointSpace::from_points({Rational(0), Rational(1)});
  DiameterJoinCarrier weak{space};
  const FiniteSubset point = FiniteSubset::singleton(Rational(0));
  GapCertificate<FiniteSubset> constant(
      [point](std::size_t) { return point; },
      [](std::size_t) { return Rational(0); },
      [](std::size_t) { return Rational(0); });
  CompletionEngine<DiameterJoinCarrier> engine(weak, constant, 4);
  CHECK_THROWS_AS(engine.run_pipeline(MonotoneLimitOracle<FiniteSubset>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(engine.approx_limit(Rational(1, 2)), std::invalid_argument);
  CHECK(engine.running_join(0, 2) == point);  // joins themselves are fine
}

TEST_CASE("run transcript carries the verification table") {
  IntervalSetLatticeCarrier carrier;
  IntervalScenario scenario = scenario_typewriter_fast();
  CompletionEngine<IntervalSetLatticeCarrier> engine(carrier, scenario.certificate, 8);
  auto run = engine.run_pipeline(scenario.oracle);
  VerifyReport verification = verify_run(carrier, run);
  nlohmann::json transcript = run_transcript(carrier, run, verification);
  CHECK(transcript.contains("indices"));
  CHECK(transcript.contains("gapBounds"));
  CHECK(transcript.contains("joins"));
  CHECK(transcript.contains("rowLimits"));
  CHECK(transcript.contains("finalLimit"));
  CHECK(transcript["checkedInequalities"].size() == verification.families.size());
  for (const auto& entry : transcript["checkedInequalities"]) {
    CHECK(entry["ok"].get<bool>());
  }
}
