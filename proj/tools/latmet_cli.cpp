// Command-line harness for the exact metrized-ring/lattice library:
// deterministic demos and property suites with machine-readable reports.
//
// Exit codes: 0 all assertions hold, 1 assertion violation, 2 configuration
// error. With --output json every record is one line of JSON; identical seed
// and configuration produce byte-identical output.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "latmet/algebra_star.hpp"
#include "latmet/completion.hpp"
#include "latmet/counterexamples.hpp"
#include "latmet/interval_set.hpp"
#include "latmet/lattice.hpp"
#include "latmet/measure_algebra.hpp"
#include "latmet/scenarios.hpp"
#include "latmet/serialization.hpp"
#include "latmet/suites.hpp"

namespace {

using latmet::Rational;

struct Options {
  std::uint64_t seed = 42;
  std::size_t horizon = 64;
  std::size_t samples = 10000;
  std::size_t size_cap = 4;
  std::string output = "text";
  std::string epsilon = "1/256";
  std::string suite;
  bool stretched = false;
  std::size_t rows = 10;
  std::size_t steps = 20;
  bool inject_fault = false;
};

bool json_mode(const Options& opt) { return opt.output == "json"; }

void emit(const Options& opt, const nlohmann::json& record, const std::string& text) {
  if (json_mode(opt)) {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int demo_typewriter(const Options& opt) {
  std::size_t failures = 0;
  const latmet::BElement empty;
  if (opt.stretched) {
    if (opt.rows > 14) {
      std::cerr << "demo-typewriter: --stretched supports at most 14 rows\n";
      return 2;
    }
    for (std::uint64_t k = 1; k <= (std::uint64_t{2} << opt.rows) - 2; ++k) {
      latmet::BElement term = latmet::stretched_typewriter(k);
      emit(opt,
           {{"k", k},
            {"set", latmet::to_json(term.set())},
            {"measure", latmet::to_string(term.measure())}},
           "k=" + std::to_string(k) + " measure=" + latmet::to_string(term.measure()));
    }
    // Block m holds 2^m copies of sweep term m.
    for (std::uint64_t m = 1; m <= opt.rows; ++m) {
      const latmet::BElement expected = latmet::typewriter(m);
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << m); ++r) {
        const std::uint64_t k = (std::uint64_t{2} << (m - 1)) - 2 + 1 + r;
        if (!(latmet::stretched_typewriter(k) == expected)) {
          ++failures;
        }
      }
    }
  } else {
    const Rational probe(1, 7);
    std::size_t hits = 0;
    std::uint64_t k = 1;
    for (std::uint64_t row = 1; row <= opt.rows; ++row) {
      std::size_t row_hits = 0;
      for (std::uint64_t i = 1; i <= row; ++i, ++k) {
        latmet::BElement term = latmet::typewriter(k);
        if (term.measure() != Rational(1, latmet::Integer(row))) {
          ++failures;
        }
        if (latmet::metric_d(term, empty) != Rational(1, latmet::Integer(row))) {
          ++failures;
        }
        if (term.set().contains(probe)) {
          ++row_hits;
        }
        emit(opt,
             {{"k", k},
              {"set", latmet::to_json(term.set())},
              {"measure", latmet::to_string(term.measure())}},
             "k=" + std::to_string(k) +
                 " measure=" + latmet::to_string(term.measure()));
      }
      hits += row_hits;
      if (row_hits != 1) {
        ++failures;  // each row covers the probe exactly once
      }
    }
    emit(opt,
         {{"probe", "1/7"}, {"rows", opt.rows}, {"membershipCount", hits}},
         "membership count of 1/7 over " + std::to_string(opt.rows) +
             " rows: " + std::to_string(hits));
    if (hits != opt.rows) {
      ++failures;
    }
  }
  emit(opt, {{"failures", failures}}, "failures: " + std::to_string(failures));
  return failures == 0 ? 0 : 1;
}

int demo_bisection(const Options& opt) {
  if (opt.steps > 62) {
    std::cerr << "demo-bisection: --steps supports at most 62\n";
    return 2;
  }
  std::size_t failures = 0;
  const latmet::FiniteAlgebra z6 = latmet::FiniteAlgebra::zmod(6);
  const latmet::StepFunction one_fn = latmet::StepFunction::constant("1");
  const latmet::Ambient unit = latmet::Ambient::unit_interval();

  latmet::ChooserOracle oracle = latmet::seeded_chooser(opt.seed);
  latmet::IntervalSet u = latmet::IntervalSet::unit();
  latmet::IntervalSet v = latmet::IntervalSet::unit();
  for (std::size_t step = 1; step <= opt.steps; ++step) {
    u = latmet::prime_bisection_step(u, oracle);
    v = latmet::astar_bisection_step(v, z6, oracle);
    const Rational expected = latmet::pow2(-static_cast<long>(step));
    const Rational dist_b = latmet::metric_d(
        latmet::ring_add(latmet::BElement::one(), latmet::BElement(u)),
        latmet::BElement::one());
    const Rational dist_astar =
        latmet::d_prime(latmet::characteristic_step(latmet::complement(v, unit)), one_fn);
    if (dist_b != expected || dist_astar != expected) {
      ++failures;
    }
    emit(opt,
         {{"step", step},
          {"measure", latmet::to_string(u.measure())},
          {"distance_to_one", latmet::to_string(dist_b)},
          {"astar_distance_to_one", latmet::to_string(dist_astar)}},
         "step=" + std::to_string(step) +
             " distance_to_one=" + latmet::to_string(dist_b) +
             " (ring ladder == Z/6Z ladder: " +
             (dist_b == dist_astar ? "yes" : "NO") + ")");
  }
  emit(opt, {{"failures", failures}}, "failures: " + std::to_string(failures));
  return failures == 0 ? 0 : 1;
}

int demo_completion(const Options& opt, const Rational& epsilon) {
  std::size_t failures = 0;
  const latmet::IntervalSetLatticeCarrier carrier;

  auto report_scenario = [&](const latmet::IntervalScenario& scenario) {
    latmet::CompletionEngine<latmet::IntervalSetLatticeCarrier> engine(
        carrier, scenario.certificate, opt.horizon);
    latmet::CompletionRun<latmet::IntervalSet> run =
        engine.run_pipeline(scenario.oracle);
    if (opt.inject_fault && !run.joins.empty() && run.joins[0].size() > 1) {
      run.joins[0][1] = latmet::IntervalSet::interval(Rational(0), Rational(1, 3));
    }
    latmet::VerifyReport verification = latmet::verify_run(carrier, run);
    nlohmann::json transcript = latmet::run_transcript(carrier, run, verification);
    if (json_mode(opt)) {
      std::cout << nlohmann::json{{"scenario", scenario.name},
                                  {"transcript", transcript}}
                       .dump()
                << "\n";
    } else {
      std::cout << "scenario " << scenario.name << "\n";
      for (const auto& family : verification.families) {
        std::cout << "  " << family.name << ": checked " << family.checked
                  << (family.ok() ? " ok" : " VIOLATED") << "\n";
        if (!family.ok()) {
          ++failures;
        }
      }
    }
    if (json_mode(opt) && !verification.ok()) {
      ++failures;
    }
    if (!(run.final_limit && *run.final_limit == scenario.expected_limit)) {
      ++failures;
    }
    latmet::ApproxLimit<latmet::IntervalSet> approx = engine.approx_limit(epsilon);
    emit(opt,
         {{"scenario", scenario.name},
          {"approx", latmet::to_json(approx.value)},
          {"h", approx.start_index},
          {"bound", latmet::to_string(approx.bound)}},
         "  approx limit within " + latmet::to_string(approx.bound) + " from h=" +
             std::to_string(approx.start_index));
    if (approx.bound > epsilon) {
      ++failures;
    }
  };

  report_scenario(latmet::scenario_typewriter_fast());
  report_scenario(latmet::scenario_increasing_sets());

  // The step-function scenario runs one pipeline per label and reassembles.
  const latmet::StepFunctionScenario step = latmet::scenario_step_functions();
  std::vector<std::pair<std::string, latmet::IntervalSet>> finals;
  for (const auto& label : step.labels) {
    latmet::CompletionEngine<latmet::IntervalSetLatticeCarrier> engine(
        carrier, label.certificate, opt.horizon);
    latmet::CompletionRun<latmet::IntervalSet> run = engine.run_pipeline(label.oracle);
    latmet::VerifyReport verification = latmet::verify_run(carrier, run);
    if (!verification.ok()) {
      ++failures;
    }
    if (!(run.final_limit && *run.final_limit == label.expected_limit)) {
      ++failures;
    }
    finals.emplace_back(label.label, run.final_limit.value_or(latmet::IntervalSet()));
  }
  latmet::StepFunction assembled = latmet::assemble_limit(finals);
  if (!(assembled == step.expected)) {
    ++failures;
  }
  emit(opt,
       {{"scenario", step.name}, {"assembled", latmet::to_json(assembled)}},
       "scenario " + step.name + ": assembled limit matches target " +
           (assembled == step.expected ? "yes" : "NO"));

  emit(opt, {{"failures", failures}}, "failures: " + std::to_string(failures));
  return failures == 0 ? 0 : 1;
}

int check_properties(const Options& opt, const Rational& epsilon) {
  latmet::SuiteConfig config;
  config.seed = opt.seed;
  config.samples = opt.samples;
  config.horizon = opt.horizon;
  config.size_cap = opt.size_cap;
  config.epsilon = epsilon;

  std::vector<latmet::SuiteResult> results;
  if (opt.suite.empty()) {
    results = latmet::run_all_suites(config);
  } else {
    try {
      results.push_back(latmet::run_suite(opt.suite, config));
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  std::size_t failed = 0;
  for (const auto& result : results) {
    if (!result.passed) {
      ++failed;
    }
    emit(opt, latmet::to_json(result),
         (result.passed ? "[pass] " : "[FAIL] ") + result.name + " (" +
             std::to_string(result.checks) + " checks, " +
             std::to_string(result.failures) + " failures)");
  }
  emit(opt,
       {{"suites", results.size()}, {"failed", failed}},
       "suites: " + std::to_string(results.size()) +
           " failed: " + std::to_string(failed));
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact measure-algebra and metrized-lattice workbench"};
  app.require_subcommand(1);

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "Deterministic seed");
    cmd->add_option("--horizon", opt.horizon, "Index horizon for sequences")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--samples", opt.samples, "Sample count for property suites")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--size-cap", opt.size_cap, "Subset size cap for searches")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", opt.output, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--epsilon", opt.epsilon, "Target accuracy as p/q");
  };

  CLI::App* tw = app.add_subcommand("demo-typewriter",
                                    "Sweeping interval sequence: measures shrink "
                                    "while every point recurs");
  add_common(tw);
  tw->add_option("--rows", opt.rows, "Rows to emit")->check(CLI::PositiveNumber);
  tw->add_flag("--stretched", opt.stretched, "Repeat term m 2^m times");

  CLI::App* bis = app.add_subcommand("demo-bisection",
                                     "Halving ladders toward the unit, in the "
                                     "Boolean ring and over Z/6Z");
  add_common(bis);
  bis->add_option("--steps", opt.steps, "Bisection steps")->check(CLI::PositiveNumber);

  CLI::App* comp = app.add_subcommand("demo-completion",
                                      "Summable-gap completion pipeline with "
                                      "verified bounds");
  add_common(comp);
  comp->add_flag("--inject-fault", opt.inject_fault)->group("");  // test hook

  CLI::App* props = app.add_subcommand("check-properties",
                                       "Run the property suites");
  add_common(props);
  props->add_option("--suite", opt.suite, "Run a single suite by name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  Rational epsilon;
  try {
    epsilon = latmet::parse_rational(opt.epsilon);
    if (epsilon <= 0) {
      throw std::invalid_argument("epsilon must be positive");
    }
  } catch (const std::exception& e) {
    std::cerr << "invalid --epsilon: " << e.what() << "\n";
    return 2;
  }

  try {
    if (tw->parsed()) {
      return demo_typewriter(opt);
    }
    if (bis->parsed()) {
      return demo_bisection(opt);
    }
    if (comp->parsed()) {
      return demo_completion(opt, epsilon);
    }
    if (props->parsed()) {
      return check_properties(opt, epsilon);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
