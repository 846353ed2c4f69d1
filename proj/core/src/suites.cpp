#include "latmet/suites.hpp"

#include <array>
#include <exception>
#include <functional>
#include <map>

#include "latmet/algebra_star.hpp"
#include "latmet/completion.hpp"
#include "latmet/counterexamples.hpp"
#include "latmet/interval_set.hpp"
#include "latmet/lattice.hpp"
#include "latmet/measure_algebra.hpp"
#include "latmet/sampling.hpp"
#include "latmet/scenarios.hpp"
#include "latmet/serialization.hpp"

namespace latmet {

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;

  void check(bool ok) {
    ++checks;
    if (!ok) {
      ++failures;
    }
  }
  void absorb(const CheckReport& report) {
    checks += report.checked;
    failures += report.violations.size();
  }
  /// Expected-failure search: passing means the report found something.
  void expect_violation(const CheckReport& report) {
    ++checks;
    if (report.violations.empty()) {
      ++failures;
    }
  }
};

SuiteResult finish(std::string name, Tally tally, nlohmann::json details) {
  return SuiteResult{std::move(name), tally.failures == 0, tally.checks,
                     tally.failures, std::move(details)};
}

constexpr std::size_t kChunk = 2048;

using Triple = std::array<IntervalSet, 3>;

std::vector<Triple> sample_triples(Sampler& sampler, std::size_t count,
                                   const Rational& hi) {
  std::vector<Triple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(Triple{sampler.interval_set_in(hi), sampler.interval_set_in(hi),
                         sampler.interval_set_in(hi)});
  }
  return out;
}

SuiteResult suite_metric_axioms(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  Tally tally;
  const IntervalSetLatticeCarrier plain;
  const std::array<Rational, 3> caps = {Rational(1, 2), Rational(1), Rational(3)};

  for (std::size_t done = 0; done < cfg.samples; done += kChunk) {
    const std::size_t n = std::min(kChunk, cfg.samples - done);
    std::vector<Triple> unit_triples = sample_triples(sampler, n, Rational(1));
    tally.absorb(check_metric_axioms(plain, unit_triples));
    std::vector<Triple> wide_triples = sample_triples(sampler, n, Rational(4));
    for (const auto& cap : caps) {
      tally.absorb(check_metric_axioms(IntervalSetCappedCarrier{cap}, wide_triples));
    }
  }
  return finish("metric-axioms", tally,
                {{"samples", cfg.samples}, {"caps", {"1/2", "1", "3"}}});
}

SuiteResult suite_ring_continuity(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  Tally tally;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    IntervalSet a = sampler.interval_set();
    IntervalSet b = sampler.interval_set();
    IntervalSet u = sampler.interval_set();
    // Addition translates distances exactly; multiplication contracts.
    tally.check(metric_d(symdiff(a, u), symdiff(b, u)) == metric_d(a, b));
    tally.check(metric_d(set_intersect(a, u), set_intersect(b, u)) <= metric_d(a, b));
  }
  return finish("ring-continuity", tally, {{"samples", cfg.samples}});
}

SuiteResult suite_boolean_laws(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  Tally tally;
  const Ambient unit = Ambient::unit_interval();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    BElement a(sampler.interval_set());
    BElement b(sampler.interval_set());
    BElement c(sampler.interval_set());
    tally.check(ring_add(a, a) == BElement::zero());
    tally.check(ring_mul(a, a) == a);
    tally.check(ring_mul(BElement::one(), a) == a);
    tally.check(ring_mul(a, ring_add(b, c)) ==
                ring_add(ring_mul(a, b), ring_mul(a, c)));
    tally.check(set_union(a.set(), b.set()).measure() +
                    set_intersect(a.set(), b.set()).measure() ==
                a.set().measure() + b.set().measure());
    tally.check(complement(complement(a.set(), unit), unit) == a.set());
    tally.check(a.set().measure() + complement(a.set(), unit).measure() == 1);
    if (a != BElement::zero()) {
      tally.check(ring_mul(a, a) != BElement::zero());
      auto [left, right] = split_at(a.set(), find_halving_point(a.set()));
      tally.check(left.measure() == a.set().measure() / 2);
      tally.check(set_union(left, right) == a.set());
      tally.check(set_intersect(left, right).empty());
    }
  }
  return finish("boolean-laws", tally, {{"samples", cfg.samples}});
}

SuiteResult suite_typewriter(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  Tally tally;

  tally.check(typewriter(1).set() == IntervalSet::unit());
  tally.check(typewriter(2).set() ==
              IntervalSet::interval(Rational(0), Rational(1, 2)));
  tally.check(typewriter(3).set() ==
              IntervalSet::interval(Rational(1, 2), Rational(1)));
  tally.check(typewriter(5).set() ==
              IntervalSet::interval(Rational(1, 3), Rational(2, 3)));

  std::vector<Rational> probes = {Rational(1, 7), Rational(0)};
  for (int i = 0; i < 3; ++i) {
    probes.push_back(sampler.unit_rational(64));
  }
  std::vector<std::size_t> probe_hits(probes.size(), 0);
  const BElement empty_el = BElement::zero();
  std::uint64_t k = 1;
  for (std::uint64_t row = 1; row <= 50; ++row) {
    for (std::uint64_t i = 1; i <= row; ++i, ++k) {
      BElement term = typewriter(k);
      tally.check(term.measure() == Rational(1, Integer(row)));
      tally.check(metric_d(term, empty_el) == Rational(1, Integer(row)));
      for (std::size_t p = 0; p < probes.size(); ++p) {
        if (term.set().contains(probes[p])) {
          ++probe_hits[p];
        }
      }
    }
    // Each row covers every probe exactly once.
    for (std::size_t p = 0; p < probes.size(); ++p) {
      tally.check(probe_hits[p] == row);
    }
  }
  tally.check(probe_hits[0] == 50);

  tally.check(stretched_typewriter(1).set() == IntervalSet::unit());
  tally.check(stretched_typewriter(2).set() == IntervalSet::unit());
  tally.check(stretched_typewriter(3).set() ==
              IntervalSet::interval(Rational(0), Rational(1, 2)));
  tally.check(stretched_typewriter(6).set() ==
              IntervalSet::interval(Rational(0), Rational(1, 2)));
  tally.check(stretched_typewriter(7).set() ==
              IntervalSet::interval(Rational(1, 2), Rational(1)));

  // Fast subsequence: all pairwise distances beyond the first term of row n
  // are at most 2/n, so rows past 2/eps certify the modulus strictly.
  auto seq = [](std::size_t j) { return typewriter(j + 1).set(); };
  auto modulus = [](const Rational& eps) {
    Integer row = 2 * denominator(eps) / numerator(eps) + 1;
    auto n = static_cast<std::uint64_t>(row);
    return static_cast<std::size_t>(n * (n - 1) / 2);
  };
  const IntervalSetLatticeCarrier carrier;
  auto fast = extract_fast_subsequence<IntervalSetLatticeCarrier>(carrier, seq, modulus);
  tally.absorb(verify_gap_bounds(carrier, fast.certificate, 21));
  for (std::size_t i = 0; i + 1 <= 21; ++i) {
    tally.check(fast.certificate.gap_bound(i) == pow2(-static_cast<long>(i)));
  }

  return finish("typewriter", tally,
                {{"rows", 50},
                 {"probes", {"1/7", "0"}},
                 {"fast-gaps-verified", 21}});
}

SuiteResult suite_bisection(const SuiteConfig& cfg) {
  Tally tally;
  const FiniteAlgebra z6 = FiniteAlgebra::zmod(6);
  const StepFunction one_fn = StepFunction::constant("1");
  const Ambient unit = Ambient::unit_interval();

  for (std::uint64_t run = 0; run < 100; ++run) {
    ChooserOracle oracle = seeded_chooser(cfg.seed + run);
    IntervalSet u = IntervalSet::unit();
    IntervalSet v = IntervalSet::unit();
    for (unsigned step = 1; step <= 20; ++step) {
      u = prime_bisection_step(u, oracle);
      tally.check(u.measure() == pow2(-static_cast<long>(step)));
      tally.check(metric_d(ring_add(BElement::one(), BElement(u)), BElement::one()) ==
                  pow2(-static_cast<long>(step)));
      v = astar_bisection_step(v, z6, oracle);
      tally.check(v.measure() == pow2(-static_cast<long>(step)));
      tally.check(d_prime(characteristic_step(complement(v, unit)), one_fn) ==
                  pow2(-static_cast<long>(step)));
    }
  }

  // approach_one endpoints and the element-approach distances.
  ChooserOracle oracle = seeded_chooser(cfg.seed);
  auto [u10, d10] = approach_one(IntervalSet::unit(), oracle, 10);
  tally.check(d10 == Rational(1, 1024));
  auto [u0, d0] = approach_one(IntervalSet::unit(), oracle, 0);
  tally.check(u0 == IntervalSet::unit() && d0 == 1);
  auto [uh, dh] = approach_one(IntervalSet::interval(Rational(0), Rational(1, 2)),
                               oracle, 1);
  tally.check(dh == Rational(1, 4));

  Sampler sampler(cfg.seed);
  for (int i = 0; i < 64; ++i) {
    BElement v_el(sampler.interval_set());
    IntervalSet u_set = sampler.interval_set();
    BElement one_minus_u(complement(u_set, unit));
    auto [product, dist] = approach_element(v_el, one_minus_u);
    tally.check(dist == set_intersect(v_el.set(), u_set).measure());
    tally.check(dist <= u_set.measure());
  }
  return finish("bisection", tally, {{"oracles", 100}, {"steps", 20}});
}

SuiteResult suite_lift_lipschitz(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  Tally tally;
  const FiniteAlgebra z6 = FiniteAlgebra::zmod(6);
  const std::size_t tuples = std::max<std::size_t>(1000, cfg.samples / 10);

  for (const std::string op : {"add", "mul"}) {
    for (std::size_t i = 0; i < tuples; ++i) {
      std::vector<StepFunction> fs = {sampler.step_function(z6),
                                      sampler.step_function(z6)};
      std::vector<StepFunction> gs = {sampler.step_function(z6),
                                      sampler.step_function(z6)};
      // The two algebraic routes to the disagreement measure must agree.
      tally.check(d_prime_by_refinement(fs[0], gs[0]) ==
                  d_prime_by_component_sum(fs[0], gs[0]));
      Rational lhs = d_prime(lift_op(z6, op, fs), lift_op(z6, op, gs));
      Rational rhs = d_prime(fs[0], gs[0]) + d_prime(fs[1], gs[1]);
      tally.check(lhs <= rhs);
      // Per-label distances never exceed the step-function distance.
      Rational dfg = d_prime(fs[0], gs[0]);
      for (const auto& label : z6.carrier()) {
        tally.check(metric_d(fs[0].part(label), gs[0].part(label)) <= dfg);
      }
    }
  }

  // Ring identities survive the lift.
  for (std::size_t i = 0; i < tuples / 4; ++i) {
    StepFunction f = sampler.step_function(z6);
    StepFunction g = sampler.step_function(z6);
    StepFunction h = sampler.step_function(z6);
    auto add = [&](const StepFunction& x, const StepFunction& y) {
      return lift_op(z6, "add", std::vector<StepFunction>{x, y});
    };
    auto mul = [&](const StepFunction& x, const StepFunction& y) {
      return lift_op(z6, "mul", std::vector<StepFunction>{x, y});
    };
    tally.check(add(f, g) == add(g, f));
    tally.check(mul(f, g) == mul(g, f));
    tally.check(add(add(f, g), h) == add(f, add(g, h)));
    tally.check(mul(mul(f, g), h) == mul(f, mul(g, h)));
    tally.check(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
    tally.check(add(f, StepFunction::constant("0")) == f);
    tally.check(mul(f, StepFunction::constant("1")) == f);
    StepFunction neg = lift_op(z6, "neg", std::vector<StepFunction>{f});
    tally.check(lift_op(z6, "neg", std::vector<StepFunction>{neg}) == f);
    tally.check(add(f, neg) == StepFunction::constant("0"));
  }
  return finish("lift-lipschitz", tally,
                {{"algebra", "Z/6Z"}, {"tuples-per-op", tuples}});
}

SuiteResult suite_partition(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  Tally tally;
  const std::size_t candidates = std::max<std::size_t>(1000, cfg.samples / 10);

  auto exactly_partitions = [&tally](const std::vector<IntervalSet>& parts) {
    IntervalSet seen;
    bool disjoint = true;
    for (const auto& p : parts) {
      disjoint = disjoint && set_intersect(seen, p).empty();
      seen = set_union(seen, p);
    }
    tally.check(disjoint);
    tally.check(seen == IntervalSet::unit());
  };

  for (std::size_t i = 0; i < candidates; ++i) {
    std::vector<IntervalSet> cand = sampler.partition_candidate();
    std::vector<IntervalSet> normalized = normalize_partition(cand);
    exactly_partitions(normalized);
    for (std::size_t j = 0; j < cand.size(); ++j) {
      tally.check(normalized[j] == cand[j]);
    }

    // Knock a hole into the candidate: the result must still partition
    // exactly, with the missing measure absorbed by the first member.
    std::vector<IntervalSet> deficient = cand;
    Rational deficit(0);
    for (auto& part : deficient) {
      if (!part.empty()) {
        auto [left, right] = split_at(part, find_halving_point(part));
        deficit = left.measure();
        part = right;
        break;
      }
    }
    if (deficit > 0) {
      std::vector<IntervalSet> renorm = normalize_partition(deficient);
      exactly_partitions(renorm);
      for (std::size_t j = 1; j < deficient.size(); ++j) {
        tally.check(renorm[j] == deficient[j]);
      }
      tally.check(renorm[0].measure() == deficient[0].measure() + deficit);
      tally.check(set_difference(deficient[0], renorm[0]).empty());
    }

    // Round trip through the assembled step function.
    std::vector<std::pair<std::string, IntervalSet>> labeled;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      labeled.emplace_back("p" + std::to_string(j), cand[j]);
    }
    StepFunction assembled = assemble_limit(labeled);
    for (const auto& [label, part] : labeled) {
      tally.check(assembled.part(label) == part);
    }
  }
  return finish("partition", tally, {{"candidates", candidates}});
}

template <MetrizedJoinCarrier C>
void run_interval_scenario(const C& carrier, const IntervalScenario& scenario,
                           const SuiteConfig& cfg, Tally& tally,
                           nlohmann::json& details) {
  CompletionEngine<C> engine(carrier, scenario.certificate, cfg.horizon);
  CompletionRun<IntervalSet> run = engine.run_pipeline(scenario.oracle);
  VerifyReport verification = verify_run(carrier, run);
  for (const auto& family : verification.families) {
    tally.absorb(family);
  }
  tally.check(run.final_limit.has_value() &&
              *run.final_limit == scenario.expected_limit);

  ApproxLimit<IntervalSet> approx = engine.approx_limit(cfg.epsilon);
  tally.check(approx.bound <= cfg.epsilon);
  tally.check(carrier.dist(approx.value, scenario.expected_limit) <= approx.bound);

  details[scenario.name] = {
      {"finalLimit", run.final_limit ? to_json(*run.final_limit) : nlohmann::json()},
      {"approxBound", to_string(approx.bound)},
      {"approxStart", approx.start_index}};
}

template <MetrizedJoinCarrier C>
void run_step_scenario(const C& carrier, const StepFunctionScenario& scenario,
                       const SuiteConfig& cfg, Tally& tally,
                       nlohmann::json& details) {
  std::vector<std::pair<std::string, IntervalSet>> finals;
  for (const auto& label : scenario.labels) {
    CompletionEngine<C> engine(carrier, label.certificate, cfg.horizon);
    CompletionRun<IntervalSet> run = engine.run_pipeline(label.oracle);
    VerifyReport verification = verify_run(carrier, run);
    for (const auto& family : verification.families) {
      tally.absorb(family);
    }
    tally.check(run.final_limit.has_value() &&
                *run.final_limit == label.expected_limit);
    finals.emplace_back(label.label, run.final_limit.value_or(IntervalSet()));
  }
  StepFunction assembled = assemble_limit(finals);
  tally.check(assembled == scenario.expected);

  // The perturbed sequence is summable-gap in d-prime, and per-label
  // distances stay below the step-function distance.
  for (std::size_t i = 0; i + 1 < 16; ++i) {
    StepFunction fi = scenario.term(i);
    StepFunction fj = scenario.term(i + 1);
    Rational gap = d_prime(fi, fj);
    tally.check(gap <= scenario.dprime_gap_bound(i));
    for (const auto& label : scenario.labels) {
      tally.check(metric_d(fi.part(label.label), fj.part(label.label)) <= gap);
    }
  }
  details[scenario.name] = {{"assembled", to_json(assembled)}};
}

SuiteResult suite_completion_mode(std::string suite_name, LatticeMode mode,
                                  const SuiteConfig& cfg) {
  Tally tally;
  nlohmann::json details = nlohmann::json::object();

  auto run_all = [&](const auto& carrier) {
    run_interval_scenario(carrier, scenario_typewriter_fast(mode), cfg, tally, details);
    run_interval_scenario(carrier, scenario_increasing_sets(mode), cfg, tally, details);
    run_step_scenario(carrier, scenario_step_functions(mode), cfg, tally, details);
  };
  if (mode == LatticeMode::join) {
    run_all(IntervalSetLatticeCarrier{});
  } else {
    run_all(DualLatticeCarrier<IntervalSetLatticeCarrier>{});
  }

  if (mode == LatticeMode::join) {
    // Carriers registered weak-only are refused by the engine.
    const PointSpace space = PointSpace::from_points(
        {Rational(0), Rational(1), Rational(10)});
    DiameterJoinCarrier weak{space};
    const FiniteSubset point = FiniteSubset::singleton(Rational(0));
    GapCertificate<FiniteSubset> constant_cert(
        [point](std::size_t) { return point; },
        [](std::size_t) { return Rational(0); },
        [](std::size_t) { return Rational(0); });
    CompletionEngine<DiameterJoinCarrier> weak_engine(weak, constant_cert, 4);
    bool refused = false;
    try {
      weak_engine.run_pipeline(MonotoneLimitOracle<FiniteSubset>{});
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    tally.check(refused);
    details["weak-only-refused"] = refused;
  }
  return finish(std::move(suite_name), tally, std::move(details));
}

SuiteResult suite_completion(const SuiteConfig& cfg) {
  return suite_completion_mode("completion", LatticeMode::join, cfg);
}

SuiteResult suite_duality(const SuiteConfig& cfg) {
  return suite_completion_mode("duality", LatticeMode::meet, cfg);
}

SuiteResult suite_counterexamples(const SuiteConfig& cfg) {
  Tally tally;
  nlohmann::json details = nlohmann::json::object();
  const PointSpace m1 = PointSpace::from_points({Rational(0), Rational(1), Rational(10)});
  const PointSpace m2 = PointSpace::harmonic(6);

  // Diameter-metric axioms, exhaustive on the three-point space.
  {
    DiameterJoinCarrier carrier{m1};
    std::vector<FiniteSubset> subsets = enumerate_subsets(m1, 3);
    std::vector<std::array<FiniteSubset, 3>> triples;
    for (const auto& x : subsets)
      for (const auto& y : subsets)
        for (const auto& z : subsets) triples.push_back({x, y, z});
    tally.absorb(check_metric_axioms(carrier, triples));
  }
  // Sampled axioms over the harmonic space and its extension.
  {
    Sampler sampler(cfg.seed);
    LPrimeLatticeCarrier lc{make_lprime(m2)};
    std::vector<std::array<LPrimeElement, 3>> triples;
    for (std::size_t i = 0; i < std::min<std::size_t>(cfg.samples, 2000); ++i) {
      auto draw = [&]() -> LPrimeElement {
        if (sampler.next_index(8) == 0) {
          return std::nullopt;
        }
        return sampler.finite_subset(m2, cfg.size_cap);
      };
      triples.push_back({draw(), draw(), draw()});
    }
    tally.absorb(check_metric_axioms(lc, triples));
  }

  // Singleton embedding is isometric.
  for (const auto& p : m2.points()) {
    for (const auto& q : m2.points()) {
      tally.check(dL(m2, FiniteSubset::singleton(p), FiniteSubset::singleton(q)) ==
                  m2.dist(p, q));
    }
  }

  // Strictly increasing chains keep gaps above diam of the second element.
  {
    const PointSpace line = PointSpace::from_points(
        {Rational(0), Rational(1), Rational(2), Rational(3)});
    std::vector<FiniteSubset> chain = {
        FiniteSubset({Rational(0)}), FiniteSubset({Rational(0), Rational(1)}),
        FiniteSubset({Rational(0), Rational(1), Rational(2)}),
        FiniteSubset({Rational(0), Rational(1), Rational(2), Rational(3)})};
    tally.absorb(check_increasing_gap(line, chain));
  }

  // The harmonic singleton sequence is Cauchy with no limit among the
  // candidates.
  std::vector<FiniteSubset> candidates = enumerate_subsets(m2, cfg.size_cap);
  NonconvergenceReport nc = nonconvergence_check(candidates, cfg.horizon);
  tally.absorb(nc.cauchy);
  tally.absorb(nc.exclusion);
  details["nonconvergence-candidates"] = candidates.size();

  // Join discontinuity at the missing limit point.
  {
    std::vector<Rational> pts = {Rational(0), Rational(1)};
    for (std::size_t n = 2; n <= cfg.horizon + 1; ++n) {
      pts.emplace_back(1, Integer(n));
    }
    const PointSpace m0 = PointSpace::from_points(std::move(pts));
    DiscontinuityReport disc = join_discontinuity_witness(
        m0, [](std::size_t i) { return Rational(1, Integer(i + 1)); },
        [](const Rational& eps) {
          return static_cast<std::size_t>(denominator(eps) / numerator(eps)) + 1;
        },
        Rational(0), Rational(1), cfg.horizon);
    tally.absorb(disc.checks);
    tally.check(disc.pair_lower_bound == 1);
    tally.check(!disc.constant_sequence);
    details["discontinuity-pair-bound"] = to_string(disc.pair_lower_bound);
  }

  // Discrete spaces stay discrete in the extension: positive isolation radii,
  // including the nearest-neighbor radius of a mid-sequence singleton.
  {
    LPrime lp = make_lprime(m2);
    tally.check(isolation_radius(lp, std::nullopt) == 1);
    for (const auto& s : candidates) {
      tally.check(isolation_radius(lp, LPrimeElement(s)) > 0);
    }
    tally.check(isolation_radius(m2, FiniteSubset::singleton(Rational(1, 3))) ==
                Rational(1, 12));
    tally.check(isolation_radius(m2, FiniteSubset({Rational(1, 2), Rational(1)})) ==
                Rational(1, 2));
  }
  return finish("counterexamples", tally, std::move(details));
}

SuiteResult suite_weak_inequalities(const SuiteConfig& cfg) {
  Tally tally;
  nlohmann::json details = nlohmann::json::object();
  const PointSpace m1 = PointSpace::from_points({Rational(0), Rational(1), Rational(10)});
  const PointSpace m2 = PointSpace::harmonic(6);

  // d(x, x v y) <= d(x, y) holds for every pair, exhaustively.
  for (const PointSpace* space : {&m1, &m2}) {
    DiameterJoinCarrier carrier{*space};
    std::vector<FiniteSubset> subsets = enumerate_subsets(*space, cfg.size_cap);
    std::vector<std::array<FiniteSubset, 2>> pairs;
    pairs.reserve(subsets.size() * subsets.size());
    for (const auto& x : subsets)
      for (const auto& y : subsets) pairs.push_back({x, y});
    tally.absorb(check_weak_join(carrier, pairs));
  }

  // In the extension, the weak meet inequality holds whenever the meet is
  // nonempty, and disjoint pairs can break it.
  {
    LPrimeLatticeCarrier lc{make_lprime(m2)};
    std::vector<FiniteSubset> subsets = enumerate_subsets(m2, cfg.size_cap);
    std::vector<std::array<LPrimeElement, 2>> meeting;
    CheckReport disjoint_report{"weak-meet-disjoint"};
    for (const auto& x : subsets) {
      for (const auto& y : subsets) {
        if (set_intersect(x, y)) {
          meeting.push_back({LPrimeElement(x), LPrimeElement(y)});
        } else {
          ++disjoint_report.checked;
          Rational lhs = lc.dist(LPrimeElement(x), lc.meet(x, y));
          Rational rhs = lc.dist(LPrimeElement(x), LPrimeElement(y));
          if (lhs > rhs) {
            disjoint_report.violations.push_back(
                {nlohmann::json::array({to_json(x), to_json(y)}), lhs, rhs});
          }
        }
      }
    }
    tally.absorb(check_weak_meet(lc, meeting));
    tally.expect_violation(disjoint_report);
    details["weak-meet-disjoint-violations"] = disjoint_report.violations.size();
    // Comparable pairs (in particular those involving the empty set) always
    // satisfy the weak inequalities.
    std::vector<std::array<LPrimeElement, 2>> with_empty;
    for (const auto& x : subsets) {
      with_empty.push_back({LPrimeElement(x), std::nullopt});
      with_empty.push_back({std::nullopt, LPrimeElement(x)});
    }
    tally.absorb(check_weak_join(lc, with_empty));
    tally.absorb(check_weak_meet(lc, with_empty));
  }

  // Prefix-join chain bound, derived from the weak law alone.
  {
    Sampler sampler(cfg.seed);
    DiameterJoinCarrier carrier{m2};
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<FiniteSubset> chain;
      const std::size_t len = 2 + sampler.next_index(4);
      for (std::size_t i = 0; i < len; ++i) {
        chain.push_back(sampler.finite_subset(m2, cfg.size_cap));
      }
      tally.absorb(check_chain_bound(carrier, chain));
    }
    IntervalSetLatticeCarrier ic;
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<IntervalSet> chain;
      const std::size_t len = 2 + sampler.next_index(4);
      for (std::size_t i = 0; i < len; ++i) {
        chain.push_back(sampler.interval_set());
      }
      tally.absorb(check_chain_bound(ic, chain));
    }
  }
  return finish("weak-inequalities", tally, std::move(details));
}

SuiteResult suite_dv_witness(const SuiteConfig& cfg) {
  Tally tally;
  nlohmann::json details = nlohmann::json::object();
  const PointSpace m1 = PointSpace::from_points({Rational(0), Rational(1), Rational(10)});

  std::optional<DvWitness> witness = find_dv_violation(m1, cfg.size_cap);
  tally.check(witness.has_value());
  if (witness) {
    tally.check(witness->x == FiniteSubset::singleton(Rational(0)));
    tally.check(witness->y == FiniteSubset::singleton(Rational(1)));
    tally.check(witness->z == FiniteSubset::singleton(Rational(10)));
    tally.check(witness->lhs == 10);
    tally.check(witness->rhs == 9);
    details["witness"] = to_json(*witness);
  }

  // The strong law has no violation on degenerate spaces.
  tally.check(!find_dv_violation(PointSpace::from_points({Rational(7)}), cfg.size_cap)
                   .has_value());
  tally.check(!find_dv_violation(PointSpace::from_points({Rational(0), Rational(1)}),
                                 cfg.size_cap)
                   .has_value());

  // Interval sets satisfy the strong law outright; the witness search is
  // expected to come back empty there.
  {
    Sampler sampler(cfg.seed);
    IntervalSetLatticeCarrier ic;
    std::vector<std::array<IntervalSet, 3>> triples;
    for (std::size_t i = 0; i < std::min<std::size_t>(cfg.samples, 2000); ++i) {
      triples.push_back({sampler.interval_set(), sampler.interval_set(),
                         sampler.interval_set()});
    }
    tally.absorb(check_join_lipschitz(ic, triples));
    tally.absorb(check_meet_lipschitz(ic, triples));
  }
  return finish("dv-witness", tally, std::move(details));
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"metric-axioms", suite_metric_axioms},
      {"ring-continuity", suite_ring_continuity},
      {"boolean-laws", suite_boolean_laws},
      {"typewriter", suite_typewriter},
      {"bisection", suite_bisection},
      {"lift-lipschitz", suite_lift_lipschitz},
      {"partition", suite_partition},
      {"completion", suite_completion},
      {"duality", suite_duality},
      {"counterexamples", suite_counterexamples},
      {"weak-inequalities", suite_weak_inequalities},
      {"dv-witness", suite_dv_witness},
  };
  return suites;
}

}  // namespace

nlohmann::json to_json(const SuiteResult& result) {
  return {{"suite", result.name},
          {"passed", result.passed},
          {"checks", result.checks},
          {"failures", result.failures},
          {"details", result.details}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name == name) {
      try {
        return fn(config);
      } catch (const std::exception& e) {
        return SuiteResult{name, false, 0, 1, {{"error", e.what()}}};
      }
    }
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) {
    out.push_back(run_suite(name, config));
  }
  return out;
}

}  // namespace latmet
