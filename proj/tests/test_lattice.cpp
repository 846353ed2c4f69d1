#include "latmet/lattice.hpp"

#include <array>

#include "doctest.h"
#include "latmet/counterexamples.hpp"
#include "latmet/errors.hpp"
#include "latmet/measure_algebra.hpp"
#include "latmet/sampling.hpp"

using namespace latmet;

namespace {

FiniteSubset fs(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) {
    v.emplace_back(x);
  }
  return FiniteSubset(std::move(v));
}

}  // namespace

TEST_CASE("interval carrier satisfies the strong laws") {
  IntervalSetLatticeCarrier carrier;
  Sampler sampler(61);
  std::vector<std::array<IntervalSet, 3>> triples;
  for (int i = 0; i < 400; ++i) {
    triples.push_back({sampler.interval_set(), sampler.interval_set(),
                       sampler.interval_set()});
  }
  CHECK(check_join_lipschitz(carrier, triples).ok());
  CHECK(check_meet_lipschitz(carrier, triples).ok());
  CHECK(check_metric_axioms(carrier, triples).ok());

  std::vector<std::array<IntervalSet, 2>> pairs;
  for (const auto& t : triples) {
    pairs.push_back({t[0], t[1]});
  }
  CHECK(check_weak_join(carrier, pairs).ok());
  CHECK(check_weak_meet(carrier, pairs).ok());
}

TEST_CASE("diameter carrier breaks the strong join law") {
  PointSpace space = PointSpace::from_points({Rational(0), Rational(1), Rational(10)});
  DiameterJoinCarrier carrier{space};
  std::vector<std::array<FiniteSubset, 3>> triple = {
      {fs({0}), fs({1}), fs({10})}};
  CheckReport report = check_join_lipschitz(carrier, triple);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].lhs == 10);
  CHECK(report.violations[0].rhs == 9);

  // y == z passes trivially.
  std::vector<std::array<FiniteSubset, 3>> same = {{fs({0}), fs({1}), fs({1})}};
  CHECK(check_join_lipschitz(carrier, same).ok());
}

TEST_CASE("chain bound holds under the weak law") {
  IntervalSetLatticeCarrier ic;
  std::vector<IntervalSet> singleton_chain = {IntervalSet::unit()};
  CHECK(check_chain_bound(ic, singleton_chain).ok());

  Sampler sampler(67);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<IntervalSet> chain;
    for (int i = 0; i < 5; ++i) {
      chain.push_back(sampler.interval_set());
    }
    CHECK(check_chain_bound(ic, chain).ok());
  }

  PointSpace space = PointSpace::harmonic(5);
  DiameterJoinCarrier dc{space};
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<FiniteSubset> chain;
    for (int i = 0; i < 4; ++i) {
      chain.push_back(sampler.finite_subset(space, 3));
    }
    CHECK(check_chain_bound(dc, chain).ok());
  }
}

TEST_CASE("gap certificates memoize and verify") {
  IntervalSetLatticeCarrier carrier;
  GapCertificate<IntervalSet> cert(
      [](std::size_t i) {
        return IntervalSet::interval(Rational(0), pow2(-static_cast<long>(i)));
      },
      [](std::size_t i) { return pow2(-static_cast<long>(i) - 1); },
      [](std::size_t h) { return pow2(-static_cast<long>(h)); });
  CHECK(cert.term(3) == IntervalSet::interval(Rational(0), Rational(1, 8)));
  CHECK(cert.gap_bound(2) == Rational(1, 8));
  CHECK(cert.tail(4) == Rational(1, 16));
  CHECK(verify_gap_bounds(carrier, cert, 20).ok());

  GapCertificate<IntervalSet> lying(
      [](std::size_t i) {
        return i % 2 == 0 ? IntervalSet() : IntervalSet::unit();
      },
      [](std::size_t) { return Rational(1, 2); },
      [](std::size_t) { return Rational(1); });
  CHECK_FALSE(verify_gap_bounds(carrier, lying, 4).ok());
}

TEST_CASE("fast subsequence extraction") {
  IntervalSetLatticeCarrier carrier;

  SUBCASE("constant sequence is its own fast subsequence") {
    auto fast = extract_fast_subsequence<IntervalSetLatticeCarrier>(
        carrier, [](std::size_t) { return IntervalSet::unit(); },
        [](const Rational&) { return std::size_t{0}; });
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(fast.source_index(i) == i);
      CHECK(fast.certificate.term(i) == IntervalSet::unit());
    }
    CHECK(verify_gap_bounds(carrier, fast.certificate, 8).ok());
  }

  SUBCASE("already fast sequences keep their indices") {
    // Terms [0, 4^-i): pairwise distances beyond N stay below 4^-N, so the
    // honest modulus for 2^-e is ceil(e/2).
    auto seq = [](std::size_t i) {
      return IntervalSet::interval(Rational(0), pow2(-2 * static_cast<long>(i)));
    };
    auto modulus = [](const Rational& eps) -> std::size_t {
      std::size_t n = 0;
      while (pow2(-2 * static_cast<long>(n)) > eps) {
        ++n;
      }
      return n;
    };
    auto fast = extract_fast_subsequence<IntervalSetLatticeCarrier>(carrier, seq,
                                                                    modulus);
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(fast.source_index(i) == i);
    }
    CHECK(verify_gap_bounds(carrier, fast.certificate, 10).ok());
  }

  SUBCASE("a lying modulus is reported as a contract breach") {
    auto seq = [](std::size_t i) {
      return i % 2 == 0 ? IntervalSet() : IntervalSet::unit();
    };
    auto fast = extract_fast_subsequence<IntervalSetLatticeCarrier>(
        carrier, seq, [](const Rational&) { return std::size_t{0}; });
    CHECK(fast.certificate.term(0).empty());
    CHECK_THROWS_AS(fast.certificate.term(3), contract_breach);
  }

  SUBCASE("typewriter with its pairwise modulus") {
    auto seq = [](std::size_t j) { return typewriter(j + 1).set(); };
    auto modulus = [](const Rational& eps) {
      Integer row = 2 * denominator(eps) / numerator(eps) + 1;
      auto n = static_cast<std::uint64_t>(row);
      return static_cast<std::size_t>(n * (n - 1) / 2);
    };
    auto fast = extract_fast_subsequence<IntervalSetLatticeCarrier>(carrier, seq,
                                                                    modulus);
    CHECK(verify_gap_bounds(carrier, fast.certificate, 21).ok());
    for (std::size_t i = 0; i < 21; ++i) {
      CHECK(fast.certificate.gap_bound(i) == pow2(-static_cast<long>(i)));
    }
    CHECK(fast.certificate.tail(9) == pow2(-8));
  }
}
