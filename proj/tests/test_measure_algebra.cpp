#include "latmet/measure_algebra.hpp"

#include <stdexcept>

#include "doctest.h"
#include "latmet/sampling.hpp"

using namespace latmet;

namespace {

IntervalSet iv(int ln, int ld, int hn, int hd) {
  return IntervalSet::interval(Rational(ln, ld), Rational(hn, hd));
}

}  // namespace

TEST_CASE("elements live inside the unit interval") {
  CHECK_THROWS_AS(BElement(iv(0, 1, 2, 1)), std::invalid_argument);
  CHECK(BElement::one().measure() == 1);
  CHECK(BElement::zero().measure() == 0);
}

TEST_CASE("characteristic two and the unit") {
  CHECK(ring_add(BElement::one(), BElement::one()) == BElement::zero());
  CHECK(ring_add(BElement(iv(0, 1, 1, 2)), BElement(iv(1, 4, 3, 4))) ==
        BElement(IntervalSet::normalized({{Rational(0), Rational(1, 4)},
                                          {Rational(1, 2), Rational(3, 4)}})));
  Sampler sampler(5);
  for (int i = 0; i < 100; ++i) {
    BElement a(sampler.interval_set());
    CHECK(ring_mul(BElement::one(), a) == a);
    CHECK(ring_add(a, a) == BElement::zero());
    CHECK(ring_mul(a, a) == a);
  }
}

TEST_CASE("typewriter decodes rows") {
  CHECK(typewriter(1).set() == IntervalSet::unit());
  CHECK(typewriter(2).set() == iv(0, 1, 1, 2));
  CHECK(typewriter(3).set() == iv(1, 2, 1, 1));
  CHECK(typewriter(5).set() == iv(1, 3, 2, 3));
  CHECK_THROWS_AS(typewriter(0), std::invalid_argument);

  auto idx = typewriter_index(7);
  CHECK(idx.row == 4);
  CHECK(idx.offset == 1);

  // Decoding stays exact far out, where the fast-subsequence extraction
  // actually samples.
  const std::uint64_t n = (std::uint64_t{1} << 21) + 1;
  const std::uint64_t first_of_row = n * (n - 1) / 2 + 1;
  CHECK(typewriter_index(first_of_row).row == n);
  CHECK(typewriter_index(first_of_row).offset == 1);
  CHECK(typewriter_index(first_of_row - 1).row == n - 1);
  CHECK(typewriter_index(first_of_row - 1).offset == n - 1);
  CHECK(typewriter(first_of_row).measure() == Rational(1, Integer(n)));
}

TEST_CASE("every row covers every point exactly once") {
  Sampler sampler(13);
  std::vector<Rational> probes = {Rational(1, 7), Rational(0), Rational(9, 10)};
  for (int i = 0; i < 3; ++i) {
    probes.push_back(sampler.unit_rational(100));
  }
  std::uint64_t k = 1;
  for (std::uint64_t row = 1; row <= 30; ++row) {
    for (const auto& t : probes) {
      std::size_t hits = 0;
      for (std::uint64_t i = 1; i <= row; ++i) {
        if (typewriter(k + i - 1).set().contains(t)) {
          ++hits;
        }
      }
      CHECK(hits == 1);
    }
    k += row;
  }
}

TEST_CASE("stretched variant repeats term m 2^m times") {
  CHECK(stretched_typewriter(1).set() == IntervalSet::unit());
  CHECK(stretched_typewriter(2).set() == IntervalSet::unit());
  CHECK(stretched_typewriter(3).set() == iv(0, 1, 1, 2));
  CHECK(stretched_typewriter(6).set() == iv(0, 1, 1, 2));
  CHECK(stretched_typewriter(7).set() == iv(1, 2, 1, 1));
  CHECK(stretched_typewriter(14).set() == iv(1, 2, 1, 1));
  CHECK(stretched_typewriter(15).set() == iv(0, 1, 1, 3));
  CHECK_THROWS_AS(stretched_typewriter(0), std::invalid_argument);
}

TEST_CASE("bisection halves exactly") {
  CHECK(prime_bisection_step(IntervalSet::unit(), always_left()) == iv(0, 1, 1, 2));
  CHECK(prime_bisection_step(IntervalSet::unit(), always_right()) == iv(1, 2, 1, 1));
  IntervalSet u = IntervalSet::unit();
  for (int i = 0; i < 3; ++i) {
    u = prime_bisection_step(u, always_left());
  }
  CHECK(u == iv(0, 1, 1, 8));
  CHECK(u.measure() == Rational(1, 8));
  CHECK_THROWS_AS(prime_bisection_step(IntervalSet(), always_left()),
                  std::invalid_argument);
}

TEST_CASE("approach_one distances are oracle independent") {
  auto [u10, d10] = approach_one(IntervalSet::unit(), seeded_chooser(99), 10);
  CHECK(d10 == Rational(1, 1024));
  CHECK(u10.measure() == Rational(1, 1024));

  auto [u0, d0] = approach_one(IntervalSet::unit(), always_left(), 0);
  CHECK(u0 == IntervalSet::unit());
  CHECK(d0 == 1);

  CHECK(approach_one(iv(0, 1, 1, 2), always_right(), 1).second == Rational(1, 4));

  Sampler sampler(31);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    IntervalSet u0_set = sampler.interval_set();
    if (u0_set.empty()) {
      continue;
    }
    unsigned steps = 1 + static_cast<unsigned>(sampler.next_index(8));
    auto [un, dn] = approach_one(u0_set, seeded_chooser(seed), steps);
    CHECK(dn == u0_set.measure() / pow2(steps));
    CHECK(un.measure() == u0_set.measure() / pow2(steps));
  }
}

TEST_CASE("approach_element multiplies toward the target") {
  const Ambient unit = Ambient::unit_interval();
  BElement v(iv(0, 1, 1, 2));

  auto [same, zero] = approach_element(v, BElement::one());
  CHECK(same == v);
  CHECK(zero == 0);

  BElement near_one(complement(iv(0, 1, 1, 4), unit));
  auto [prod, dist] = approach_element(v, near_one);
  CHECK(dist == Rational(1, 4));
  CHECK(prod == BElement(iv(1, 4, 1, 2)));

  BElement w(iv(1, 2, 1, 1));
  auto [prod2, dist2] = approach_element(w, near_one);
  CHECK(dist2 == 0);
  CHECK(prod2 == w);
}
