#include "latmet/measure_algebra.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

namespace latmet {

BElement::BElement(IntervalSet set) : set_(std::move(set)) {
  if (set_.upper_bound() > 1) {
    throw std::invalid_argument("BElement: set extends beyond [0, 1)");
  }
}

BElement ring_add(const BElement& a, const BElement& b) {
  return BElement(symdiff(a.set(), b.set()));
}

BElement ring_mul(const BElement& a, const BElement& b) {
  return BElement(set_intersect(a.set(), b.set()));
}

Rational metric_d(const BElement& a, const BElement& b) {
  return metric_d(a.set(), b.set());
}

ChooserOracle always_left() {
  return [](const IntervalSet&, const IntervalSet&) { return Side::left; };
}

ChooserOracle always_right() {
  return [](const IntervalSet&, const IntervalSet&) { return Side::right; };
}

ChooserOracle seeded_chooser(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const IntervalSet&, const IntervalSet&) {
    return ((*rng)() & 1u) ? Side::left : Side::right;
  };
}

TypewriterIndex typewriter_index(std::uint64_t k) {
  if (k == 0) {
    throw std::invalid_argument("typewriter: positions are 1-based");
  }
  // Row n covers positions n(n-1)/2 + 1 .. n(n+1)/2.
  auto row_end = [](std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * (n + 1)) / 2);
  };
  auto n = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(k) + 1.0L) - 1.0L) / 2.0L);
  if (n == 0) {
    n = 1;
  }
  while (row_end(n) < k) {
    ++n;
  }
  while (n > 1 && row_end(n - 1) >= k) {
    --n;
  }
  return TypewriterIndex{n, k - row_end(n - 1)};
}

BElement typewriter(std::uint64_t k) {
  const auto [n, i] = typewriter_index(k);
  return BElement(IntervalSet::interval(Rational(Integer(i) - 1, Integer(n)),
                                        Rational(Integer(i), Integer(n))));
}

BElement stretched_typewriter(std::uint64_t k) {
  if (k == 0) {
    throw std::invalid_argument("stretched_typewriter: positions are 1-based");
  }
  // Term m occupies positions 2^{m+1} - 2^m - ... = (2^m - 2) + 1 .. 2^{m+1} - 2.
  std::uint64_t m = 1;
  while ((std::uint64_t{2} << m) - 2 < k) {
    ++m;
  }
  return typewriter(m);
}

IntervalSet prime_bisection_step(const IntervalSet& u, const ChooserOracle& oracle) {
  if (u.measure() == 0) {
    throw std::invalid_argument("prime_bisection_step: set has measure zero");
  }
  auto [left, right] = split_at(u, find_halving_point(u));
  return oracle(left, right) == Side::left ? left : right;
}

std::pair<IntervalSet, Rational> approach_one(const IntervalSet& u0,
                                              const ChooserOracle& oracle,
                                              unsigned steps) {
  IntervalSet u = u0;
  for (unsigned i = 0; i < steps; ++i) {
    u = prime_bisection_step(u, oracle);
  }
  const BElement near_one = ring_add(BElement::one(), BElement(u));
  return {u, metric_d(near_one, BElement::one())};
}

std::pair<BElement, Rational> approach_element(const BElement& v,
                                               const BElement& one_minus_u) {
  BElement product = ring_mul(v, one_minus_u);
  return {product, metric_d(product, v)};
}

}  // namespace latmet
