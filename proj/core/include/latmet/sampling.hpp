#ifndef LATMET_SAMPLING_HPP
#define LATMET_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "latmet/algebra_star.hpp"
#include "latmet/counterexamples.hpp"
#include "latmet/interval_set.hpp"

namespace latmet {

/// Deterministic generator of random exact values; the same seed replays the
/// same stream regardless of platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_index(std::uint64_t bound);  // [0, bound)

  /// p/q in [0, 1) with denominator <= max_den.
  Rational unit_rational(unsigned max_den);

  /// Canonical set inside [0, 1) with at most max_pieces intervals.
  IntervalSet interval_set(unsigned max_pieces = 4, unsigned max_den = 32);

  /// Canonical set inside [0, hi); endpoints are scaled unit samples.
  IntervalSet interval_set_in(const Rational& hi, unsigned max_pieces = 4,
                              unsigned max_den = 32);

  /// Random step function over the algebra's carrier with at most max_cells
  /// constant cells before coalescing.
  StepFunction step_function(const FiniteAlgebra& algebra, unsigned max_cells = 5,
                             unsigned max_den = 24);

  /// A valid partition candidate: `parts` pairwise disjoint sets (some may be
  /// empty) whose measures sum to exactly 1.
  std::vector<IntervalSet> partition_candidate(unsigned parts = 4,
                                               unsigned max_cells = 6,
                                               unsigned max_den = 24);

  /// Nonempty subset of the space with at most size_cap points.
  FiniteSubset finite_subset(const PointSpace& space, std::size_t size_cap);

 private:
  std::vector<Rational> distinct_unit_rationals(std::size_t count, unsigned max_den);
  std::mt19937_64 rng_;
};

}  // namespace latmet

#endif  // LATMET_SAMPLING_HPP
