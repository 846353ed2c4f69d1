#ifndef LATMET_MEASURE_ALGEBRA_HPP
#define LATMET_MEASURE_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "latmet/interval_set.hpp"

namespace latmet {

/// Element of the Boolean ring of canonical interval sets inside [0, 1).
/// Addition is symmetric difference, multiplication is intersection; the
/// canonical half-open representation realizes the quotient by null sets
/// losslessly, so equality is structural.
class BElement {
 public:
  BElement() = default;

  /// Throws std::invalid_argument when the set leaves [0, 1).
  explicit BElement(IntervalSet set);

  static BElement zero() { return BElement(); }
  static BElement one() { return BElement(IntervalSet::unit()); }

  const IntervalSet& set() const { return set_; }
  Rational measure() const { return set_.measure(); }

  bool operator==(const BElement&) const = default;

 private:
  IntervalSet set_;
};

BElement ring_add(const BElement& a, const BElement& b);
BElement ring_mul(const BElement& a, const BElement& b);
Rational metric_d(const BElement& a, const BElement& b);

/// Which half of a split to keep.
enum class Side { left, right };

/// Decision procedure standing in for a prime ideal: given the two halves of
/// a split, picks one. Prime ideals of this ring are never topologically
/// closed, so no concrete ideal is materialized; the halving distances below
/// hold for every chooser. A chooser may carry state and is confined to one
/// thread at a time.
using ChooserOracle = std::function<Side(const IntervalSet& left, const IntervalSet& right)>;

ChooserOracle always_left();
ChooserOracle always_right();

/// Deterministic pseudo-random chooser; the same seed replays the same picks.
ChooserOracle seeded_chooser(std::uint64_t seed);

/// Decomposition of a 1-based sequence position into (row, offset), where
/// row n holds n consecutive terms.
struct TypewriterIndex {
  std::uint64_t row;     // n >= 1
  std::uint64_t offset;  // 1 <= offset <= row
};

TypewriterIndex typewriter_index(std::uint64_t k);

/// k-th term (1-based) of the sweeping sequence: row n runs over
/// [(i-1)/n, i/n) for i = 1..n. Measures tend to 0 although every point of
/// [0, 1) is covered once per row.
BElement typewriter(std::uint64_t k);

/// The stretched variant: term m of the sweep repeated 2^m times.
BElement stretched_typewriter(std::uint64_t k);

/// Halves U at its exact halving point and returns the side selected by the
/// oracle. measure(result) == measure(U)/2 exactly. Requires measure(U) > 0.
IntervalSet prime_bisection_step(const IntervalSet& u, const ChooserOracle& oracle);

/// Iterates prime_bisection_step n times from u0; returns the final set and
/// the distance d(1 + U_n, 1), which equals measure(u0) / 2^n for every
/// oracle. Requires measure(u0) > 0 when n > 0.
std::pair<IntervalSet, Rational> approach_one(const IntervalSet& u0,
                                              const ChooserOracle& oracle,
                                              unsigned steps);

/// Multiplies v by (1 + U) and reports the distance to v, which is
/// measure(v intersect U).
std::pair<BElement, Rational> approach_element(const BElement& v,
                                               const BElement& one_minus_u);

}  // namespace latmet

#endif  // LATMET_MEASURE_ALGEBRA_HPP
