#ifndef LATMET_INTERVAL_SET_HPP
#define LATMET_INTERVAL_SET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "latmet/rational.hpp"

namespace latmet {

/// Half-open interval [lo, hi) with exact rational endpoints, 0 <= lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Canonical finite union of disjoint half-open rational intervals.
///
/// Invariants: intervals sorted strictly by lo, and the hi of each interval
/// is strictly below the lo of the next (touching intervals are merged).
/// Canonical form is unique, so structural equality decides set equality and
/// two sets at distance zero are identical. Values are immutable after
/// construction.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Canonicalizes an arbitrary list of intervals (sorts, merges overlap and
  /// adjacency). Throws std::invalid_argument if any interval has lo >= hi
  /// or lo < 0.
  static IntervalSet normalized(std::vector<Interval> raw);

  static IntervalSet interval(Rational lo, Rational hi);

  /// The unit interval [0, 1).
  static IntervalSet unit();

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t piece_count() const { return intervals_.size(); }

  /// Total length; exact.
  Rational measure() const;

  /// Supremum of the set, 0 when empty.
  Rational upper_bound() const;

  bool contains(const Rational& t) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

/// Boolean-ring addition: points in exactly one of a, b.
IntervalSet symdiff(const IntervalSet& a, const IntervalSet& b);

/// The ambient space a set lives in: either [0, hi) for a positive rational
/// hi, or the unbounded half-line [0, oo) of the nonunital ring of
/// finite-measure sets.
class Ambient {
 public:
  static Ambient bounded(Rational hi);
  static Ambient unit_interval() { return bounded(Rational(1)); }
  static Ambient unbounded() { return Ambient(std::nullopt); }

  bool is_bounded() const { return hi_.has_value(); }
  const Rational& hi() const;

 private:
  explicit Ambient(std::optional<Rational> hi) : hi_(std::move(hi)) {}
  std::optional<Rational> hi_;
};

/// Complement within a bounded ambient. Throws std::invalid_argument for an
/// unbounded ambient (there is no unit element to subtract from) or when `a`
/// is not contained in it.
IntervalSet complement(const IntervalSet& a, const Ambient& within);

/// Measure of the symmetric difference. A genuine metric on canonical sets:
/// zero exactly when a == b.
Rational metric_d(const IntervalSet& a, const IntervalSet& b);

/// min(metric_d, cap); a metric on sets of any finite measure. cap must be
/// positive.
Rational metric_dC(const IntervalSet& a, const IntervalSet& b, const Rational& cap);

/// Splits into (a intersect [0,t), a intersect [t,oo)). t must be >= 0.
std::pair<IntervalSet, IntervalSet> split_at(const IntervalSet& a, const Rational& t);

/// The smallest t with measure(a intersect [0,t)) == measure(a)/2, found by
/// walking the intervals and accumulating length. Requires measure(a) > 0.
Rational find_halving_point(const IntervalSet& a);

}  // namespace latmet

#endif  // LATMET_INTERVAL_SET_HPP
