#include "latmet/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace latmet {

namespace {

// Appends [lo, hi) to an ordered canonical list, merging when it touches the
// previous interval. Caller feeds cells left to right, never overlapping.
void append_cell(std::vector<Interval>& out, const Rational& lo, const Rational& hi) {
  if (!out.empty() && out.back().hi == lo) {
    out.back().hi = hi;
  } else {
    out.push_back(Interval{lo, hi});
  }
}

// True when the canonical list `v` covers the cell starting at `lo`; `idx`
// advances monotonically across calls with increasing `lo`.
bool covers_from(const std::vector<Interval>& v, std::size_t& idx, const Rational& lo) {
  while (idx < v.size() && v[idx].hi <= lo) {
    ++idx;
  }
  return idx < v.size() && v[idx].lo <= lo;
}

// Sweeps the merged endpoint grid of a and b, keeping each elementary cell
// for which keep(inA, inB) holds. Both inputs canonical; output canonical.
template <typename Keep>
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, Keep keep) {
  std::vector<Rational> cuts;
  cuts.reserve(2 * (a.piece_count() + b.piece_count()));
  for (const auto& iv : a.intervals()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  for (const auto& iv : b.intervals()) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> out;
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const bool in_a = covers_from(a.intervals(), ia, cuts[c]);
    const bool in_b = covers_from(b.intervals(), ib, cuts[c]);
    if (keep(in_a, in_b)) {
      append_cell(out, cuts[c], cuts[c + 1]);
    }
  }
  IntervalSet result;
  result = IntervalSet::normalized(std::move(out));
  return result;
}

}  // namespace

IntervalSet IntervalSet::normalized(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (iv.lo >= iv.hi) {
      throw std::invalid_argument("interval: malformed interval (lo >= hi): [" +
                                  latmet::to_string(iv.lo) + ", " +
                                  latmet::to_string(iv.hi) + ")");
    }
    if (iv.lo < 0) {
      throw std::invalid_argument("interval: negative endpoint " +
                                  latmet::to_string(iv.lo));
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo;
  });
  std::vector<Interval> merged;
  merged.reserve(raw.size());
  for (auto& iv : raw) {
    if (!merged.empty() && merged.back().hi >= iv.lo) {
      if (iv.hi > merged.back().hi) {
        merged.back().hi = std::move(iv.hi);
      }
    } else {
      merged.push_back(std::move(iv));
    }
  }
  IntervalSet s;
  s.intervals_ = std::move(merged);
  return s;
}

IntervalSet IntervalSet::interval(Rational lo, Rational hi) {
  return normalized({Interval{std::move(lo), std::move(hi)}});
}

IntervalSet IntervalSet::unit() { return interval(Rational(0), Rational(1)); }

Rational IntervalSet::measure() const {
  Rational total(0);
  for (const auto& iv : intervals_) {
    total += iv.length();
  }
  return total;
}

Rational IntervalSet::upper_bound() const {
  return intervals_.empty() ? Rational(0) : intervals_.back().hi;
}

bool IntervalSet::contains(const Rational& t) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), t,
      [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) {
    return false;
  }
  --it;
  return t < it->hi;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

IntervalSet symdiff(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

Ambient Ambient::bounded(Rational hi) {
  if (hi <= 0) {
    throw std::invalid_argument("ambient: upper end must be positive");
  }
  return Ambient(std::optional<Rational>(std::move(hi)));
}

const Rational& Ambient::hi() const {
  if (!hi_) {
    throw std::logic_error("ambient: unbounded ambient has no upper end");
  }
  return *hi_;
}

IntervalSet complement(const IntervalSet& a, const Ambient& within) {
  if (!within.is_bounded()) {
    throw std::invalid_argument(
        "complement: unbounded ambient rejected; the ring of finite-measure "
        "sets has no unit element");
  }
  if (a.upper_bound() > within.hi()) {
    throw std::invalid_argument("complement: set extends beyond ambient [0, " +
                                latmet::to_string(within.hi()) + ")");
  }
  return set_difference(IntervalSet::interval(Rational(0), within.hi()), a);
}

Rational metric_d(const IntervalSet& a, const IntervalSet& b) {
  return symdiff(a, b).measure();
}

Rational metric_dC(const IntervalSet& a, const IntervalSet& b, const Rational& cap) {
  if (cap <= 0) {
    throw std::invalid_argument("metric_dC: cap must be positive");
  }
  Rational d = metric_d(a, b);
  return d < cap ? d : cap;
}

std::pair<IntervalSet, IntervalSet> split_at(const IntervalSet& a, const Rational& t) {
  if (t < 0) {
    throw std::invalid_argument("split_at: split point must be >= 0");
  }
  std::vector<Interval> left;
  std::vector<Interval> right;
  for (const auto& iv : a.intervals()) {
    if (iv.hi <= t) {
      left.push_back(iv);
    } else if (iv.lo >= t) {
      right.push_back(iv);
    } else {
      left.push_back(Interval{iv.lo, t});
      right.push_back(Interval{t, iv.hi});
    }
  }
  return {IntervalSet::normalized(std::move(left)),
          IntervalSet::normalized(std::move(right))};
}

Rational find_halving_point(const IntervalSet& a) {
  const Rational target = a.measure() / 2;
  if (target == 0) {
    throw std::invalid_argument("find_halving_point: set has measure zero");
  }
  Rational seen(0);
  for (const auto& iv : a.intervals()) {
    if (seen + iv.length() >= target) {
      return iv.lo + (target - seen);
    }
    seen += iv.length();
  }
  throw std::logic_error("find_halving_point: accumulation never reached half");
}

}  // namespace latmet
