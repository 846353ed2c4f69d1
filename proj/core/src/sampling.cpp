#include "latmet/sampling.hpp"

#include <algorithm>
#include <set>

namespace latmet {

std::uint64_t Sampler::next_index(std::uint64_t bound) {
  return bound == 0 ? 0 : rng_() % bound;
}

Rational Sampler::unit_rational(unsigned max_den) {
  const std::uint64_t q = 1 + next_index(max_den);
  const std::uint64_t p = next_index(q);
  return Rational(Integer(p), Integer(q));
}

std::vector<Rational> Sampler::distinct_unit_rationals(std::size_t count,
                                                       unsigned max_den) {
  std::set<Rational> points;
  // Duplicates are simply redrawn a bounded number of times.
  for (std::size_t attempts = 0; points.size() < count && attempts < 8 * count + 16;
       ++attempts) {
    points.insert(unit_rational(max_den));
  }
  return {points.begin(), points.end()};
}

IntervalSet Sampler::interval_set(unsigned max_pieces, unsigned max_den) {
  const std::size_t pieces = next_index(max_pieces + 1);
  std::vector<Rational> cuts = distinct_unit_rationals(2 * pieces, max_den);
  std::vector<Interval> raw;
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {
    raw.push_back(Interval{cuts[i], cuts[i + 1]});
  }
  return IntervalSet::normalized(std::move(raw));
}

IntervalSet Sampler::interval_set_in(const Rational& hi, unsigned max_pieces,
                                     unsigned max_den) {
  IntervalSet unit_sample = interval_set(max_pieces, max_den);
  std::vector<Interval> scaled;
  scaled.reserve(unit_sample.piece_count());
  for (const auto& iv : unit_sample.intervals()) {
    scaled.push_back(Interval{iv.lo * hi, iv.hi * hi});
  }
  return IntervalSet::normalized(std::move(scaled));
}

StepFunction Sampler::step_function(const FiniteAlgebra& algebra, unsigned max_cells,
                                    unsigned max_den) {
  const std::size_t cells = 1 + next_index(max_cells);
  std::vector<Rational> cuts = distinct_unit_rationals(cells - 1, max_den);
  cuts.insert(cuts.begin(), Rational(0));
  cuts.push_back(Rational(1));
  std::vector<StepFunction::Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) {
      continue;
    }
    const auto label = algebra.label(
        static_cast<std::uint32_t>(next_index(algebra.size())));
    pieces.push_back(StepFunction::Piece{
        label, IntervalSet::interval(cuts[i], cuts[i + 1])});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

std::vector<IntervalSet> Sampler::partition_candidate(unsigned parts,
                                                      unsigned max_cells,
                                                      unsigned max_den) {
  const std::size_t cells = 1 + next_index(max_cells);
  std::vector<Rational> cuts = distinct_unit_rationals(cells - 1, max_den);
  cuts.insert(cuts.begin(), Rational(0));
  cuts.push_back(Rational(1));
  std::vector<std::vector<Interval>> buckets(std::max(1u, parts));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) {
      continue;
    }
    buckets[next_index(buckets.size())].push_back(Interval{cuts[i], cuts[i + 1]});
  }
  std::vector<IntervalSet> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    out.push_back(IntervalSet::normalized(std::move(b)));
  }
  return out;
}

FiniteSubset Sampler::finite_subset(const PointSpace& space, std::size_t size_cap) {
  const auto& pts = space.points();
  const std::size_t size =
      1 + next_index(std::min<std::size_t>(size_cap, pts.size()));
  std::set<Rational> chosen;
  while (chosen.size() < size) {
    chosen.insert(pts[next_index(pts.size())]);
  }
  return FiniteSubset({chosen.begin(), chosen.end()});
}

}  // namespace latmet
