#include "latmet/counterexamples.hpp"

#include <algorithm>
#include <stdexcept>

namespace latmet {

PointSpace PointSpace::from_points(std::vector<Rational> points) {
  PointSpace s;
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("point space: points must be pairwise distinct");
  }
  if (points.empty()) {
    throw std::invalid_argument("point space: needs at least one point");
  }
  s.points_ = std::move(points);
  return s;
}

PointSpace PointSpace::from_table(std::vector<Rational> points,
                                  std::vector<std::vector<Rational>> distances) {
  const std::size_t n = points.size();
  if (distances.size() != n) {
    throw std::invalid_argument("point space: table must be square");
  }
  // Sort points and permute the table rows/columns along.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  PointSpace s;
  s.points_.reserve(n);
  s.table_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[order[i]].size() != n) {
      throw std::invalid_argument("point space: table must be square");
    }
    s.points_.push_back(points[order[i]]);
    for (std::size_t j = 0; j < n; ++j) {
      s.table_[i][j] = distances[order[i]][order[j]];
    }
  }
  if (std::adjacent_find(s.points_.begin(), s.points_.end()) != s.points_.end()) {
    throw std::invalid_argument("point space: points must be pairwise distinct");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s.table_[i][i] != 0) {
      throw std::invalid_argument("point space: nonzero self-distance in table");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s.table_[i][j] <= 0) {
        throw std::invalid_argument("point space: distances must be positive");
      }
      if (s.table_[i][j] != s.table_[j][i]) {
        throw std::invalid_argument("point space: table must be symmetric");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (s.table_[i][k] > s.table_[i][j] + s.table_[j][k]) {
          throw std::invalid_argument("point space: table violates the triangle inequality");
        }
      }
    }
  }
  return s;
}

PointSpace PointSpace::harmonic(unsigned n) {
  std::vector<Rational> pts;
  pts.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    pts.emplace_back(1, k);
  }
  return from_points(std::move(pts));
}

std::size_t PointSpace::index_of(const Rational& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) {
    throw std::invalid_argument("point space: unknown point " + to_string(p));
  }
  return static_cast<std::size_t>(it - points_.begin());
}

Rational PointSpace::dist(const Rational& p, const Rational& q) const {
  if (table_.empty()) {
    return p < q ? q - p : p - q;
  }
  return table_[index_of(p)][index_of(q)];
}

bool PointSpace::contains(const Rational& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Rational PointSpace::nearest_neighbor_gap(const Rational& p) const {
  index_of(p);  // validate membership
  std::optional<Rational> best;
  for (const auto& q : points_) {
    if (q == p) continue;
    Rational d = dist(p, q);
    if (!best || d < *best) {
      best = d;
    }
  }
  return best ? *best : Rational(1);
}

FiniteSubset::FiniteSubset(std::vector<Rational> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) {
    throw std::invalid_argument("finite subset: must be nonempty");
  }
}

FiniteSubset FiniteSubset::singleton(Rational p) {
  return FiniteSubset(std::vector<Rational>{std::move(p)});
}

bool FiniteSubset::contains(const Rational& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool FiniteSubset::subset_of(const FiniteSubset& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<Rational> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
             b.elements_.end(), std::back_inserter(merged));
  return FiniteSubset(std::move(merged));
}

std::optional<FiniteSubset> set_intersect(const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<Rational> common;
  std::set_intersection(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                        b.elements_.end(), std::back_inserter(common));
  if (common.empty()) {
    return std::nullopt;
  }
  return FiniteSubset(std::move(common));
}

Rational diam(const PointSpace& space, const FiniteSubset& s) {
  Rational best(0);
  const auto& elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      Rational d = space.dist(elems[i], elems[j]);
      if (d > best) {
        best = d;
      }
    }
  }
  return best;
}

Rational dL(const PointSpace& space, const FiniteSubset& s, const FiniteSubset& t) {
  if (s == t) {
    return Rational(0);
  }
  return diam(space, set_union(s, t));
}

LPrime make_lprime(PointSpace space) {
  FiniteSubset anchor = FiniteSubset::singleton(space.points().front());
  return LPrime{std::move(space), std::move(anchor)};
}

LPrime make_lprime(PointSpace space, FiniteSubset anchor) {
  return LPrime{std::move(space), std::move(anchor)};
}

Rational dLprime(const LPrime& lp, const LPrimeElement& a, const LPrimeElement& b) {
  if (!a && !b) {
    return Rational(0);
  }
  if (!a) {
    return 1 + dL(lp.space, lp.anchor, *b);
  }
  if (!b) {
    return 1 + dL(lp.space, lp.anchor, *a);
  }
  return dL(lp.space, *a, *b);
}

std::vector<FiniteSubset> enumerate_subsets(const PointSpace& space,
                                            std::size_t size_cap) {
  const auto& pts = space.points();
  std::vector<FiniteSubset> out;
  std::vector<Rational> scratch;
  // Combinations of each size in lexicographic index order.
  std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t start,
                                                           std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(FiniteSubset(scratch));
      return;
    }
    for (std::size_t i = start; i + remaining <= pts.size(); ++i) {
      scratch.push_back(pts[i]);
      emit(i + 1, remaining - 1);
      scratch.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(size_cap, pts.size()); ++size) {
    emit(0, size);
  }
  return out;
}

std::optional<DvWitness> find_dv_violation(const PointSpace& space,
                                           std::size_t size_cap) {
  const std::vector<FiniteSubset> subsets = enumerate_subsets(space, size_cap);
  for (const auto& x : subsets) {
    for (const auto& y : subsets) {
      for (const auto& z : subsets) {
        Rational lhs = dL(space, set_union(x, y), set_union(x, z));
        Rational rhs = dL(space, y, z);
        if (lhs > rhs) {
          return DvWitness{x, y, z, lhs, rhs};
        }
      }
    }
  }
  return std::nullopt;
}

CheckReport check_increasing_gap(const PointSpace& space,
                                 std::span<const FiniteSubset> chain) {
  if (chain.size() < 2) {
    throw std::invalid_argument("increasing gap: chain needs length >= 2");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!(chain[i].subset_of(chain[i + 1]) && chain[i] != chain[i + 1])) {
      throw std::invalid_argument("increasing gap: chain must be strictly increasing");
    }
  }
  CheckReport report{"increasing-gap"};
  const Rational bound = diam(space, chain[1]);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    ++report.checked;
    Rational gap = dL(space, chain[i], chain[i + 1]);
    if (gap < bound) {
      report.violations.push_back({nlohmann::json{{"index", i}}, gap, bound});
    }
  }
  return report;
}

Rational isolation_radius(const PointSpace& space, const FiniteSubset& s) {
  if (!s.is_singleton()) {
    return diam(space, s);
  }
  return space.nearest_neighbor_gap(s.elements().front());
}

Rational isolation_radius(const LPrime& lp, const LPrimeElement& s) {
  if (!s) {
    return Rational(1);
  }
  Rational in_l = isolation_radius(lp.space, *s);
  Rational to_empty = dLprime(lp, std::nullopt, s);
  return in_l < to_empty ? in_l : to_empty;
}

namespace {

FiniteSubset harmonic_term(std::size_t i) {
  return FiniteSubset::singleton(Rational(1, Integer(i + 1)));
}

// Diameter metric on the rational line: elements are sorted, so the diameter
// of a union is max minus min.
Rational dl_line(const FiniteSubset& a, const FiniteSubset& b) {
  if (a == b) {
    return Rational(0);
  }
  const FiniteSubset u = set_union(a, b);
  return u.elements().back() - u.elements().front();
}

}  // namespace

NonconvergenceReport nonconvergence_check(std::span<const FiniteSubset> candidates,
                                          std::size_t horizon) {
  NonconvergenceReport report;
  report.cauchy.name = "harmonic-cauchy";
  report.exclusion.name = "limit-exclusion";

  for (std::size_t m = 0; m < horizon; ++m) {
    for (std::size_t n = m; n < horizon; ++n) {
      ++report.cauchy.checked;
      Rational d = dl_line(harmonic_term(m), harmonic_term(n));
      Rational bound(1, Integer(m + 1));  // for m <= n: |1/(m+1) - 1/(n+1)| <= 1/(m+1)
      if (d > bound) {
        report.cauchy.violations.push_back(
            {nlohmann::json{{"m", m}, {"n", n}}, d, bound});
      }
    }
  }

  for (const auto& candidate : candidates) {
    for (const auto& p : candidate.elements()) {
      if (numerator(p) != 1 || denominator(p) < 1) {
        throw std::invalid_argument(
            "nonconvergence: candidate element " + to_string(p) +
            " is not of the form 1/n");
      }
    }
    Rational lower_bound;
    std::size_t from_index = 0;
    if (candidate.size() >= 2) {
      lower_bound = candidate.elements().back() - candidate.elements().front();
    } else {
      const Rational& x = candidate.elements().front();
      lower_bound = x / 2;
      // First i with 1/(i+1) <= x/2, i.e. i + 1 >= ceil(2/x).
      Integer threshold = (2 * denominator(x) + numerator(x) - 1) / numerator(x);
      from_index = static_cast<std::size_t>(threshold - 1);
    }
    for (std::size_t i = from_index; i < horizon; ++i) {
      ++report.exclusion.checked;
      Rational d = dl_line(candidate, harmonic_term(i));
      if (d < lower_bound) {
        report.exclusion.violations.push_back(
            {nlohmann::json{{"candidate", to_json(candidate)}, {"index", i}}, d,
             lower_bound});
      }
    }
    report.bounds.push_back({candidate, lower_bound, from_index});
  }
  return report;
}

DiscontinuityReport join_discontinuity_witness(
    const PointSpace& space, std::function<Rational(std::size_t)> seq,
    std::function<std::size_t(const Rational&)> modulus, const Rational& y,
    const Rational& z, std::size_t horizon) {
  if (y == z) {
    throw std::invalid_argument("discontinuity: needs z != y");
  }
  DiscontinuityReport report;
  report.checks.name = "join-discontinuity";
  report.pair_lower_bound = space.dist(y, z);
  report.constant_sequence = true;

  const FiniteSubset y_single = FiniteSubset::singleton(y);
  const FiniteSubset yz = set_union(y_single, FiniteSubset::singleton(z));
  std::vector<Rational> terms;
  terms.reserve(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    Rational x = seq(i);
    report.constant_sequence = report.constant_sequence && x == y;
    FiniteSubset x_single = FiniteSubset::singleton(x);
    report.singleton_dists.push_back(dL(space, x_single, y_single));
    report.pair_dists.push_back(
        dL(space, set_union(x_single, FiniteSubset::singleton(z)), yz));
    terms.push_back(std::move(x));
  }

  // Joined pairs never get closer than the distance y-to-z.
  for (std::size_t i = 0; i < horizon; ++i) {
    if (terms[i] == y) {
      continue;  // degenerate index; join equals {y, z}
    }
    ++report.checks.checked;
    if (report.pair_dists[i] < report.pair_lower_bound) {
      report.checks.violations.push_back(
          {nlohmann::json{{"index", i}}, report.pair_dists[i], report.pair_lower_bound});
    }
  }

  // Singleton convergence, spot-checked at the modulus for shrinking eps.
  for (long e = 0;; ++e) {
    std::size_t from = modulus(pow2(-e));
    if (from >= horizon) {
      break;
    }
    for (std::size_t i : {from, horizon - 1}) {
      ++report.checks.checked;
      if (report.singleton_dists[i] >= pow2(-e)) {
        report.checks.violations.push_back(
            {nlohmann::json{{"eps", to_string(pow2(-e))}, {"index", i}},
             report.singleton_dists[i], pow2(-e)});
      }
    }
  }
  return report;
}

}  // namespace latmet
