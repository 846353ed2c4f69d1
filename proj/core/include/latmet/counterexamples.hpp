#ifndef LATMET_COUNTEREXAMPLES_HPP
#define LATMET_COUNTEREXAMPLES_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "latmet/lattice.hpp"
#include "latmet/rational.hpp"

namespace latmet {

/// A finite metric space of rational points. By default the metric is
/// |p - q|; a full distance table may be supplied instead and is validated
/// against the metric axioms exhaustively. Points are kept sorted ascending.
class PointSpace {
 public:
  static PointSpace from_points(std::vector<Rational> points);
  static PointSpace from_table(std::vector<Rational> points,
                               std::vector<std::vector<Rational>> distances);

  /// {1/1, 1/2, ..., 1/n}: the classic discrete non-complete space.
  static PointSpace harmonic(unsigned n);

  const std::vector<Rational>& points() const { return points_; }
  Rational dist(const Rational& p, const Rational& q) const;
  bool contains(const Rational& p) const;

  /// Distance from p to its nearest distinct neighbor; 1 by convention when
  /// the space has no other point.
  Rational nearest_neighbor_gap(const Rational& p) const;

 private:
  std::vector<Rational> points_;
  std::vector<std::vector<Rational>> table_;  // empty = use |p - q|
  std::size_t index_of(const Rational& p) const;
};

/// Nonempty finite subset of a point space, stored sorted and duplicate-free.
class FiniteSubset {
 public:
  /// Sorts and deduplicates; throws std::invalid_argument when empty.
  explicit FiniteSubset(std::vector<Rational> elements);
  static FiniteSubset singleton(Rational p);

  const std::vector<Rational>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_singleton() const { return elements_.size() == 1; }

  bool contains(const Rational& p) const;
  bool subset_of(const FiniteSubset& other) const;

  friend FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);
  /// Meet in the extended lattice; empty when the sets are disjoint.
  friend std::optional<FiniteSubset> set_intersect(const FiniteSubset& a,
                                                   const FiniteSubset& b);

  bool operator==(const FiniteSubset&) const = default;
  auto operator<=>(const FiniteSubset&) const = default;

 private:
  std::vector<Rational> elements_;
};

nlohmann::json to_json(const FiniteSubset& s);

/// Largest pairwise distance; 0 for singletons.
Rational diam(const PointSpace& space, const FiniteSubset& s);

/// The diameter metric: 0 when the sets are equal, diam of the union
/// otherwise.
Rational dL(const PointSpace& space, const FiniteSubset& s, const FiniteSubset& t);

/// The lattice obtained by adjoining the empty set, with the metric extended
/// through a fixed anchor: d(empty, S) = 1 + dL(anchor, S).
struct LPrime {
  PointSpace space;
  FiniteSubset anchor;
};

/// Anchor defaults to the singleton of the least point.
LPrime make_lprime(PointSpace space);
LPrime make_lprime(PointSpace space, FiniteSubset anchor);

/// An element of the extended lattice; nullopt is the empty set.
using LPrimeElement = std::optional<FiniteSubset>;

Rational dLprime(const LPrime& lp, const LPrimeElement& a, const LPrimeElement& b);

/// Join semilattice of finite nonempty subsets under the diameter metric.
/// Join is 1-Lipschitz only in the weak sense, so the carrier registers as
/// weak-only.
struct DiameterJoinCarrier {
  PointSpace space;

  using element = FiniteSubset;
  static constexpr bool join_is_lipschitz = false;

  FiniteSubset join(const FiniteSubset& a, const FiniteSubset& b) const {
    return set_union(a, b);
  }
  Rational dist(const FiniteSubset& a, const FiniteSubset& b) const {
    return dL(space, a, b);
  }
  nlohmann::json describe(const FiniteSubset& a) const { return to_json(a); }
};

/// The extended lattice with empty meets allowed.
struct LPrimeLatticeCarrier {
  LPrime lp;

  using element = LPrimeElement;
  static constexpr bool join_is_lipschitz = false;
  static constexpr bool meet_is_lipschitz = false;

  LPrimeElement join(const LPrimeElement& a, const LPrimeElement& b) const {
    if (!a) return b;
    if (!b) return a;
    return set_union(*a, *b);
  }
  LPrimeElement meet(const LPrimeElement& a, const LPrimeElement& b) const {
    if (!a || !b) return std::nullopt;
    return set_intersect(*a, *b);
  }
  Rational dist(const LPrimeElement& a, const LPrimeElement& b) const {
    return dLprime(lp, a, b);
  }
  nlohmann::json describe(const LPrimeElement& a) const {
    return a ? to_json(*a) : nlohmann::json("empty");
  }
};

/// All nonempty subsets of the space with at most size_cap elements, ordered
/// by size then lexicographically.
std::vector<FiniteSubset> enumerate_subsets(const PointSpace& space,
                                            std::size_t size_cap);

struct DvWitness {
  FiniteSubset x, y, z;
  Rational lhs, rhs;
};

nlohmann::json to_json(const DvWitness& w);

/// Exhaustive search for a triple violating d(x v y, x v z) <= d(y, z) in
/// the diameter semilattice; returns the first witness in enumeration order.
std::optional<DvWitness> find_dv_violation(const PointSpace& space,
                                           std::size_t size_cap);

/// Verifies that along a strictly increasing chain the consecutive distances
/// never fall below diam of the second element, so no strictly increasing
/// sequence is Cauchy. The chain must be strictly increasing under inclusion
/// and have length >= 2.
CheckReport check_increasing_gap(const PointSpace& space,
                                 std::span<const FiniteSubset> chain);

/// Radius of an open ball around s containing no other element of the
/// diameter semilattice: diam(s) for non-singletons, the nearest-neighbor
/// gap of the point for singletons. Finite point spaces are discrete, so
/// every element is isolated.
Rational isolation_radius(const PointSpace& space, const FiniteSubset& s);

/// Same in the extended lattice: the empty set is isolated at radius 1, and
/// nonempty sets are additionally capped by their distance to the empty set.
Rational isolation_radius(const LPrime& lp, const LPrimeElement& s);

/// Per-candidate certified lower bound excluding it as a limit of the
/// singleton sequence {1/1}, {1/2}, {1/3}, ...
struct NonconvergenceReport {
  struct CandidateBound {
    FiniteSubset candidate;
    Rational lower_bound;     // dL(candidate, {1/(i+1)}) >= lower_bound ...
    std::size_t from_index;   // ... for every i >= from_index
  };
  CheckReport cauchy;                  // modulus verification
  CheckReport exclusion;               // lower bounds verified at all indices
  std::vector<CandidateBound> bounds;

  bool ok() const { return cauchy.ok() && exclusion.ok(); }
};

/// Shows the singleton image of the harmonic sequence is Cauchy yet has no
/// limit among the candidates: any multi-point candidate stays at least its
/// diameter away, and any singleton {x} stays at least x/2 away eventually.
/// Candidates must be subsets of {1/n : n >= 1}.
NonconvergenceReport nonconvergence_check(std::span<const FiniteSubset> candidates,
                                          std::size_t horizon);

/// Evidence that join is discontinuous: singleton distances to {y} shrink
/// below every sampled threshold while the joined pairs {x_i, z} stay at
/// least d(y, z) away from {y, z}.
struct DiscontinuityReport {
  std::vector<Rational> singleton_dists;
  std::vector<Rational> pair_dists;
  Rational pair_lower_bound;
  bool constant_sequence;
  CheckReport checks;

  bool ok() const { return checks.ok(); }
};

DiscontinuityReport join_discontinuity_witness(
    const PointSpace& space, std::function<Rational(std::size_t)> seq,
    std::function<std::size_t(const Rational&)> modulus, const Rational& y,
    const Rational& z, std::size_t horizon);

}  // namespace latmet

#endif  // LATMET_COUNTEREXAMPLES_HPP
