#ifndef LATMET_LATTICE_HPP
#define LATMET_LATTICE_HPP

#include <array>
#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latmet/errors.hpp"
#include "latmet/interval_set.hpp"
#include "latmet/rational.hpp"
#include "latmet/serialization.hpp"

namespace latmet {

/// An upper semilattice whose carrier set is metrized. `join_is_lipschitz`
/// declares whether d(x v y, x v z) <= d(y, z) holds identically; carriers
/// that only satisfy the weaker d(x, x v y) <= d(x, y) must register false
/// and are refused by the completion engine.
template <typename C>
concept MetrizedJoinCarrier = requires(const C& c, const typename C::element& a,
                                       const typename C::element& b) {
  typename C::element;
  { c.join(a, b) } -> std::convertible_to<typename C::element>;
  { c.dist(a, b) } -> std::convertible_to<Rational>;
  { c.describe(a) } -> std::convertible_to<nlohmann::json>;
  { a == b } -> std::convertible_to<bool>;
  { C::join_is_lipschitz } -> std::convertible_to<bool>;
};

template <typename C>
concept MetrizedLatticeCarrier = MetrizedJoinCarrier<C> &&
    requires(const C& c, const typename C::element& a, const typename C::element& b) {
  { c.meet(a, b) } -> std::convertible_to<typename C::element>;
  { C::meet_is_lipschitz } -> std::convertible_to<bool>;
};

/// One failed inequality instance: the inputs it was evaluated on and the two
/// exact sides.
struct Violation {
  nlohmann::json inputs;
  Rational lhs;
  Rational rhs;
};

struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const CheckReport& report);

/// Interval sets under union/intersection with the symmetric-difference
/// metric; both lattice operations are 1-Lipschitz.
struct IntervalSetLatticeCarrier {
  using element = IntervalSet;
  static constexpr bool join_is_lipschitz = true;
  static constexpr bool meet_is_lipschitz = true;

  IntervalSet join(const IntervalSet& a, const IntervalSet& b) const {
    return set_union(a, b);
  }
  IntervalSet meet(const IntervalSet& a, const IntervalSet& b) const {
    return set_intersect(a, b);
  }
  Rational dist(const IntervalSet& a, const IntervalSet& b) const {
    return metric_d(a, b);
  }
  nlohmann::json describe(const IntervalSet& a) const { return to_json(a); }
};

/// Same lattice under the capped metric min(d, cap), the metric that stays
/// finite on sets of unbounded measure.
struct IntervalSetCappedCarrier {
  Rational cap;

  using element = IntervalSet;
  static constexpr bool join_is_lipschitz = true;
  static constexpr bool meet_is_lipschitz = true;

  IntervalSet join(const IntervalSet& a, const IntervalSet& b) const {
    return set_union(a, b);
  }
  IntervalSet meet(const IntervalSet& a, const IntervalSet& b) const {
    return set_intersect(a, b);
  }
  Rational dist(const IntervalSet& a, const IntervalSet& b) const {
    return metric_dC(a, b, cap);
  }
  nlohmann::json describe(const IntervalSet& a) const { return to_json(a); }
};

/// Order dual of a lattice carrier: join and meet swap, the metric stays.
template <MetrizedLatticeCarrier L>
struct DualLatticeCarrier {
  L base;

  using element = typename L::element;
  static constexpr bool join_is_lipschitz = L::meet_is_lipschitz;
  static constexpr bool meet_is_lipschitz = L::join_is_lipschitz;

  element join(const element& a, const element& b) const { return base.meet(a, b); }
  element meet(const element& a, const element& b) const { return base.join(a, b); }
  Rational dist(const element& a, const element& b) const { return base.dist(a, b); }
  nlohmann::json describe(const element& a) const { return base.describe(a); }
};

namespace detail {

template <typename C, typename E>
nlohmann::json describe_tuple(const C& carrier, std::span<const E> elems) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : elems) {
    out.push_back(carrier.describe(e));
  }
  return out;
}

}  // namespace detail

/// Checks d(x v y, x v z) <= d(y, z) on every triple; exact comparison.
template <MetrizedJoinCarrier C>
CheckReport check_join_lipschitz(const C& carrier,
                                 std::span<const std::array<typename C::element, 3>> triples) {
  CheckReport report{"join-lipschitz"};
  for (const auto& [x, y, z] : triples) {
    ++report.checked;
    Rational lhs = carrier.dist(carrier.join(x, y), carrier.join(x, z));
    Rational rhs = carrier.dist(y, z);
    if (lhs > rhs) {
      report.violations.push_back(
          {detail::describe_tuple<C, typename C::element>(carrier, std::array{x, y, z}),
           lhs, rhs});
    }
  }
  return report;
}

/// Checks d(x ^ y, x ^ z) <= d(y, z); the order dual of the join check.
template <MetrizedLatticeCarrier C>
CheckReport check_meet_lipschitz(const C& carrier,
                                 std::span<const std::array<typename C::element, 3>> triples) {
  CheckReport report{"meet-lipschitz"};
  for (const auto& [x, y, z] : triples) {
    ++report.checked;
    Rational lhs = carrier.dist(carrier.meet(x, y), carrier.meet(x, z));
    Rational rhs = carrier.dist(y, z);
    if (lhs > rhs) {
      report.violations.push_back(
          {detail::describe_tuple<C, typename C::element>(carrier, std::array{x, y, z}),
           lhs, rhs});
    }
  }
  return report;
}

/// Checks the weak inequality d(x, x v y) <= d(x, y) on every pair.
template <MetrizedJoinCarrier C>
CheckReport check_weak_join(const C& carrier,
                            std::span<const std::array<typename C::element, 2>> pairs) {
  CheckReport report{"weak-join"};
  for (const auto& [x, y] : pairs) {
    ++report.checked;
    Rational lhs = carrier.dist(x, carrier.join(x, y));
    Rational rhs = carrier.dist(x, y);
    if (lhs > rhs) {
      report.violations.push_back(
          {detail::describe_tuple<C, typename C::element>(carrier, std::array{x, y}),
           lhs, rhs});
    }
  }
  return report;
}

/// Checks the weak inequality d(x, x ^ y) <= d(x, y) on every pair.
template <MetrizedLatticeCarrier C>
CheckReport check_weak_meet(const C& carrier,
                            std::span<const std::array<typename C::element, 2>> pairs) {
  CheckReport report{"weak-meet"};
  for (const auto& [x, y] : pairs) {
    ++report.checked;
    Rational lhs = carrier.dist(x, carrier.meet(x, y));
    Rational rhs = carrier.dist(x, y);
    if (lhs > rhs) {
      report.violations.push_back(
          {detail::describe_tuple<C, typename C::element>(carrier, std::array{x, y}),
           lhs, rhs});
    }
  }
  return report;
}

/// Checks d(x_0, x_0 v ... v x_i) <= sum of consecutive distances along the
/// chain; holds in any carrier satisfying the weak join inequality.
template <MetrizedJoinCarrier C>
CheckReport check_chain_bound(const C& carrier,
                              std::span<const typename C::element> chain) {
  CheckReport report{"chain-bound"};
  if (chain.empty()) {
    return report;
  }
  typename C::element running = chain[0];
  Rational budget(0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) {
      budget += carrier.dist(chain[i - 1], chain[i]);
      running = carrier.join(running, chain[i]);
    }
    ++report.checked;
    Rational lhs = carrier.dist(chain[0], running);
    if (lhs > budget) {
      report.violations.push_back(
          {detail::describe_tuple<C, typename C::element>(carrier, chain.subspan(0, i + 1)),
           lhs, budget});
    }
  }
  return report;
}

/// Metric axioms on sampled triples: nonnegativity, d(x,x) = 0, identity of
/// indiscernibles, symmetry, and the triangle inequality, all exact.
template <MetrizedJoinCarrier C>
CheckReport check_metric_axioms(const C& carrier,
                                std::span<const std::array<typename C::element, 3>> triples) {
  CheckReport report{"metric-axioms"};
  for (const auto& [x, y, z] : triples) {
    ++report.checked;
    auto fail = [&](Rational lhs, Rational rhs) {
      report.violations.push_back(
          {detail::describe_tuple<C, typename C::element>(carrier, std::array{x, y, z}),
           std::move(lhs), std::move(rhs)});
    };
    Rational dxy = carrier.dist(x, y);
    Rational dyx = carrier.dist(y, x);
    Rational dyz = carrier.dist(y, z);
    Rational dxz = carrier.dist(x, z);
    if (dxy < 0) fail(dxy, Rational(0));
    if (carrier.dist(x, x) != 0) fail(carrier.dist(x, x), Rational(0));
    if (dxy != dyx) fail(dxy, dyx);
    if (dxz > dxy + dyz) fail(dxz, dxy + dyz);
    if ((dxy == 0) != (x == y)) fail(dxy, Rational(x == y ? 0 : 1));
  }
  return report;
}

/// A sequence together with proven bounds on consecutive distances and a
/// closed-form tail: dist(term(i), term(i+1)) <= gap_bound(i) and
/// tail(h) = sum of gap_bound(l) for l >= h. Terms materialize lazily and
/// are memoized; a certificate is confined to one thread at a time.
template <typename E>
class GapCertificate {
 public:
  using TermFn = std::function<E(std::size_t)>;
  using BoundFn = std::function<Rational(std::size_t)>;

  GapCertificate(TermFn term, BoundFn gap_bound, BoundFn tail)
      : term_fn_(std::move(term)), gap_fn_(std::move(gap_bound)),
        tail_fn_(std::move(tail)) {}

  const E& term(std::size_t i) const {
    while (memo_.size() <= i) {
      memo_.push_back(term_fn_(memo_.size()));
    }
    return memo_[i];
  }

  Rational gap_bound(std::size_t i) const { return gap_fn_(i); }
  Rational tail(std::size_t h) const { return tail_fn_(h); }

 private:
  TermFn term_fn_;
  BoundFn gap_fn_;
  BoundFn tail_fn_;
  mutable std::vector<E> memo_;
};

/// Verifies every materialized consecutive distance against its promised
/// bound, indices 0..up_to-1.
template <MetrizedJoinCarrier C>
CheckReport verify_gap_bounds(const C& carrier,
                              const GapCertificate<typename C::element>& cert,
                              std::size_t up_to) {
  CheckReport report{"gap-bound"};
  for (std::size_t i = 0; i + 1 <= up_to; ++i) {
    ++report.checked;
    Rational actual = carrier.dist(cert.term(i), cert.term(i + 1));
    Rational promised = cert.gap_bound(i);
    if (actual > promised) {
      report.violations.push_back(
          {nlohmann::json{{"index", i}}, actual, promised});
    }
  }
  return report;
}

template <typename E>
struct FastSubsequence {
  GapCertificate<E> certificate;
  /// Index into the source sequence of the i-th extracted term.
  std::function<std::size_t(std::size_t)> source_index;
};

/// Extracts a subsequence with dist(t_i, t_{i+1}) <= 2^-i from a Cauchy
/// sequence. `modulus(eps)` must return an index N such that all pairwise
/// distances beyond N are below eps; each materialized consecutive pair is
/// verified against its promised bound, and a pair that violates it throws
/// contract_breach. Resulting certificate: gap_bound(i) = 2^-i,
/// tail(h) = 2^(1-h).
template <MetrizedJoinCarrier C>
FastSubsequence<typename C::element> extract_fast_subsequence(
    const C& carrier, std::function<typename C::element(std::size_t)> seq,
    std::function<std::size_t(const Rational&)> modulus) {
  using E = typename C::element;
  struct State {
    C carrier;
    std::function<E(std::size_t)> seq;
    std::function<std::size_t(const Rational&)> modulus;
    std::vector<std::size_t> indices;
    std::vector<E> terms;
  };
  auto state = std::make_shared<State>(State{carrier, std::move(seq), std::move(modulus), {}, {}});

  auto materialize = [state](std::size_t i) {
    while (state->indices.size() <= i) {
      const std::size_t pos = state->indices.size();
      std::size_t candidate = state->modulus(pow2(-static_cast<long>(pos)));
      if (!state->indices.empty() && candidate <= state->indices.back()) {
        candidate = state->indices.back() + 1;
      }
      E term = state->seq(candidate);
      if (!state->terms.empty()) {
        Rational gap = state->carrier.dist(state->terms.back(), term);
        Rational promised = pow2(-static_cast<long>(pos - 1));
        if (gap > promised) {
          throw contract_breach(
              "extract_fast_subsequence: modulus promised gap <= " +
              latmet::to_string(promised) + " but materialized " +
              latmet::to_string(gap) + " between source indices " +
              std::to_string(state->indices.back()) + " and " +
              std::to_string(candidate));
        }
      }
      state->indices.push_back(candidate);
      state->terms.push_back(std::move(term));
    }
  };

  GapCertificate<E> cert(
      [state, materialize](std::size_t i) {
        materialize(i);
        return state->terms[i];
      },
      [](std::size_t i) { return pow2(-static_cast<long>(i)); },
      [](std::size_t h) { return pow2(1 - static_cast<long>(h)); });

  return FastSubsequence<E>{
      std::move(cert),
      [state, materialize](std::size_t i) {
        materialize(i);
        return state->indices[i];
      }};
}

}  // namespace latmet

#endif  // LATMET_LATTICE_HPP
