#ifndef LATMET_COMPLETION_HPP
#define LATMET_COMPLETION_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmet/errors.hpp"
#include "latmet/lattice.hpp"

namespace latmet {

/// Injected resolvers for the two monotone-convergence hypotheses: the
/// increasing sequences of running joins and the decreasing sequence of row
/// limits. These are hypotheses about the carrier, not algorithms, so they
/// arrive as oracles; an oracle may decline with nullopt. Each function gets
/// an accessor for the first `count` terms of the sequence.
template <typename E>
struct MonotoneLimitOracle {
  using SeqFn = std::function<E(std::size_t)>;
  std::function<std::optional<E>(const SeqFn&, std::size_t count)> increasing_limit;
  std::function<std::optional<E>(const SeqFn&, std::size_t count)> decreasing_limit;
};

/// Resolves a monotone sequence once its last `window` materialized terms are
/// all equal; declines otherwise.
template <typename E>
MonotoneLimitOracle<E> stabilization_oracle(std::size_t window) {
  auto detect = [window](const typename MonotoneLimitOracle<E>::SeqFn& seq,
                         std::size_t count) -> std::optional<E> {
    if (count == 0) {
      return std::nullopt;
    }
    const std::size_t effective = std::min(window, count);
    E last = seq(count - 1);
    for (std::size_t i = count - effective; i + 1 < count; ++i) {
      if (!(seq(i) == last)) {
        return std::nullopt;
      }
    }
    return last;
  };
  return MonotoneLimitOracle<E>{detect, detect};
}

/// The result of a certified approximate limit: every term x_m with
/// start_index <= m <= end_index satisfies dist(x_m, value) <= bound.
template <typename E>
struct ApproxLimit {
  E value;
  std::size_t start_index;  // h
  std::size_t end_index;    // j
  Rational bound;           // 2 * tail(h)
};

/// Transcript of one pipeline run over a gap certificate: the materialized
/// terms x_0..x_H, every running join x_{h,j}, the row limits x_{h,inf}, the
/// final double limit, and the closed-form tails backing the error bounds.
template <typename E>
struct CompletionRun {
  std::size_t horizon = 0;
  std::vector<E> terms;
  std::vector<Rational> gap_bounds;   // promised, index 0..H-1
  std::vector<Rational> actual_gaps;  // dist(x_i, x_{i+1})
  std::vector<Rational> tails;        // tail(0)..tail(H)
  std::vector<std::vector<E>> joins;  // joins[h][j-h] = x_{h,j}
  std::vector<std::optional<E>> row_limits;
  std::optional<E> final_limit;

  const E& join_at(std::size_t h, std::size_t j) const { return joins.at(h).at(j - h); }
  Rational error_bound(std::size_t h) const { return 2 * tails.at(h); }
};

struct VerifyReport {
  std::vector<CheckReport> families;

  bool ok() const {
    for (const auto& f : families) {
      if (!f.ok()) {
        return false;
      }
    }
    return true;
  }
};

/// Runs the summable-gap completion procedure over a metrized join carrier.
/// Requires the strong Lipschitz law d(x v y, x v z) <= d(y, z); carriers
/// registered weak-only are refused, because the running-join window bounds
/// are exactly what the weak law fails to deliver.
template <MetrizedJoinCarrier C>
class CompletionEngine {
 public:
  using E = typename C::element;

  CompletionEngine(C carrier, GapCertificate<E> certificate, std::size_t horizon = 64)
      : carrier_(std::move(carrier)), cert_(std::move(certificate)), horizon_(horizon) {
    joins_.resize(horizon_ + 1);
  }

  const C& carrier() const { return carrier_; }
  const GapCertificate<E>& certificate() const { return cert_; }
  std::size_t horizon() const { return horizon_; }

  /// x_{h,j} = x_h v x_{h+1} v ... v x_j, memoized. Requires h <= j <= horizon.
  const E& running_join(std::size_t h, std::size_t j) {
    if (h > j) {
      throw std::invalid_argument("running_join: requires h <= j");
    }
    if (j > horizon_) {
      throw std::invalid_argument("running_join: index beyond horizon");
    }
    auto& row = joins_[h];
    if (row.empty()) {
      row.push_back(cert_.term(h));
    }
    while (row.size() <= j - h) {
      row.push_back(carrier_.join(row.back(), cert_.term(h + row.size())));
    }
    return row[j - h];
  }

  /// Certified approximation to the limit: picks the least h with
  /// 2*tail(h) <= eps and returns y = x_{h,horizon} together with the bound;
  /// dist(x_m, y) <= bound is verified exactly for every h <= m <= horizon.
  /// No limit object and no completeness of the carrier is needed.
  ApproxLimit<E> approx_limit(const Rational& eps) {
    if (eps <= 0) {
      throw std::invalid_argument("approx_limit: eps must be positive");
    }
    require_lipschitz("approx_limit");
    std::size_t h = 0;
    while (h <= horizon_ && 2 * cert_.tail(h) > eps) {
      ++h;
    }
    if (h > horizon_) {
      throw horizon_exceeded("approx_limit: tail never reached eps/2 = " +
                             latmet::to_string(eps / 2) + " within horizon " +
                             std::to_string(horizon_));
    }
    const std::size_t j = horizon_;
    E value = running_join(h, j);
    Rational bound = 2 * cert_.tail(h);
    for (std::size_t m = h; m <= j; ++m) {
      Rational d = carrier_.dist(cert_.term(m), value);
      if (d > bound) {
        throw contract_breach("approx_limit: certified bound " +
                              latmet::to_string(bound) + " violated at index " +
                              std::to_string(m) + " with distance " +
                              latmet::to_string(d));
      }
    }
    return ApproxLimit<E>{std::move(value), h, j, std::move(bound)};
  }

  /// The full double-limit pipeline: materializes terms and running joins up
  /// to the horizon, resolves each increasing row j -> x_{h,j} through the
  /// oracle, then the decreasing sequence h -> x_{h,inf}. If any oracle call
  /// declines, the run completes with final_limit unset and the approx data
  /// still valid. Throws contract_breach when a materialized gap exceeds its
  /// promised bound.
  CompletionRun<E> run_pipeline(const MonotoneLimitOracle<E>& oracle) {
    require_lipschitz("run_pipeline");
    CompletionRun<E> run;
    run.horizon = horizon_;
    for (std::size_t i = 0; i <= horizon_; ++i) {
      run.terms.push_back(cert_.term(i));
      run.tails.push_back(cert_.tail(i));
    }
    for (std::size_t i = 0; i < horizon_; ++i) {
      run.gap_bounds.push_back(cert_.gap_bound(i));
      run.actual_gaps.push_back(carrier_.dist(run.terms[i], run.terms[i + 1]));
      if (run.actual_gaps.back() > run.gap_bounds.back()) {
        throw contract_breach("run_pipeline: gap at index " + std::to_string(i) +
                              " is " + latmet::to_string(run.actual_gaps.back()) +
                              ", certificate promised " +
                              latmet::to_string(run.gap_bounds.back()));
      }
    }
    bool all_rows = true;
    for (std::size_t h = 0; h <= horizon_; ++h) {
      running_join(h, horizon_);
      run.joins.push_back(joins_[h]);
      auto row = [this, h](std::size_t offset) { return running_join(h, h + offset); };
      run.row_limits.push_back(oracle.increasing_limit(row, horizon_ - h + 1));
      all_rows = all_rows && run.row_limits.back().has_value();
    }
    if (all_rows) {
      auto rows = [&run](std::size_t h) { return *run.row_limits[h]; };
      run.final_limit = oracle.decreasing_limit(rows, horizon_ + 1);
    }
    return run;
  }

 private:
  void require_lipschitz(const char* op) const {
    if (!C::join_is_lipschitz) {
      throw std::invalid_argument(std::string(op) +
                                  ": carrier is registered weak-only; the "
                                  "running-join bounds need the strong "
                                  "Lipschitz law");
    }
  }

  C carrier_;
  GapCertificate<E> cert_;
  std::size_t horizon_;
  std::vector<std::vector<E>> joins_;
};

/// Re-derives every inequality the pipeline relies on, exactly, at all
/// materialized indices:
///   gap-bound        dist(x_i, x_{i+1}) <= gap_bound(i)
///   tail-telescope   tail(h) - tail(h+1) == gap_bound(h)
///   join-monotone    x_{h,j} <= x_{h,j+1} in the derived order
///   join-step        d(x_{h,j}, x_{h,j+1}) <= d(x_j, x_{j+1})
///   join-window      d(x_{h,j}, x_{h,k}) <= sum of gaps in [j, k)
///   row-limit-tail   d(x_{h,j}, x_{h,inf}) <= partial sum + tail(horizon)
///   row-monotone     x_{h,inf} >= x_{i,inf} for h <= i
///   row-window       d(x_{h,inf}, x_{i,inf}) <= sum of gaps in [h, i)
///   final-tail       d(x_{h,inf}, x_{inf,inf}) <= tail(h)
///   final-bound      d(x_h, x_{inf,inf}) <= 2 tail(h)
template <MetrizedJoinCarrier C>
VerifyReport verify_run(const C& carrier, const CompletionRun<typename C::element>& run) {
  const std::size_t H = run.horizon;
  VerifyReport report;

  std::vector<Rational> prefix(1, Rational(0));  // prefix[i] = sum of actual gaps < i
  for (const auto& g : run.actual_gaps) {
    prefix.push_back(prefix.back() + g);
  }
  auto gap_sum = [&prefix](std::size_t from, std::size_t to) {
    return prefix[to] - prefix[from];
  };

  CheckReport gap{"gap-bound"};
  for (std::size_t i = 0; i < H; ++i) {
    ++gap.checked;
    if (run.actual_gaps[i] > run.gap_bounds[i]) {
      gap.violations.push_back(
          {nlohmann::json{{"i", i}}, run.actual_gaps[i], run.gap_bounds[i]});
    }
  }
  report.families.push_back(std::move(gap));

  CheckReport tails{"tail-telescope"};
  for (std::size_t h = 0; h < H; ++h) {
    ++tails.checked;
    Rational step = run.tails[h] - run.tails[h + 1];
    if (step != run.gap_bounds[h]) {
      tails.violations.push_back({nlohmann::json{{"h", h}}, step, run.gap_bounds[h]});
    }
  }
  report.families.push_back(std::move(tails));

  CheckReport monotone{"join-monotone"};
  CheckReport step{"join-step"};
  for (std::size_t h = 0; h <= H; ++h) {
    for (std::size_t j = h; j < H; ++j) {
      ++monotone.checked;
      const auto& a = run.join_at(h, j);
      const auto& b = run.join_at(h, j + 1);
      if (!(carrier.join(a, b) == b)) {
        monotone.violations.push_back(
            {nlohmann::json{{"h", h}, {"j", j}}, Rational(1), Rational(0)});
      }
      ++step.checked;
      Rational lhs = carrier.dist(a, b);
      if (lhs > run.actual_gaps[j]) {
        step.violations.push_back(
            {nlohmann::json{{"h", h}, {"j", j}}, lhs, run.actual_gaps[j]});
      }
    }
  }
  report.families.push_back(std::move(monotone));
  report.families.push_back(std::move(step));

  CheckReport window{"join-window"};
  for (std::size_t h = 0; h <= H; ++h) {
    for (std::size_t j = h; j <= H; ++j) {
      for (std::size_t k = j; k <= H; ++k) {
        ++window.checked;
        Rational lhs = carrier.dist(run.join_at(h, j), run.join_at(h, k));
        Rational rhs = gap_sum(j, k);
        if (lhs > rhs) {
          window.violations.push_back(
              {nlohmann::json{{"h", h}, {"j", j}, {"k", k}}, lhs, rhs});
        }
      }
    }
  }
  report.families.push_back(std::move(window));

  CheckReport row_tail{"row-limit-tail"};
  CheckReport row_monotone{"row-monotone"};
  CheckReport row_window{"row-window"};
  for (std::size_t h = 0; h <= H; ++h) {
    if (!run.row_limits[h]) {
      continue;
    }
    for (std::size_t j = h; j <= H; ++j) {
      ++row_tail.checked;
      Rational lhs = carrier.dist(run.join_at(h, j), *run.row_limits[h]);
      Rational rhs = gap_sum(j, H) + run.tails[H];
      if (lhs > rhs) {
        row_tail.violations.push_back(
            {nlohmann::json{{"h", h}, {"j", j}}, lhs, rhs});
      }
    }
    for (std::size_t i = h; i <= H; ++i) {
      if (!run.row_limits[i]) {
        continue;
      }
      ++row_monotone.checked;
      if (!(carrier.join(*run.row_limits[i], *run.row_limits[h]) == *run.row_limits[h])) {
        row_monotone.violations.push_back(
            {nlohmann::json{{"h", h}, {"i", i}}, Rational(1), Rational(0)});
      }
      ++row_window.checked;
      Rational lhs = carrier.dist(*run.row_limits[h], *run.row_limits[i]);
      Rational rhs = gap_sum(h, i);
      if (lhs > rhs) {
        row_window.violations.push_back(
            {nlohmann::json{{"h", h}, {"i", i}}, lhs, rhs});
      }
    }
  }
  report.families.push_back(std::move(row_tail));
  report.families.push_back(std::move(row_monotone));
  report.families.push_back(std::move(row_window));

  CheckReport final_tail{"final-tail"};
  CheckReport final_bound{"final-bound"};
  if (run.final_limit) {
    for (std::size_t h = 0; h <= H; ++h) {
      if (run.row_limits[h]) {
        ++final_tail.checked;
        Rational lhs = carrier.dist(*run.row_limits[h], *run.final_limit);
        if (lhs > run.tails[h]) {
          final_tail.violations.push_back(
              {nlohmann::json{{"h", h}}, lhs, run.tails[h]});
        }
      }
      ++final_bound.checked;
      Rational lhs = carrier.dist(run.terms[h], *run.final_limit);
      Rational rhs = run.error_bound(h);
      if (lhs > rhs) {
        final_bound.violations.push_back({nlohmann::json{{"h", h}}, lhs, rhs});
      }
    }
  }
  report.families.push_back(std::move(final_tail));
  report.families.push_back(std::move(final_bound));
  return report;
}

/// JSON transcript of a run plus its verification: per inequality family the
/// number of instances checked and the worst (largest lhs - rhs) instance.
template <MetrizedJoinCarrier C>
nlohmann::json run_transcript(const C& carrier,
                              const CompletionRun<typename C::element>& run,
                              const VerifyReport& verification) {
  nlohmann::json joins = nlohmann::json::array();
  nlohmann::json indices = nlohmann::json::array();
  nlohmann::json gap_bounds = nlohmann::json::array();
  nlohmann::json row_limits = nlohmann::json::array();
  for (std::size_t h = 0; h <= run.horizon; ++h) {
    indices.push_back(h);
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = h; j <= run.horizon; ++j) {
      row.push_back(carrier.describe(run.join_at(h, j)));
    }
    joins.push_back(std::move(row));
    row_limits.push_back(run.row_limits[h] ? carrier.describe(*run.row_limits[h])
                                           : nlohmann::json());
  }
  for (const auto& g : run.gap_bounds) {
    gap_bounds.push_back(to_json(g));
  }
  nlohmann::json checked = nlohmann::json::array();
  for (const auto& family : verification.families) {
    nlohmann::json entry = {{"name", family.name},
                            {"checked", family.checked},
                            {"ok", family.ok()}};
    if (!family.violations.empty()) {
      const Violation* worst = &family.violations.front();
      for (const auto& v : family.violations) {
        if (v.lhs - v.rhs > worst->lhs - worst->rhs) {
          worst = &v;
        }
      }
      entry["lhs"] = to_json(worst->lhs);
      entry["rhs"] = to_json(worst->rhs);
      entry["inputs"] = worst->inputs;
    }
    checked.push_back(std::move(entry));
  }
  return {{"indices", indices},
          {"gapBounds", gap_bounds},
          {"joins", joins},
          {"rowLimits", row_limits},
          {"finalLimit", run.final_limit ? carrier.describe(*run.final_limit)
                                         : nlohmann::json()},
          {"checkedInequalities", checked}};
}

}  // namespace latmet

#endif  // LATMET_COMPLETION_HPP
