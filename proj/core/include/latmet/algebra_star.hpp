#ifndef LATMET_ALGEBRA_STAR_HPP
#define LATMET_ALGEBRA_STAR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latmet/interval_set.hpp"
#include "latmet/measure_algebra.hpp"

namespace latmet {

/// A finite carrier with finitely many table-driven operations of finite
/// arity. Labels are opaque strings compared by equality; no order on the
/// carrier is assumed. Instances are read-only shared data.
class FiniteAlgebra {
 public:
  struct Operation {
    std::size_t arity;
    // Row-major table of label indices, size carrier^arity; the first
    // argument is the most significant digit.
    std::vector<std::uint32_t> table;
  };

  FiniteAlgebra(std::vector<std::string> carrier,
                std::map<std::string, Operation> operations);

  /// The ring Z/nZ with operations "add", "mul", "neg" over labels
  /// "0".."n-1".
  static FiniteAlgebra zmod(std::uint32_t modulus);

  const std::vector<std::string>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::map<std::string, Operation>& operations() const { return operations_; }

  bool has_operation(const std::string& name) const;
  std::size_t arity(const std::string& name) const;
  std::uint32_t apply(const std::string& name, std::span<const std::uint32_t> args) const;

  std::uint32_t label_index(const std::string& label) const;
  const std::string& label(std::uint32_t index) const { return carrier_.at(index); }

 private:
  std::vector<std::string> carrier_;
  std::map<std::string, Operation> operations_;
  std::map<std::string, std::uint32_t> index_;
};

/// A function [0,1) -> labels constant on each piece of a finite interval
/// partition. Pieces are pairwise disjoint, cover [0,1) exactly, carry
/// pairwise distinct labels, and are never empty; they are stored sorted by
/// label so equal functions are structurally equal.
class StepFunction {
 public:
  struct Piece {
    std::string label;
    IntervalSet part;
    bool operator==(const Piece&) const = default;
  };

  /// Coalesces pieces with equal labels (by union), drops empty parts, then
  /// validates the partition invariants. Throws partition_error when parts
  /// overlap or fail to cover [0,1).
  static StepFunction from_pieces(std::vector<Piece> pieces);

  static StepFunction constant(std::string label);

  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Part carrying `label`; the empty set when the label is absent.
  const IntervalSet& part(const std::string& label) const;

  std::vector<std::string> labels() const;

  /// Label at a point; t must lie in [0, 1).
  const std::string& value_at(const Rational& t) const;

  bool operator==(const StepFunction&) const = default;

 private:
  std::vector<Piece> pieces_;
};

/// Measure of the disagreement set, computed over the common refinement of
/// the two partitions. Always equal to half the sum of per-label distances;
/// both routes are evaluated and cross-checked on every call.
Rational d_prime(const StepFunction& f, const StepFunction& g);

/// The two algebraic routes to d_prime, exposed separately.
Rational d_prime_by_refinement(const StepFunction& f, const StepFunction& g);
Rational d_prime_by_component_sum(const StepFunction& f, const StepFunction& g);

/// Pointwise lift of an operation: the part of the result carrying label x
/// is the union, over argument label tuples mapped to x, of the intersections
/// of the argument cells. Throws std::invalid_argument on arity mismatch.
StepFunction lift_op(const FiniteAlgebra& algebra, const std::string& op,
                     std::span<const StepFunction> args);

/// Disjointifies a family of sets inside [0,1): keeps T_i = S_i minus all
/// earlier S_j for i > 0, and lets T_0 absorb whatever is left of [0,1).
/// The output always partitions [0,1) exactly; when the input is already
/// pairwise disjoint with total measure 1, T_i == S_i for every i.
std::vector<IntervalSet> normalize_partition(std::span<const IntervalSet> sets);

/// Builds the step function whose part for each label is the normalized
/// partition member. Requires the sets to be pairwise disjoint with total
/// measure 1; otherwise throws partition_error naming the overlapping pair
/// or the exact measure deficit.
StepFunction assemble_limit(const std::vector<std::pair<std::string, IntervalSet>>& per_label);

/// Indicator of S: label "1" on S, "0" elsewhere. S must lie inside [0,1).
StepFunction characteristic_step(const IntervalSet& s);

/// The bisection of prime_bisection_step replayed with characteristic step
/// functions over a unital ring: halves measure(U) exactly and leaves the
/// indicator of the complement of the result at d-prime distance
/// measure(U)/2 from the constant 1. The ring must carry "mul" and the
/// labels "0" and "1". Requires measure(u) > 0.
IntervalSet astar_bisection_step(const IntervalSet& u, const FiniteAlgebra& ring,
                                 const ChooserOracle& oracle);

}  // namespace latmet

#endif  // LATMET_ALGEBRA_STAR_HPP
