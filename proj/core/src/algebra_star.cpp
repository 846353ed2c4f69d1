#include "latmet/algebra_star.hpp"

#include <algorithm>
#include <stdexcept>

#include "latmet/errors.hpp"

namespace latmet {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> carrier,
                             std::map<std::string, Operation> operations)
    : carrier_(std::move(carrier)), operations_(std::move(operations)) {
  if (carrier_.empty()) {
    throw std::invalid_argument("algebra: carrier must be nonempty");
  }
  for (std::uint32_t i = 0; i < carrier_.size(); ++i) {
    if (!index_.emplace(carrier_[i], i).second) {
      throw std::invalid_argument("algebra: duplicate label '" + carrier_[i] + "'");
    }
  }
  for (const auto& [name, op] : operations_) {
    if (op.table.size() != ipow(carrier_.size(), op.arity)) {
      throw std::invalid_argument("algebra: operation '" + name +
                                  "' table size does not match arity");
    }
    for (auto entry : op.table) {
      if (entry >= carrier_.size()) {
        throw std::invalid_argument("algebra: operation '" + name +
                                    "' table entry out of range");
      }
    }
  }
}

FiniteAlgebra FiniteAlgebra::zmod(std::uint32_t modulus) {
  if (modulus == 0) {
    throw std::invalid_argument("zmod: modulus must be positive");
  }
  std::vector<std::string> carrier;
  carrier.reserve(modulus);
  for (std::uint32_t i = 0; i < modulus; ++i) {
    carrier.push_back(std::to_string(i));
  }
  Operation add{2, {}};
  Operation mul{2, {}};
  Operation neg{1, {}};
  add.table.reserve(std::size_t{modulus} * modulus);
  mul.table.reserve(std::size_t{modulus} * modulus);
  for (std::uint32_t a = 0; a < modulus; ++a) {
    neg.table.push_back((modulus - a) % modulus);
    for (std::uint32_t b = 0; b < modulus; ++b) {
      add.table.push_back((a + b) % modulus);
      mul.table.push_back(static_cast<std::uint32_t>(
          (std::uint64_t{a} * b) % modulus));
    }
  }
  return FiniteAlgebra(std::move(carrier),
                       {{"add", std::move(add)},
                        {"mul", std::move(mul)},
                        {"neg", std::move(neg)}});
}

bool FiniteAlgebra::has_operation(const std::string& name) const {
  return operations_.count(name) != 0;
}

std::size_t FiniteAlgebra::arity(const std::string& name) const {
  auto it = operations_.find(name);
  if (it == operations_.end()) {
    throw std::invalid_argument("algebra: unknown operation '" + name + "'");
  }
  return it->second.arity;
}

std::uint32_t FiniteAlgebra::apply(const std::string& name,
                                   std::span<const std::uint32_t> args) const {
  auto it = operations_.find(name);
  if (it == operations_.end()) {
    throw std::invalid_argument("algebra: unknown operation '" + name + "'");
  }
  const Operation& op = it->second;
  if (args.size() != op.arity) {
    throw std::invalid_argument("algebra: operation '" + name + "' expects " +
                                std::to_string(op.arity) + " arguments, got " +
                                std::to_string(args.size()));
  }
  std::size_t flat = 0;
  for (auto a : args) {
    if (a >= carrier_.size()) {
      throw std::invalid_argument("algebra: argument index out of range");
    }
    flat = flat * carrier_.size() + a;
  }
  return op.table[flat];
}

std::uint32_t FiniteAlgebra::label_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw std::invalid_argument("algebra: unknown label '" + label + "'");
  }
  return it->second;
}

StepFunction StepFunction::from_pieces(std::vector<Piece> pieces) {
  std::map<std::string, IntervalSet> by_label;
  for (auto& p : pieces) {
    if (p.part.empty()) {
      continue;
    }
    auto it = by_label.find(p.label);
    if (it == by_label.end()) {
      by_label.emplace(std::move(p.label), std::move(p.part));
    } else {
      it->second = set_union(it->second, p.part);
    }
  }
  StepFunction f;
  Rational total(0);
  IntervalSet seen;
  for (auto& [label, part] : by_label) {
    IntervalSet overlap = set_intersect(seen, part);
    if (!overlap.empty()) {
      throw partition_error("step function: parts overlap with measure " +
                            latmet::to_string(overlap.measure()) +
                            " at label '" + label + "'");
    }
    if (part.upper_bound() > 1) {
      throw partition_error("step function: part for label '" + label +
                            "' extends beyond [0, 1)");
    }
    seen = set_union(seen, part);
    total += part.measure();
    f.pieces_.push_back(Piece{label, std::move(part)});
  }
  if (seen != IntervalSet::unit()) {
    throw partition_error("step function: parts cover measure " +
                          latmet::to_string(total) + " of [0, 1), deficit " +
                          latmet::to_string(Rational(1) - total));
  }
  return f;
}

StepFunction StepFunction::constant(std::string label) {
  return from_pieces({Piece{std::move(label), IntervalSet::unit()}});
}

const IntervalSet& StepFunction::part(const std::string& label) const {
  static const IntervalSet empty;
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), label,
      [](const Piece& p, const std::string& l) { return p.label < l; });
  return (it != pieces_.end() && it->label == label) ? it->part : empty;
}

std::vector<std::string> StepFunction::labels() const {
  std::vector<std::string> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    out.push_back(p.label);
  }
  return out;
}

const std::string& StepFunction::value_at(const Rational& t) const {
  if (t < 0 || t >= 1) {
    throw std::invalid_argument("step function: point outside [0, 1)");
  }
  for (const auto& p : pieces_) {
    if (p.part.contains(t)) {
      return p.label;
    }
  }
  throw std::logic_error("step function: partition does not cover point");
}

Rational d_prime_by_refinement(const StepFunction& f, const StepFunction& g) {
  Rational total(0);
  for (const auto& pf : f.pieces()) {
    for (const auto& pg : g.pieces()) {
      if (pf.label != pg.label) {
        total += set_intersect(pf.part, pg.part).measure();
      }
    }
  }
  return total;
}

Rational d_prime_by_component_sum(const StepFunction& f, const StepFunction& g) {
  std::vector<std::string> all = f.labels();
  for (const auto& l : g.labels()) {
    all.push_back(l);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Rational sum(0);
  for (const auto& label : all) {
    sum += metric_d(f.part(label), g.part(label));
  }
  return sum / 2;
}

Rational d_prime(const StepFunction& f, const StepFunction& g) {
  Rational refinement = d_prime_by_refinement(f, g);
  Rational half_sum = d_prime_by_component_sum(f, g);
  if (refinement != half_sum) {
    throw std::logic_error("d_prime: refinement and component-sum routes disagree: " +
                           latmet::to_string(refinement) + " vs " +
                           latmet::to_string(half_sum));
  }
  return refinement;
}

namespace {

void lift_cells(const FiniteAlgebra& algebra, const std::string& op,
                std::span<const StepFunction> args, std::size_t depth,
                std::vector<std::uint32_t>& tuple, const IntervalSet& cell,
                std::map<std::string, IntervalSet>& out) {
  if (cell.empty()) {
    return;
  }
  if (depth == args.size()) {
    const std::string& label = algebra.label(algebra.apply(op, tuple));
    auto [it, inserted] = out.emplace(label, cell);
    if (!inserted) {
      it->second = set_union(it->second, cell);
    }
    return;
  }
  for (const auto& piece : args[depth].pieces()) {
    tuple.push_back(algebra.label_index(piece.label));
    lift_cells(algebra, op, args, depth + 1, tuple,
               depth == 0 ? piece.part : set_intersect(cell, piece.part), out);
    tuple.pop_back();
  }
}

}  // namespace

StepFunction lift_op(const FiniteAlgebra& algebra, const std::string& op,
                     std::span<const StepFunction> args) {
  if (args.size() != algebra.arity(op)) {
    throw std::invalid_argument("lift_op: operation '" + op + "' expects " +
                                std::to_string(algebra.arity(op)) +
                                " arguments, got " + std::to_string(args.size()));
  }
  if (args.empty()) {
    return StepFunction::constant(algebra.label(algebra.apply(op, {})));
  }
  std::map<std::string, IntervalSet> cells;
  std::vector<std::uint32_t> tuple;
  lift_cells(algebra, op, args, 0, tuple, IntervalSet::unit(), cells);
  std::vector<StepFunction::Piece> pieces;
  pieces.reserve(cells.size());
  for (auto& [label, part] : cells) {
    pieces.push_back(StepFunction::Piece{label, std::move(part)});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

std::vector<IntervalSet> normalize_partition(std::span<const IntervalSet> sets) {
  for (const auto& s : sets) {
    if (s.upper_bound() > 1) {
      throw std::invalid_argument("normalize_partition: set extends beyond [0, 1)");
    }
  }
  std::vector<IntervalSet> out(sets.empty() ? 1 : sets.size());
  IntervalSet earlier = sets.empty() ? IntervalSet() : sets[0];
  IntervalSet tail_union;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    out[i] = set_difference(sets[i], earlier);
    earlier = set_union(earlier, sets[i]);
    tail_union = set_union(tail_union, out[i]);
  }
  out[0] = set_difference(IntervalSet::unit(), tail_union);
  return out;
}

StepFunction assemble_limit(
    const std::vector<std::pair<std::string, IntervalSet>>& per_label) {
  Rational total(0);
  for (std::size_t i = 0; i < per_label.size(); ++i) {
    total += per_label[i].second.measure();
    for (std::size_t j = i + 1; j < per_label.size(); ++j) {
      IntervalSet overlap = set_intersect(per_label[i].second, per_label[j].second);
      if (!overlap.empty()) {
        throw partition_error("assemble_limit: parts for labels '" +
                              per_label[i].first + "' and '" + per_label[j].first +
                              "' overlap with measure " +
                              latmet::to_string(overlap.measure()));
      }
    }
  }
  if (total != 1) {
    throw partition_error("assemble_limit: measure deficit " +
                          latmet::to_string(Rational(1) - total));
  }
  std::vector<IntervalSet> sets;
  sets.reserve(per_label.size());
  for (const auto& [label, part] : per_label) {
    sets.push_back(part);
  }
  std::vector<IntervalSet> normalized = normalize_partition(sets);
  std::vector<StepFunction::Piece> pieces;
  for (std::size_t i = 0; i < per_label.size(); ++i) {
    pieces.push_back(StepFunction::Piece{per_label[i].first, normalized[i]});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

StepFunction characteristic_step(const IntervalSet& s) {
  if (s.upper_bound() > 1) {
    throw std::invalid_argument("characteristic_step: set extends beyond [0, 1)");
  }
  return StepFunction::from_pieces(
      {StepFunction::Piece{"1", s},
       StepFunction::Piece{"0", complement(s, Ambient::unit_interval())}});
}

IntervalSet astar_bisection_step(const IntervalSet& u, const FiniteAlgebra& ring,
                                 const ChooserOracle& oracle) {
  if (u.measure() == 0) {
    throw std::invalid_argument("astar_bisection_step: set has measure zero");
  }
  if (!ring.has_operation("mul")) {
    throw std::invalid_argument("astar_bisection_step: ring lacks 'mul'");
  }
  ring.label_index("0");
  ring.label_index("1");

  auto [left, right] = split_at(u, find_halving_point(u));
  const Ambient unit = Ambient::unit_interval();

  // Indicators of complements multiply to the indicator of the complement of
  // the union; replay that identity through the lifted ring product.
  const StepFunction product = lift_op(
      ring, "mul",
      std::vector<StepFunction>{characteristic_step(complement(left, unit)),
                                characteristic_step(complement(right, unit))});
  if (product != characteristic_step(complement(u, unit))) {
    throw std::logic_error("astar_bisection_step: indicator product identity failed");
  }
  return oracle(left, right) == Side::left ? left : right;
}

}  // namespace latmet
