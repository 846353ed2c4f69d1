#include "latmet/serialization.hpp"

#include <stdexcept>

#include "latmet/counterexamples.hpp"
#include "latmet/lattice.hpp"

namespace latmet {

nlohmann::json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("rational: expected a \"p/q\" string");
  }
  return parse_rational(j.get<std::string>());
}

nlohmann::json to_json(const IntervalSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iv : set.intervals()) {
    out.push_back({to_string(iv.lo), to_string(iv.hi)});
  }
  return out;
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("interval set: expected an array of [lo, hi] pairs");
  }
  std::vector<Interval> raw;
  raw.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("interval set: each entry must be [lo, hi]");
    }
    raw.push_back(Interval{rational_from_json(pair[0]), rational_from_json(pair[1])});
  }
  return IntervalSet::normalized(std::move(raw));
}

nlohmann::json to_json(const StepFunction& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& piece : f.pieces()) {
    out.push_back({{"label", piece.label}, {"part", to_json(piece.part)}});
  }
  return out;
}

StepFunction step_function_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("step function: expected an array of pieces");
  }
  std::vector<StepFunction::Piece> pieces;
  pieces.reserve(j.size());
  for (const auto& entry : j) {
    pieces.push_back(StepFunction::Piece{entry.at("label").get<std::string>(),
                                         interval_set_from_json(entry.at("part"))});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

namespace {

nlohmann::json table_to_nested(const FiniteAlgebra& algebra,
                               const std::vector<std::uint32_t>& table,
                               std::size_t arity, std::size_t& cursor) {
  if (arity == 0) {
    return algebra.label(table[cursor++]);
  }
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < algebra.size(); ++i) {
    out.push_back(table_to_nested(algebra, table, arity - 1, cursor));
  }
  return out;
}

void nested_to_table(const nlohmann::json& node, std::size_t arity,
                     const std::map<std::string, std::uint32_t>& index,
                     std::size_t carrier_size, std::vector<std::uint32_t>& out) {
  if (arity == 0) {
    if (!node.is_string()) {
      throw std::invalid_argument("algebra: table leaf must be a label string");
    }
    auto it = index.find(node.get<std::string>());
    if (it == index.end()) {
      throw std::invalid_argument("algebra: table leaf '" + node.get<std::string>() +
                                  "' is not a carrier label");
    }
    out.push_back(it->second);
    return;
  }
  if (!node.is_array() || node.size() != carrier_size) {
    throw std::invalid_argument(
        "algebra: table nesting must match arity and carrier size");
  }
  for (const auto& child : node) {
    nested_to_table(child, arity - 1, index, carrier_size, out);
  }
}

}  // namespace

nlohmann::json to_json(const FiniteAlgebra& algebra) {
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [name, op] : algebra.operations()) {
    std::size_t cursor = 0;
    ops[name] = {{"arity", op.arity},
                 {"table", table_to_nested(algebra, op.table, op.arity, cursor)}};
  }
  return {{"carrier", algebra.carrier()}, {"ops", ops}};
}

FiniteAlgebra finite_algebra_from_json(const nlohmann::json& j) {
  std::vector<std::string> carrier = j.at("carrier").get<std::vector<std::string>>();
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < carrier.size(); ++i) {
    index.emplace(carrier[i], i);
  }
  std::map<std::string, FiniteAlgebra::Operation> operations;
  for (const auto& [name, body] : j.at("ops").items()) {
    FiniteAlgebra::Operation op;
    op.arity = body.at("arity").get<std::size_t>();
    nested_to_table(body.at("table"), op.arity, index, carrier.size(), op.table);
    operations.emplace(name, std::move(op));
  }
  return FiniteAlgebra(std::move(carrier), std::move(operations));
}

nlohmann::json to_json(const Violation& v) {
  return {{"inputs", v.inputs}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}};
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back(to_json(v));
  }
  return {{"name", report.name},
          {"checked", report.checked},
          {"ok", report.ok()},
          {"violations", violations}};
}

nlohmann::json to_json(const FiniteSubset& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : s.elements()) {
    out.push_back(to_string(p));
  }
  return out;
}

nlohmann::json to_json(const DvWitness& w) {
  return {{"x", to_json(w.x)}, {"y", to_json(w.y)}, {"z", to_json(w.z)},
          {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

}  // namespace latmet
