#ifndef LATMET_SERIALIZATION_HPP
#define LATMET_SERIALIZATION_HPP

#include <nlohmann/json.hpp>

#include "latmet/algebra_star.hpp"
#include "latmet/interval_set.hpp"
#include "latmet/rational.hpp"

namespace latmet {

// Rationals travel as the string "p/q" ("/q" omitted when q = 1); interval
// sets as arrays of [lo, hi] string pairs. Round trips are bit-exact.

nlohmann::json to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const nlohmann::json& j);

/// [{"label": ..., "part": [...]}, ...] sorted by label.
nlohmann::json to_json(const StepFunction& f);
StepFunction step_function_from_json(const nlohmann::json& j);

/// {"carrier": [...], "ops": {name: {"arity": n, "table": nested arrays}}}.
/// The table nests to depth `arity` with label strings at the leaves (a bare
/// label for arity 0).
nlohmann::json to_json(const FiniteAlgebra& algebra);
FiniteAlgebra finite_algebra_from_json(const nlohmann::json& j);

}  // namespace latmet

#endif  // LATMET_SERIALIZATION_HPP
