#include "latmet/serialization.hpp"

#include <stdexcept>

#include "doctest.h"
#include "latmet/counterexamples.hpp"
#include "latmet/lattice.hpp"
#include "latmet/sampling.hpp"

using namespace latmet;

TEST_CASE("rationals as p/q strings") {
  CHECK(to_json(Rational(1, 3)) == nlohmann::json("1/3"));
  CHECK(to_json(Rational(2)) == nlohmann::json("2"));
  CHECK(rational_from_json("7/2") == Rational(7, 2));
  CHECK_THROWS_AS(rational_from_json(nlohmann::json(3)), std::invalid_argument);
}

TEST_CASE("interval sets round trip bit-exact") {
  Sampler sampler(71);
  for (int i = 0; i < 200; ++i) {
    IntervalSet a = sampler.interval_set(5, 97);
    nlohmann::json j = to_json(a);
    CHECK(interval_set_from_json(j) == a);
    CHECK(to_json(interval_set_from_json(j)) == j);
  }
  CHECK(to_json(IntervalSet()) == nlohmann::json::array());
  CHECK_THROWS_AS(interval_set_from_json(nlohmann::json{{"not", "a list"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(interval_set_from_json(nlohmann::json::array({{"1/2"}})),
                  std::invalid_argument);
}

TEST_CASE("step functions round trip") {
  FiniteAlgebra z6 = FiniteAlgebra::zmod(6);
  Sampler sampler(73);
  for (int i = 0; i < 100; ++i) {
    StepFunction f = sampler.step_function(z6);
    CHECK(step_function_from_json(to_json(f)) == f);
  }
}

TEST_CASE("algebras load from JSON descriptions") {
  nlohmann::json description = nlohmann::json::parse(R"({
    "carrier": ["0", "1"],
    "ops": {
      "add": {"arity": 2, "table": [["0", "1"], ["1", "0"]]},
      "mul": {"arity": 2, "table": [["0", "0"], ["0", "1"]]},
      "one": {"arity": 0, "table": "1"}
    }
  })");
  FiniteAlgebra loaded = finite_algebra_from_json(description);
  CHECK(loaded.size() == 2);
  CHECK(loaded.arity("one") == 0);
  CHECK(loaded.apply("one", {}) == 1);
  std::uint32_t args[] = {1, 1};
  CHECK(loaded.apply("add", args) == 0);
  CHECK(loaded.apply("mul", args) == 1);

  // zmod tables survive write/read.
  FiniteAlgebra z6 = FiniteAlgebra::zmod(6);
  FiniteAlgebra reloaded = finite_algebra_from_json(to_json(z6));
  CHECK(reloaded.carrier() == z6.carrier());
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) {
      std::uint32_t ab[] = {a, b};
      CHECK(reloaded.apply("add", ab) == z6.apply("add", ab));
      CHECK(reloaded.apply("mul", ab) == z6.apply("mul", ab));
    }
  }

  auto bad = description;
  bad["ops"]["add"]["table"] = nlohmann::json::parse(R"([["0", "2"], ["1", "0"]])");
  CHECK_THROWS_AS(finite_algebra_from_json(bad), std::invalid_argument);
  bad = description;
  bad["ops"]["add"]["table"] = {"0", "1"};
  CHECK_THROWS_AS(finite_algebra_from_json(bad), std::invalid_argument);
}

TEST_CASE("witnesses and reports serialize with their exact sides") {
  PointSpace space = PointSpace::from_points({Rational(0), Rational(1), Rational(10)});
  auto witness = find_dv_violation(space, 4);
  REQUIRE(witness.has_value());
  nlohmann::json j = to_json(*witness);
  CHECK(j["x"] == nlohmann::json::array({"0"}));
  CHECK(j["y"] == nlohmann::json::array({"1"}));
  CHECK(j["z"] == nlohmann::json::array({"10"}));
  CHECK(j["lhs"] == "10");
  CHECK(j["rhs"] == "9");

  CheckReport report{"example"};
  report.checked = 3;
  report.violations.push_back({nlohmann::json{{"i", 1}}, Rational(2), Rational(1)});
  nlohmann::json rj = to_json(report);
  CHECK(rj["name"] == "example");
  CHECK(rj["ok"] == false);
  CHECK(rj["violations"][0]["lhs"] == "2");
}
