#include <doctest.h>

#include "premia/scenario.hpp"

using namespace premia;

namespace {

const char* kGood = R"({
  "schema": "1",
  "space": {"n": "2", "labels": ["up", "down"]},
  "measures": {
    "P": ["0.5", "0.5"],
    "Q": ["0.25", "0.75"]
  },
  "claims": {
    "X": ["0", "1"],
    "Z": ["0", "1"]
  },
  "principles": {
    "var2": {"kind": "Variance", "baseline": "P", "theta": "2"},
    "econ": {
      "kind": "Economic", "baseline": "P",
      "loss_fn": {"kind": "power", "exponent": "2", "scale": "0.5"},
      "endowment": "Z"
    },
    "choq": {
      "kind": "ChoquetDistortion", "baseline": "P",
      "distortion": {"kind": "power", "param": "2"}
    },
    "robust": {"kind": "MaxminExpectedLoss", "model_set": ["P", "Q"],
               "loss_fn": {"kind": "identity"}}
  },
  "markets": {
    "m": {"basis": [["1", "1"], ["0", "2"]], "prices": ["1", "1"]}
  }
})";

} // namespace

TEST_CASE("scenario: full document round trip") {
    Scenario sc = Scenario::parse_text(kGood);
    CHECK(sc.space.n == 2);
    CHECK(sc.space.labels[1] == "down");
    CHECK(sc.measure("Q")[1] == doctest::Approx(0.75));
    CHECK(sc.claim("X")[1] == doctest::Approx(1.0));
    CHECK(sc.principle("var2")(sc.claim("X")) == doctest::Approx(0.75));
    CHECK(sc.principle("econ")(sc.claim("X")) == doctest::Approx(1.0));
    CHECK(sc.principle("choq")(sc.claim("X")) == doctest::Approx(0.25));
    CHECK(sc.principle("robust")(sc.claim("X")) == doctest::Approx(0.75));
    CHECK(sc.market("m").basis.size() == 2);
    CHECK_THROWS_AS(sc.principle("nope"), ValidationError);
    CHECK_THROWS_AS(sc.claim("nope"), ValidationError);
}

TEST_CASE("scenario: strict numeric format") {
    // bare JSON numbers are rejected everywhere
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": 1, "space": {"n": "2"}})"),
                    ValidationError);
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": 2}})"),
                    ValidationError);
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": "2"},
                            "claims": {"X": [0, 1]}})"),
                    ValidationError);
    // trailing junk inside a decimal string
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": "2"},
                            "claims": {"X": ["0", "1x"]}})"),
                    ValidationError);
    // scientific notation is still a decimal string
    Scenario sc = Scenario::parse_text(
        R"({"schema": "1", "space": {"n": "2"}, "claims": {"X": ["1e-3", "2.5"]}})");
    CHECK(sc.claim("X")[0] == doctest::Approx(0.001));
}

TEST_CASE("scenario: unknown fields and bad references are rejected") {
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": "2"}, "extra": {}})"),
                    ValidationError);
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": "2", "m": "3"}})"),
                    ValidationError);
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "2", "space": {"n": "2"}})"),
                    ValidationError);
    // principle referencing a measure that does not exist
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": "2"},
                            "principles": {"h": {"kind": "Fair", "baseline": "P"}}})"),
                    ValidationError);
    // measure of the wrong dimension
    CHECK_THROWS_AS(Scenario::parse_text(
                        R"({"schema": "1", "space": {"n": "2"},
                            "measures": {"P": ["1"]}})"),
                    ValidationError);
    CHECK_THROWS_AS(Scenario::parse_text("not json"), ValidationError);
    CHECK_THROWS_AS(Scenario::parse_file("/nonexistent/path.json"), ValidationError);
}
