#include "credal/errors.hpp"
#include "credal/json_io.hpp"
#include "credal/random_models.hpp"

#include <doctest.h>

using namespace credal;

TEST_CASE("rationals encode as reduced strings") {
  CHECK(to_json(Rational(6, 4)) == Json("3/2"));
  CHECK(to_json(Rational(-4, 2)) == Json("-2"));
  CHECK(rational_from_json(Json("10/4")) == Rational(5, 2));
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
}

TEST_CASE("gambles need every atom") {
  const SpacePtr s = numbered_space(2);
  CHECK_THROWS_AS(gamble_from_json(s, Json::parse(R"({"w0": "1"})")), ParseError);
  CHECK_THROWS_AS(gamble_from_json(s, Json::parse(R"({"w0": "1", "w1": "0", "w2": "1"})")), ParseError);
  CHECK(gamble_from_json(s, Json::parse(R"({"w0": "1/2", "w1": -1})")) == Gamble(s, {Rational(1, 2), Rational(-1)}));
}

TEST_CASE("model files round-trip byte for byte") {
  const auto fix = fixtures::cor1();
  ModelFile f{fix.product.space, fix.model, {{"X", fix.product.x}, {"Y", fix.product.y}}, {}, {}, {}};
  f.events.emplace("E", fix.product.x.preimage_of_value(0));
  f.gambles.emplace("g", indicator(f.events.at("E")));
  f.option_sets.emplace("S", OptionSet(f.space, {f.gambles.at("g")}));
  const std::string once = canonical_dump(to_json(f));
  const std::string twice = canonical_dump(to_json(model_file_from_json(Json::parse(once))));
  CHECK(once == twice);
}

TEST_CASE("credal files with constraints") {
  const Json j = Json::parse(R"({
    "space": ["a", "b", "c"],
    "model": {"kind": "credal",
              "constraints": [{"coeffs": {"a": 1, "b": 0, "c": 0}, "rel": ">=", "rhs": "1/2"}]}
  })");
  const ModelFile f = model_file_from_json(j);
  const auto& c = std::get<CredalSet>(f.model);
  CHECK_FALSE(c.has_vertices());
  CHECK(lower_prevision(c, Gamble(f.space, {Rational(1), Rational(0), Rational(0)})) == Rational(1, 2));
  const ModelFile again = model_file_from_json(to_json(f));
  CHECK(canonical_dump(to_json(again)) == canonical_dump(to_json(f)));
}

TEST_CASE("bad model files") {
  CHECK_THROWS_AS(model_file_from_json(Json::parse(R"({"space": ["a", "b"], "model": {"kind": "linear",
                  "pmf": {"a": "1/2", "b": "1/3"}}})")),
                  InvalidModel);
  CHECK_THROWS_AS(model_file_from_json(Json::parse(R"({"space": ["a"], "model": {"kind": "fuzzy"}})")), ParseError);
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), ParseError);
}

TEST_CASE("witnesses serialize with canonical rationals") {
  const auto o4 = fixtures::omega4();
  const auto v = s_irrelevant(fixtures::c2(), o4.a, o4.b, Method::direct);
  const Json j = to_json(v);
  CHECK(j.at("witness").at("f").at("lambda") == "3/5");
  CHECK(j.at("witness").at("f").at("mu") == "-2/5");
  const OptionSet replay = option_set_from_json(o4.product.space, j.at("witness").at("replay_option_set"));
  CHECK(replay == v.event_witness->replay);
}
