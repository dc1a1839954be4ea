#include "credal/errors.hpp"
#include "credal/verify_suite.hpp"

#include <doctest.h>

using namespace credal;

TEST_CASE("suite config guards") {
  SuiteConfig c;
  c.trials = 0;
  CHECK_THROWS_AS(run_verify_suite(c), ConfigError);
  SuiteConfig d;
  d.batteries = {"linear_events", "no_such_battery"};
  CHECK_THROWS_AS(run_verify_suite(d), ConfigError);
  SuiteConfig e;
  e.min_space = 5;
  e.max_space = 4;
  CHECK_THROWS_AS(e.validate(), ConfigError);
}

TEST_CASE("the suite is deterministic apart from runtimes") {
  SuiteConfig c;
  c.trials = 20;
  c.seed = 99;
  const std::string a = canonical_dump(run_verify_suite(c).to_json(false));
  const std::string b = canonical_dump(run_verify_suite(c).to_json(false));
  CHECK(a == b);
  CHECK(battery_names().size() == 10);
}

TEST_CASE("a stubbed characterization route is caught by FIX-C2") {
  SuiteConfig c;
  c.trials = 50;
  c.mutate_characterization = true;
  c.batteries = {"credal_events"};
  const SuiteReport r = run_verify_suite(c);
  REQUIRE_FALSE(r.ok());
  const Json& ce = r.batteries.at(0).first_counterexample;
  CHECK(ce.at("origin") == "FIX-C2");
  // The counterexample is a loadable model file that still fails directly.
  const ModelFile f = model_file_from_json(ce.at("model_file"));
  CHECK_FALSE(s_irrelevant(f.model, f.events.at("A"), f.events.at("B"), Method::direct).holds);
}

TEST_CASE("small runs of every battery pass") {
  SuiteConfig c;
  c.trials = 15;
  c.seed = 5;
  const SuiteReport r = run_verify_suite(c);
  for (const auto& b : r.batteries) {
    CAPTURE(b.name);
    CHECK(b.ok());
    CHECK(b.cases > 0);
  }
}

TEST_CASE("generators emit valid models") {
  const GenKind kinds[] = {GenKind::linear, GenKind::credal, GenKind::product_factorizing, GenKind::lower_set};
  SuiteConfig c;
  std::size_t factorizing = 0;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    Rng rng(mix_seed(77, 8, t));
    const GenKind kind = kinds[t % 4];
    const GeneratedModel g = gen_random_model(c, kind, rng);
    for (const auto& m : members_of(g.model)) {
      for (const auto& v : m.vertices()) {
        // Re-validates mass and sum through the constructor.
        CHECK_NOTHROW(LinearPrevision(v.space(), v.pmf()));
        // Weights in 1..12 normalised by their sum; products multiply two such.
        const long n = static_cast<long>(v.pmf().size());
        const long bound = kind == GenKind::product_factorizing ? n * n * 144 : n * 12;
        for (const auto& p : v.pmf()) CHECK(boost::multiprecision::denominator(p) <= bound);
      }
    }
    if (kind == GenKind::product_factorizing) {
      REQUIRE(g.product);
      for (const auto& v : std::get<CredalSet>(g.model).vertices()) {
        CHECK(classical_independent(v, g.product->x, g.product->y));
      }
      ++factorizing;
    }
  }
  CHECK(factorizing == 2500);
}
