#include "credal/errors.hpp"
#include "credal/independence.hpp"
#include "credal/random_models.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace credal;

namespace {

std::vector<std::vector<RationalVector>> vertex_lists(const ChoiceModel& m) {
  std::vector<std::vector<RationalVector>> out;
  for (const auto& member : members_of(m)) {
    std::vector<RationalVector> vs;
    for (const auto& v : member.vertices()) vs.push_back(v.pmf());
    out.push_back(vs);
  }
  return out;
}

// Variable-level oracle: every pair of codomain subsets, empty and full ones
// included, is irrelevant at event level.
bool variable_oracle(const ChoiceModel& m, const Variable& x, const Variable& y) {
  const auto vl = vertex_lists(m);
  for (const auto& cx : oracle::all_masks(x.codomain_size())) {
    for (const auto& cy : oracle::all_masks(y.codomain_size())) {
      if (!oracle::event_irrelevant(vl, oracle::preimage(x.assignment(), cx), oracle::preimage(y.assignment(), cy))) {
        return false;
      }
    }
  }
  return true;
}

struct EnvGuard {
  ~EnvGuard() { unsetenv("CREDAL_CHOICE_SUBSET_CAP"); }
};

}  // namespace

TEST_CASE("event fixtures") {
  const auto o4 = fixtures::omega4();
  CHECK(s_irrelevant(fixtures::unif(), o4.a, o4.b, Method::direct).holds);
  CHECK_FALSE(s_irrelevant(fixtures::dep(), o4.a, o4.b, Method::direct).holds);
  CHECK(s_independent(fixtures::p2(), o4.a, o4.b, Method::characterization).holds);
  CHECK(classical_independent(fixtures::p2(), o4.a, o4.b));
  CHECK_FALSE(classical_independent(fixtures::dep(), o4.a, o4.b));
}

TEST_CASE("FIX-C2 fails with f = I_B - 2/5") {
  const auto o4 = fixtures::omega4();
  const auto v = s_irrelevant(fixtures::c2(), o4.a, o4.b, Method::direct);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.event_witness);
  const EventWitness& w = *v.event_witness;
  CHECK(w.f.event == o4.b);
  CHECK(w.f.lambda == Rational(3, 5));
  CHECK(w.f.mu == Rational(-2, 5));
  CHECK(w.f.gamble() == indicator(o4.b) - Rational(2, 5));
  // Independent recomputation of the two lower previsions.
  const std::vector<RationalVector> vs{fixtures::p2().pmf(), fixtures::unif().pmf()};
  const Gamble f = w.f.gamble();
  CHECK(w.low_co_a == oracle::lower(vs, indicator(o4.a.complement()).times(f).values()));
  CHECK(w.low_minus_a == oracle::lower(vs, (-indicator(o4.a).times(f)).values()));
  CHECK(w.low_co_a < 0);
  CHECK(w.low_minus_a < 0);
  CHECK_FALSE(k_member(fixtures::c2(), w.replay));
  const auto c = s_irrelevant(fixtures::c2(), o4.a, o4.b, Method::characterization);
  CHECK_FALSE(c.holds);
}

TEST_CASE("event-level verdicts agree with the Cramer oracle") {
  SuiteConfig config;
  config.max_space = 6;
  const GenKind kinds[] = {GenKind::linear, GenKind::credal, GenKind::lower_set};
  std::size_t holds = 0;
  for (std::uint64_t t = 0; t < 600; ++t) {
    Rng rng(mix_seed(21, 4, t));
    const ChoiceModel m = gen_random_model(config, kinds[t % 3], rng).model;
    const SpacePtr& s = space_of(m);
    const Event a = random_event(rng, s), b = random_event(rng, s);
    const bool expected = oracle::event_irrelevant(vertex_lists(m), a.members(), b.members());
    CAPTURE(t);
    const auto d = s_irrelevant(m, a, b, Method::direct);
    CHECK(d.holds == expected);
    CHECK(s_irrelevant(m, a, b, Method::characterization).holds == expected);
    if (!d.holds) {
      REQUIRE(d.event_witness);
      CHECK_FALSE(k_member(members_of(m)[d.event_witness->member], d.event_witness->replay));
    }
    if (kind_of(m) == ModelKind::linear) {
      CHECK(expected == oracle::classical(std::get<LinearPrevision>(m).pmf(), a.members(), b.members()));
    }
    holds += expected;
  }
  CHECK(holds > 30);
  CHECK(holds < 570);
}

TEST_CASE("complementing either event keeps the verdict") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(mix_seed(22, 4, t));
    const CredalSet m = gen_credal_set(rng, numbered_space(2 + rng.index(5)), 1 + rng.index(4), 10);
    const Event a = random_event(rng, m.space()), b = random_event(rng, m.space());
    const bool v = s_irrelevant(m, a, b, Method::direct).holds;
    CHECK(s_irrelevant(m, a.complement(), b, Method::direct).holds == v);
    CHECK(s_irrelevant(m, a, b.complement(), Method::direct).holds == v);
    CHECK(s_irrelevant(m, a.complement(), b.complement(), Method::direct).holds == v);
  }
}

TEST_CASE("triviality and credibility") {
  const auto o4 = fixtures::omega4();
  const CredalSet c2 = fixtures::c2();
  CHECK(is_trivial(c2, Event::empty(o4.product.space)));
  CHECK_FALSE(is_trivial(c2, o4.a));
  const Credibility ca = credibility_status(c2, o4.a);
  CHECK(ca.credible);
  CHECK(ca.credibly_indeterminate);
  const CredalSet point(LinearPrevision::point_mass(o4.product.space, 0));
  CHECK(is_trivial(point, o4.product.x));
  CHECK(s_irrelevant(point, o4.a, o4.b, Method::direct).holds);
  const Credibility cx = credibility_status(point, o4.product.x);
  CHECK(cx.credible);
  CHECK_FALSE(cx.credibly_indeterminate);
  const Credibility cv = credibility_status(fixtures::vac2(), Event::from_labels(fixtures::vac2().space(), {"1"}));
  CHECK_FALSE(cv.credible);
}

TEST_CASE("interval product") {
  CHECK(interval_product({Rational(-1), Rational(2)}, Rational(-3)) == RationalInterval{Rational(-6), Rational(3)});
  CHECK_THROWS(RationalInterval{Rational(2), Rational(1)});
}

TEST_CASE("variable-level verdicts agree with the all-subsets oracle") {
  std::size_t holds = 0, total = 0;
  for (std::uint64_t t = 0; t < 120; ++t) {
    Rng rng(mix_seed(23, 4, t));
    const ProductSpace ps = ProductSpace::make({"x0", "x1", "x2"}, {"y0", "y1"});
    const ChoiceModel m = t % 2 == 0 ? ChoiceModel(gen_product_factorizing(rng, ps, 1 + rng.index(3), 8))
                                     : ChoiceModel(gen_credal_set(rng, ps.space, 1 + rng.index(3), 8, 0.3));
    const bool expected = variable_oracle(m, ps.x, ps.y);
    CAPTURE(t);
    CHECK(s_irrelevant(m, ps.x, ps.y, Method::direct).holds == expected);
    CHECK(s_irrelevant(m, ps.x, ps.y, Method::characterization).holds == expected);
    const auto w = s_irrelevant_variables_sampled(m, ps.x, ps.y, 50, t);
    if (expected) CHECK_FALSE(w.has_value());
    else CHECK((w.has_value() && w->guided));
    holds += expected;
    ++total;
  }
  CHECK(holds >= total / 3);
}

TEST_CASE("FIX-C2 as a product of two variables") {
  const auto o4 = fixtures::omega4();
  const auto& x = o4.product.x;
  const auto& y = o4.product.y;
  const auto v = s_irrelevant(fixtures::c2(), x, y, Method::direct);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.variable_witness);
  CHECK(v.variable_witness->event.f.gamble() == indicator(o4.b) - Rational(2, 5));
  const auto w = s_irrelevant_variables_sampled(fixtures::c2(), x, y, 200, 1);
  REQUIRE(w);
  CHECK(w->guided);
  CHECK(w->cells == std::vector<std::vector<bool>>{{true, false}, {false, true}});
  CHECK(w->gambles[0] == Gamble(y.codomain_space(), {Rational(3, 5), Rational(-2, 5)}));
  CHECK(w->gambles[1].is_zero());
  CHECK(w->worst < 0);
  CHECK(partition_criterion(fixtures::c2(), x, y, w->cells, w->gambles) == w->worst);
  CHECK_FALSE(k_member(fixtures::c2(), w->replay));
}

TEST_CASE("subset cap from the environment") {
  EnvGuard guard;
  const ProductSpace ps = ProductSpace::make({"x0", "x1", "x2"}, {"y0", "y1", "y2"});
  const LinearPrevision u = LinearPrevision::uniform(ps.space);
  CHECK(subset_cap() == 16);
  setenv("CREDAL_CHOICE_SUBSET_CAP", "5", 1);
  CHECK(subset_cap() == 5);
  CHECK_THROWS_AS(s_irrelevant(u, ps.x, ps.y, Method::direct), CapExceeded);
  setenv("CREDAL_CHOICE_SUBSET_CAP", "zero", 1);
  CHECK_THROWS_AS(subset_cap(), ConfigError);
  setenv("CREDAL_CHOICE_SUBSET_CAP", "41", 1);
  CHECK_THROWS_AS(subset_cap(), ConfigError);
}

TEST_CASE("factorization report") {
  const ProductSpace ps = ProductSpace::make({"x0", "x1"}, {"y0", "y1", "y2"});
  Rng rng(3);
  const CredalSet m = gen_product_factorizing(rng, ps, 3, 10);
  const FactorizationReport r = factorization_check(m, ps.x, ps.y, 200, 5);
  CHECK(r.ok());
  CHECK(r.samples == 200);
  const FactorizationReport bad = factorization_check(fixtures::c2(), fixtures::omega4().product.x,
                                                      fixtures::omega4().product.y, 10, 1);
  CHECK_FALSE(bad.precondition);
  CHECK(precise_distribution(m, ps.y).has_value());
  CHECK_FALSE(precise_distribution(fixtures::c2(), fixtures::omega4().product.y).has_value());
}
