#include "credal/choice.hpp"
#include "credal/errors.hpp"
#include "credal/random_models.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace credal;

namespace {

using VertexLists = std::vector<std::vector<RationalVector>>;

VertexLists vertex_lists(const ChoiceModel& m) {
  VertexLists out;
  for (const auto& member : members_of(m)) {
    std::vector<RationalVector> vs;
    for (const auto& v : member.vertices()) vs.push_back(v.pmf());
    out.push_back(vs);
  }
  return out;
}

bool k_oracle(const VertexLists& members, const OptionSet& a) {
  if (a.empty()) return false;
  for (const auto& vs : members) {
    bool any = false;
    for (const auto& f : a) any = any || oracle::lower(vs, f.values()) > 0;
    if (!any) return false;
  }
  return true;
}

// Options of A that are maximal in at least one member.
OptionSet lowerset_oracle(const VertexLists& members, const OptionSet& a) {
  OptionSet out(a.space());
  for (const auto& vs : members) {
    for (const auto& f : a) {
      bool beaten = false;
      for (const auto& g : a) beaten = beaten || oracle::lower(vs, (g - f).values()) > 0;
      if (!beaten) out.insert(f);
    }
  }
  return out;
}

// Options of A with maximal expectation under at least one listed pmf.
OptionSet eadm_oracle(const std::vector<RationalVector>& ps, const OptionSet& a) {
  OptionSet out(a.space());
  for (const auto& p : ps) {
    Rational best = oracle::expect(p, a[0].values());
    for (const auto& f : a) best = std::max(best, oracle::expect(p, f.values()));
    for (const auto& f : a) {
      if (oracle::expect(p, f.values()) == best) out.insert(f);
    }
  }
  return out;
}

Gamble on2(const Rational& x, const Rational& y) { return Gamble(fixtures::vac2().space(), {x, y}); }

}  // namespace

TEST_CASE("the empty option set is never desirable") {
  CHECK_FALSE(k_member(fixtures::unif(), OptionSet(fixtures::unif().space())));
}

TEST_CASE("E-admissibility is finer than maximality on the two-point example") {
  const OptionSet a(fixtures::vac2().space(), {on2(1, 0), on2(0, 1), on2(Rational(2, 5), Rational(2, 5))});
  const ChoiceResult maxi = choose(fixtures::vac2(), a, Criterion::maximality);
  CHECK(maxi.chosen == a);
  const ChoiceResult eadm = choose(fixtures::eadm(), a, Criterion::eadmissibility);
  CHECK(eadm.chosen == OptionSet(a.space(), {on2(1, 0), on2(0, 1)}));
  REQUIRE(eadm.certificates.size() == 1);
  CHECK(eadm.certificates[0].option == on2(Rational(2, 5), Rational(2, 5)));
  CHECK(eadm.certificates[0].preferred == std::vector<Gamble>{on2(1, 0), on2(0, 1)});
  CHECK(choose(fixtures::eadm(), a, Criterion::lowerset).chosen == eadm.chosen);
}

TEST_CASE("criteria refuse model kinds they do not cover") {
  const OptionSet a(fixtures::vac2().space(), {on2(1, 0)});
  CHECK_THROWS_AS(choose(fixtures::vac2(), a, Criterion::meu), CriterionMismatch);
  CHECK_THROWS_AS(choose(fixtures::vac2(), a, Criterion::eadmissibility), CriterionMismatch);
  CHECK_THROWS_AS(choose(fixtures::eadm(), a, Criterion::maximality), CriterionMismatch);
  const ChoiceModel mixed = ArchimedeanModel({fixtures::vac2()});
  CHECK_THROWS_AS(choose(mixed, a, Criterion::eadmissibility), CriterionMismatch);
  CHECK_THROWS_AS(parse_criterion("minimax"), ParseError);
}

TEST_CASE("membership, choices and slack agree with vertex oracles") {
  const GenKind kinds[] = {GenKind::linear, GenKind::credal, GenKind::lower_set};
  SuiteConfig config;
  config.max_space = 5;
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(mix_seed(5, 3, t));
    const ChoiceModel m = gen_random_model(config, kinds[t % 3], rng).model;
    const OptionSet a = random_option_set(rng, space_of(m), 5);
    const VertexLists vl = vertex_lists(m);
    CAPTURE(t);
    const bool in = k_member(m, a);
    CHECK(in == k_oracle(vl, a));

    const ChoiceResult ls = choose(m, a, Criterion::lowerset);
    CHECK(ls.chosen == lowerset_oracle(vl, a));
    for (const auto& f : a) CHECK(ls.rejected.contains(f) == rejected_by_duality(m, a, f));
    for (const auto& cert : ls.certificates) {
      REQUIRE(cert.preferred.size() == vl.size());
      for (std::size_t k = 0; k < vl.size(); ++k) {
        CHECK(oracle::lower(vl[k], (cert.preferred[k] - cert.option).values()) > 0);
      }
    }
    if (kind_of(m) != ModelKind::lower_set) {
      CHECK(choose(m, a, Criterion::maximality).chosen == ls.chosen);
      // Every E-admissible option under the vertex set is maximal.
      const ChoiceModel as_points = ArchimedeanModel([&] {
        std::vector<CredalSet> ms;
        const CredalSet only = members_of(m).front();
        for (const auto& v : only.vertices()) ms.emplace_back(v);
        return ms;
      }());
      const ChoiceResult e = choose(as_points, a, Criterion::eadmissibility);
      CHECK(e.chosen == eadm_oracle(vl.front(), a));
      CHECK(e.chosen.is_subset_of(ls.chosen));
    }

    const auto slack = archimedean_slack(m, a);
    CHECK(slack.has_value() == in);
    if (slack) CHECK(slack->sign() > 0);
  }
}

TEST_CASE("meu ties are all kept") {
  const SpacePtr s = fixtures::vac2().space();
  const LinearPrevision p = LinearPrevision::uniform(s);
  const OptionSet a(s, {on2(1, 0), on2(0, 1), on2(0, 0)});
  const ChoiceResult r = choose(p, a, Criterion::meu);
  CHECK(r.chosen == OptionSet(s, {on2(1, 0), on2(0, 1)}));
  CHECK(r.certificates.at(0).preferred.size() == 1);
}

TEST_CASE("dominance filter drops pointwise dominated options") {
  const OptionSet a(fixtures::vac2().space(), {on2(1, 0), on2(1, 1), on2(0, 2)});
  CHECK(dominance_filter(a) == OptionSet(a.space(), {on2(1, 1), on2(0, 2)}));
}
