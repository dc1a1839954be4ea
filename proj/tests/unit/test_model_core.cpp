#include "credal/errors.hpp"
#include "credal/model_core.hpp"

#include <doctest.h>

using namespace credal;

namespace {
const SpacePtr& abc() {
  static const SpacePtr s = FiniteSpace::make({"a", "b", "c"});
  return s;
}
Gamble g3(int x, int y, int z) { return Gamble(abc(), {Rational(x), Rational(y), Rational(z)}); }
}  // namespace

TEST_CASE("spaces reject duplicate and empty atom lists") {
  CHECK_THROWS_AS(FiniteSpace::make({}), InvalidModel);
  CHECK_THROWS_AS(FiniteSpace::make({"a", "a"}), InvalidModel);
  CHECK(abc()->index("c") == 2);
  CHECK_THROWS_AS(abc()->index("d"), InvalidModel);
}

TEST_CASE("gamble arithmetic is pointwise") {
  const Gamble f = g3(1, -2, 3);
  CHECK((f + g3(1, 1, 1)) == g3(2, -1, 4));
  CHECK((f - Rational(1)) == g3(0, -3, 2));
  CHECK((Rational(2) * f) == g3(2, -4, 6));
  CHECK(f.times(g3(0, 1, 2)) == g3(0, -2, 6));
  CHECK(f.min() == -2);
  CHECK(f.max() == 3);
  CHECK(Gamble::zero(abc()).is_zero());
}

TEST_CASE("gambles on different spaces do not mix") {
  // Spaces compare by their atom lists.
  CHECK(same_space(abc(), FiniteSpace::make({"a", "b", "c"})));
  const SpacePtr other = FiniteSpace::make({"a", "c", "b"});
  CHECK_THROWS_AS(g3(1, 1, 1) + Gamble(other, {Rational(1), Rational(1), Rational(1)}), SpaceMismatch);
}

TEST_CASE("events, indicators and event gambles") {
  const Event e = Event::from_labels(abc(), {"a", "c"});
  CHECK(e.count() == 2);
  CHECK(e.complement() == Event::from_labels(abc(), {"b"}));
  CHECK(indicator(e) == g3(1, 0, 1));
  CHECK(event_gamble(e, Rational(3, 5), Rational(-2, 5)) ==
        Gamble(abc(), {Rational(3, 5), Rational(-2, 5), Rational(3, 5)}));
  CHECK(e.intersect(Event::from_labels(abc(), {"b", "c"})) == Event::from_labels(abc(), {"c"}));
}

TEST_CASE("option sets are sets") {
  const OptionSet a(abc(), {g3(1, 0, 0), g3(0, 1, 0), g3(1, 0, 0)});
  CHECK(a.size() == 2);
  CHECK(a == OptionSet(abc(), {g3(0, 1, 0), g3(1, 0, 0)}));
  CHECK(a.contains(g3(0, 1, 0)));
  CHECK_FALSE(a.contains(g3(0, 0, 1)));
}

TEST_CASE("opt_minus subtracts the removed option") {
  const OptionSet a(abc(), {g3(1, 0, 0), g3(0, 1, 0), g3(2, 2, 2)});
  const OptionSet d = opt_minus(a, g3(1, 0, 0));
  CHECK(d == OptionSet(abc(), {g3(-1, 1, 0), g3(1, 2, 2)}));
  CHECK_THROWS_AS(opt_minus(a, g3(5, 5, 5)), FNotInSet);
}

TEST_CASE("dominance kinds") {
  CHECK(dominates(g3(2, 2, 2), g3(1, 1, 1), Dominance::strict_uniform));
  CHECK_FALSE(dominates(g3(2, 1, 2), g3(1, 1, 1), Dominance::strict_uniform));
  CHECK(dominates(g3(2, 1, 2), g3(1, 1, 1), Dominance::strict_pointwise));
  CHECK_FALSE(dominates(g3(1, 1, 1), g3(1, 1, 1), Dominance::strict_pointwise));
  CHECK(dominates(g3(1, 1, 1), g3(1, 1, 1), Dominance::weak));
}

TEST_CASE("variables: preimages and composition") {
  const Variable z = Variable::from_labels(abc(), {"lo", "hi", "unused"}, {"lo", "hi", "lo"});
  CHECK(z.codomain_size() == 3);
  CHECK(z.preimage_of_value(0) == Event::from_labels(abc(), {"a", "c"}));
  CHECK(z.preimage_of_value(2) == Event::empty(abc()));
  const Gamble h(z.codomain_space(), {Rational(5), Rational(-1), Rational(9)});
  CHECK(z.compose(h) == g3(5, -1, 5));
  CHECK_THROWS(Variable::from_labels(abc(), {"lo"}, {"lo", "hi", "lo"}));
}
