#include "credal/errors.hpp"
#include "credal/lp.hpp"
#include "credal/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace credal;

namespace {

// Minimum over all basic points of {0 <= x <= 5, rows}; the box keeps it
// bounded. nullopt when the region is empty.
std::optional<Rational> brute_minimum(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<LinearConstraint> all = lp.constraints;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    all.push_back({e, Relation::ge, Rational(0)});
    all.push_back({e, Relation::le, Rational(5)});
  }
  std::optional<Rational> best;
  std::vector<bool> sel(all.size(), false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(n), true);
  do {
    std::vector<RationalVector> m;
    RationalVector rhs;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!sel[i]) continue;
      m.push_back(all[i].coeffs);
      rhs.push_back(all[i].rhs);
    }
    const auto x = oracle::solve(m, rhs);
    if (!x) continue;
    bool ok = true;
    for (const auto& c : all) {
      const Rational v = oracle::expect(c.coeffs, *x);
      if ((c.rel == Relation::ge && v < c.rhs) || (c.rel == Relation::le && v > c.rhs) ||
          (c.rel == Relation::eq && v != c.rhs)) {
        ok = false;
      }
    }
    if (!ok) continue;
    const Rational v = oracle::expect(lp.objective, *x);
    if (!best || v < *best) best = v;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return best;
}

}  // namespace

TEST_CASE("lp_minimize on a textbook program") {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
  LinearProgram lp{{Rational(-1), Rational(-1)},
                   {{{Rational(1), Rational(2)}, Relation::le, Rational(4)},
                    {{Rational(3), Rational(1)}, Relation::le, Rational(6)}},
                   {}};
  const LpOutcome out = lp_minimize(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.optimum == Rational(-14, 5));
  CHECK(out.witness == RationalVector{Rational(8, 5), Rational(6, 5)});
}

TEST_CASE("infeasible and unbounded programs") {
  LinearProgram infeasible{{Rational(1)}, {{{Rational(1)}, Relation::le, Rational(-1)}}, {}};
  CHECK(lp_minimize(infeasible).status == LpStatus::infeasible);
  LinearProgram unbounded{{Rational(-1)}, {{{Rational(1)}, Relation::ge, Rational(1)}}, {}};
  CHECK(lp_minimize(unbounded).status == LpStatus::unbounded);
  LinearProgram free_var{{Rational(1)}, {{{Rational(1)}, Relation::ge, Rational(-3)}}, {VarBound::free}};
  const auto out = lp_minimize(free_var);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.optimum == -3);
}

TEST_CASE("malformed programs throw") {
  LinearProgram lp{{Rational(1), Rational(1)}, {{{Rational(1)}, Relation::ge, Rational(0)}}, {}};
  CHECK_THROWS_AS(lp_minimize(lp), MalformedProgram);
}

TEST_CASE("lp_minimize matches basic-point enumeration on random boxed programs") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(mix_seed(42, 1, t));
    const std::size_t n = 2 + rng.index(2);
    LinearProgram lp;
    for (std::size_t i = 0; i < n; ++i) lp.objective.push_back(rng.lattice(-3, 3, 2));
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n, Rational(0));
      e[i] = 1;
      lp.constraints.push_back({e, Relation::le, Rational(5)});
    }
    const std::size_t rows = 1 + rng.index(3);
    for (std::size_t r = 0; r < rows; ++r) {
      RationalVector c(n);
      for (auto& x : c) x = rng.lattice(-2, 2, 2);
      const Relation rel = rng.coin(0.15) ? Relation::eq : (rng.coin() ? Relation::ge : Relation::le);
      lp.constraints.push_back({c, rel, rng.lattice(-2, 3, 2)});
    }
    CAPTURE(t);
    const auto expected = brute_minimum(lp);
    const LpOutcome out = lp_minimize(lp);
    if (!expected) {
      CHECK(out.status == LpStatus::infeasible);
    } else {
      REQUIRE(out.status == LpStatus::optimal);
      CHECK(out.optimum == *expected);
      CHECK(satisfies(lp, out.witness));
    }
  }
}

TEST_CASE("open half-plane pairs agree with the Cramer oracle") {
  for (int a0 = -2; a0 <= 2; ++a0)
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int b0 = -2; b0 <= 2; ++b0)
        for (int b1 = -2; b1 <= 2; ++b1) {
          const Vec2 a{Rational(a0), Rational(a1)}, b{Rational(b0), Rational(b1)};
          const bool expected = oracle::cone_pair_feasible(a[0], a[1], b[0], b[1]);
          CAPTURE(a0);
          CAPTURE(a1);
          CAPTURE(b0);
          CAPTURE(b1);
          CHECK(open_halfplane_pair_feasible(a, b) == expected);
          const auto x = open_halfplane_pair_witness(a, b);
          CHECK(x.has_value() == expected);
          if (x) {
            CHECK(a[0] * (*x)[0] + a[1] * (*x)[1] < 0);
            CHECK(b[0] * (*x)[0] + b[1] * (*x)[1] < 0);
          }
        }
}

TEST_CASE("half-plane witnesses with a fixed sign have that sign") {
  const Vec2 a{Rational(1, 4), Rational(1, 4)}, b{Rational(-9, 100), Rational(-21, 100)};
  for (int s : {1, -1}) {
    const auto x = open_halfplane_pair_witness(a, b, s);
    if (!x) continue;
    CHECK(((*x)[0] - (*x)[1]) * s > 0);
  }
}
