#pragma once

// Exact rational linear programming. Dense two-phase tableau simplex with
// Bland's rule; sized for desk-scale programs (tens of rows and columns).

#include "credal/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace credal {

enum class Relation { ge, eq, le };
enum class VarBound { nonnegative, free };

struct LinearConstraint {
  RationalVector coeffs;
  Relation rel = Relation::ge;
  Rational rhs = 0;
};

struct LinearProgram {
  RationalVector objective;
  std::vector<LinearConstraint> constraints;
  /// One entry per variable; empty means every variable is nonnegative.
  std::vector<VarBound> bounds;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational optimum = 0;      // valid when optimal
  RationalVector witness;    // primal point when optimal
};

/// Minimizes objective . x over the program. Throws MalformedProgram on
/// dimension mismatches. An optimal witness is rechecked by substitution
/// before it is returned.
LpOutcome lp_minimize(const LinearProgram& lp);

/// Exact substitution check of every constraint and bound.
bool satisfies(const LinearProgram& lp, const RationalVector& x);

using Vec2 = std::array<Rational, 2>;

/// Is there x in R^2 with a.x < 0 and b.x < 0? Closed form: no iff a = 0,
/// b = 0, or b = -s a for some s > 0.
bool open_halfplane_pair_feasible(const Vec2& a, const Vec2& b);

/// A rational x with a.x < 0 and b.x < 0, or nullopt when none exists.
/// Directions of the form s(1 - c, -c), s = +1 first, are tried before the
/// constant direction, and c is taken from the middle of its feasible
/// interval; the result is therefore deterministic.
std::optional<Vec2> open_halfplane_pair_witness(const Vec2& a, const Vec2& b);

/// The same search restricted to directions s(1 - c, -c) for one sign s.
std::optional<Vec2> open_halfplane_pair_witness(const Vec2& a, const Vec2& b, int s);

}  // namespace credal
