#include "credal/lp.hpp"

#include "credal/errors.hpp"

#include <stdexcept>
#include <string>

namespace credal {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Tableau {
  // rows[i] has cols + 1 entries; the last one is the right-hand side.
  std::vector<RationalVector> rows;
  RationalVector obj;  // reduced costs; obj.back() == -(objective value)
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t p, std::size_t q) {
    const Rational piv = rows[p][q];
    for (auto& v : rows[p]) v /= piv;
    auto eliminate = [&](RationalVector& r) {
      if (r[q].is_zero()) return;
      const Rational factor = r[q];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (!rows[p][j].is_zero()) r[j] -= factor * rows[p][j];
      }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != p) eliminate(rows[i]);
    }
    eliminate(obj);
    basis[p] = q;
  }

  void price(const RationalVector& cost) {
    obj.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= cb * rows[i][j];
    }
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t q = kNone;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && obj[j].sign() < 0) {
          q = j;
          break;
        }
      }
      if (q == kNone) return true;

      std::size_t p = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][q].sign() <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][q];
        if (p == kNone || ratio < best || (ratio == best && basis[i] < basis[p])) {
          p = i;
          best = std::move(ratio);
        }
      }
      if (p == kNone) return false;
      pivot(p, q);
    }
  }
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (n == 0) throw MalformedProgram("program has no variables");
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    throw MalformedProgram("bounds list has " + std::to_string(lp.bounds.size()) +
                           " entries for " + std::to_string(n) + " variables");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coeffs.size() != n) {
      throw MalformedProgram("constraint " + std::to_string(i) + " has " +
                             std::to_string(lp.constraints[i].coeffs.size()) +
                             " coefficients for " + std::to_string(n) + " variables");
    }
  }
}

}  // namespace

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const bool free = !lp.bounds.empty() && lp.bounds[j] == VarBound::free;
    if (!free && x[j].sign() < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    const int cmp = dot(c.coeffs, x).compare(c.rhs);
    switch (c.rel) {
      case Relation::ge: if (cmp < 0) return false; break;
      case Relation::le: if (cmp > 0) return false; break;
      case Relation::eq: if (cmp != 0) return false; break;
    }
  }
  return true;
}

LpOutcome lp_minimize(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.constraints.size();

  // Column layout: split variables, then one slack per inequality, then one
  // artificial per row.
  std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!lp.bounds.empty() && lp.bounds[j] == VarBound::free) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.constraints[i].rel != Relation::eq) slack_col[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  cols += m;

  Tableau t;
  t.cols = cols;
  t.rows.assign(m, RationalVector(cols + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[pos_col[j]] = c.coeffs[j];
      if (neg_col[j] != kNone) row[neg_col[j]] = -c.coeffs[j];
    }
    if (slack_col[i] != kNone) row[slack_col[i]] = c.rel == Relation::le ? 1 : -1;
    row[cols] = c.rhs;
    if (row[cols].sign() < 0) {
      for (auto& v : row) v = -v;
    }
    row[first_artificial + i] = 1;
    t.basis[i] = first_artificial + i;
  }

  // Phase 1: minimize the sum of artificials.
  RationalVector phase1_cost(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1_cost[first_artificial + i] = 1;
  t.price(phase1_cost);
  std::vector<bool> allowed(cols, true);
  t.optimize(allowed);
  if (t.obj[cols].sign() != 0) return LpOutcome{LpStatus::infeasible, 0, {}};

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < first_artificial) {
      ++i;
      continue;
    }
    std::size_t q = kNone;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (!t.rows[i][j].is_zero()) {
        q = j;
        break;
      }
    }
    if (q != kNone) {
      t.pivot(i, q);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2.
  RationalVector cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != kNone) cost[neg_col[j]] = -lp.objective[j];
  }
  for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  t.price(cost);
  if (!t.optimize(allowed)) return LpOutcome{LpStatus::unbounded, 0, {}};

  RationalVector y(cols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rows[i][cols];
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = y[pos_col[j]];
    if (neg_col[j] != kNone) x[j] -= y[neg_col[j]];
  }

  LpOutcome out{LpStatus::optimal, dot(lp.objective, x), std::move(x)};
  if (!satisfies(lp, out.witness) || out.optimum != -t.obj[cols]) {
    throw std::logic_error("simplex produced a witness that fails substitution");
  }
  return out;
}

// ------------------------------------------------------- 2-D open cones

namespace {

bool is_zero(const Vec2& v) { return v[0].is_zero() && v[1].is_zero(); }

Rational dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

}  // namespace

bool open_halfplane_pair_feasible(const Vec2& a, const Vec2& b) {
  if (is_zero(a) || is_zero(b)) return false;
  const Rational cross = a[0] * b[1] - a[1] * b[0];
  if (cross.is_zero() && dot2(a, b).sign() < 0) return false;
  return true;
}

std::optional<Vec2> open_halfplane_pair_witness(const Vec2& a, const Vec2& b, int s) {
  // Direction x = s(1 - c, -c); v.x < 0 becomes alpha - c beta < 0.
  std::optional<Rational> lo, hi;
  for (const Vec2* v : {&a, &b}) {
    const Rational alpha = s * (*v)[0];
    const Rational beta = s * ((*v)[0] + (*v)[1]);
    if (beta.is_zero()) {
      if (alpha.sign() >= 0) return std::nullopt;
      continue;
    }
    const Rational bound = alpha / beta;
    if (beta.sign() > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (lo && hi && !(*lo < *hi)) return std::nullopt;
  Rational c = 0;
  if (lo && hi) c = (*lo + *hi) / 2;
  else if (lo) c = *lo + 1;
  else if (hi) c = *hi - 1;
  Vec2 x{Rational(s) * (1 - c), Rational(s) * (-c)};
  if (dot2(a, x).sign() < 0 && dot2(b, x).sign() < 0) return x;
  return std::nullopt;
}

std::optional<Vec2> open_halfplane_pair_witness(const Vec2& a, const Vec2& b) {
  for (int s : {1, -1}) {
    if (auto x = open_halfplane_pair_witness(a, b, s)) return x;
  }
  for (int s : {1, -1}) {
    Vec2 x{Rational(s), Rational(s)};
    if (dot2(a, x).sign() < 0 && dot2(b, x).sign() < 0) return x;
  }
  return std::nullopt;
}

}  // namespace credal
