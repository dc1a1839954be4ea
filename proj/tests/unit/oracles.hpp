#pragma once

// Reference computations for the tests. They work on plain rational vectors
// and avoid the library's LP, cone and envelope code paths.

#include "credal/lp.hpp"
#include "credal/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using credal::LinearConstraint;
using credal::Rational;
using credal::RationalVector;
using credal::Relation;
using Mask = std::vector<bool>;

inline Rational expect(const RationalVector& pmf, const RationalVector& f) {
  Rational s = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) s += pmf[i] * f[i];
  return s;
}

inline Rational prob(const RationalVector& pmf, const Mask& e) {
  Rational s = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (e[i]) s += pmf[i];
  }
  return s;
}

inline Mask both(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline Mask flip(const Mask& a) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = !a[i];
  return out;
}

inline Rational lower(const std::vector<RationalVector>& vertices, const RationalVector& f) {
  Rational best = expect(vertices.front(), f);
  for (const auto& v : vertices) best = std::min(best, expect(v, f));
  return best;
}

/// Gauss-Jordan on a square system; nullopt when singular.
inline std::optional<RationalVector> solve(std::vector<RationalVector> m, RationalVector rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational k = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
      rhs[r] -= k * rhs[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

/// Vertices of {p >= 0, sum p = 1, rows} by trying every choice of tight
/// inequality rows. Exponential; meant for n <= 6.
inline std::vector<RationalVector> enumerate_vertices(std::size_t n, const std::vector<LinearConstraint>& rows) {
  std::vector<RationalVector> eq{RationalVector(n, Rational(1))};
  RationalVector eq_rhs{Rational(1)};
  std::vector<LinearConstraint> ineq;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    ineq.push_back({e, Relation::ge, Rational(0)});
  }
  for (const auto& r : rows) {
    if (r.rel == Relation::eq) {
      eq.push_back(r.coeffs);
      eq_rhs.push_back(r.rhs);
    } else {
      ineq.push_back(r);
    }
  }
  auto feasible = [&](const RationalVector& p) {
    for (std::size_t i = 0; i < eq.size(); ++i) {
      if (expect(eq[i], p) != eq_rhs[i]) return false;
    }
    for (const auto& r : ineq) {
      const Rational v = expect(r.coeffs, p);
      if (r.rel == Relation::ge ? v < r.rhs : v > r.rhs) return false;
    }
    return true;
  };

  std::set<RationalVector> out;
  if (eq.size() > n) return {};
  const std::size_t pick = n - eq.size();
  std::vector<bool> sel(ineq.size(), false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(std::min(pick, ineq.size())), true);
  if (pick > ineq.size()) return {};
  do {
    std::vector<RationalVector> m = eq;
    RationalVector rhs = eq_rhs;
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      if (!sel[i]) continue;
      m.push_back(ineq[i].coeffs);
      rhs.push_back(ineq[i].rhs);
    }
    if (auto p = solve(m, rhs); p && feasible(*p)) out.insert(*p);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return {out.begin(), out.end()};
}

/// Is there x with a.x < 0 and b.x < 0? Independent vectors: the solution of
/// a.x = b.x = -1. Dependent ones: only when b is a positive multiple of a.
inline bool cone_pair_feasible(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  const Rational det = a0 * b1 - a1 * b0;
  if (det != 0) return true;
  if ((a0 == 0 && a1 == 0) || (b0 == 0 && b1 == 0)) return false;
  // b = s a; the sign of s shows in any nonzero coordinate.
  return a0 != 0 ? (b0 / a0) > 0 : (b1 / a1) > 0;
}

/// Event-level irrelevance for a list of members, each a vertex list: no
/// member admits f = lambda I_B + mu I_coB with lowP(I_coA f) < 0 and
/// lowP(-I_A f) < 0.
inline bool event_irrelevant(const std::vector<std::vector<RationalVector>>& members, const Mask& a, const Mask& b) {
  const Mask co_a = flip(a), co_b = flip(b);
  for (const auto& vs : members) {
    for (const auto& qi : vs) {
      for (const auto& qj : vs) {
        if (cone_pair_feasible(prob(qi, both(co_a, b)), prob(qi, both(co_a, co_b)), -prob(qj, both(a, b)),
                               -prob(qj, both(a, co_b)))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool classical(const RationalVector& pmf, const Mask& a, const Mask& b) {
  return prob(pmf, both(a, b)) == prob(pmf, a) * prob(pmf, b);
}

/// All masks over n points, the empty and full one included.
inline std::vector<Mask> all_masks(std::size_t n) {
  std::vector<Mask> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Mask s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (m >> i) & 1U;
    out.push_back(s);
  }
  return out;
}

/// Preimage of a codomain subset under an assignment vector.
inline Mask preimage(const std::vector<std::size_t>& assignment, const Mask& subset) {
  Mask out(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) out[i] = subset[assignment[i]];
  return out;
}

}  // namespace oracle
