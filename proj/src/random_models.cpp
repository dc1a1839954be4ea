#include "credal/random_models.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <set>

namespace credal {

void SuiteConfig::validate() const {
  if (trials && *trials == 0) throw ConfigError("trials must be positive");
  if (min_space < 2 || min_space > max_space) throw ConfigError("space-size bounds must satisfy 2 <= min <= max");
  if (max_space > 12) throw ConfigError("max_space above 12 is not supported");
  if (max_vertices == 0) throw ConfigError("max_vertices must be positive");
  if (subset_cap == 0) throw ConfigError("subset_cap must be positive");
  if (max_den < 1) throw ConfigError("max_den must be positive");
}

std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::linear: return "linear";
    case GenKind::credal: return "credal";
    case GenKind::product_factorizing: return "product_factorizing";
    case GenKind::lower_set: return "lower_set";
  }
  return "?";
}

SpacePtr numbered_space(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back("w" + std::to_string(i));
  return FiniteSpace::make(std::move(atoms));
}

CredalSet gen_credal_set(Rng& rng, const SpacePtr& space, std::size_t count, std::int64_t max_den,
                         double sparsity) {
  std::set<RationalVector> seen;
  std::vector<LinearPrevision> vs;
  for (int attempt = 0; vs.size() < count && attempt < 50 * static_cast<int>(count); ++attempt) {
    RationalVector pmf = random_pmf(rng, space->size(), max_den, sparsity);
    if (seen.insert(pmf).second) vs.emplace_back(space, std::move(pmf));
  }
  return CredalSet(std::move(vs));
}

CredalSet gen_product_factorizing(Rng& rng, const ProductSpace& ps, std::size_t count, std::int64_t max_den,
                                  bool positive_x) {
  const RationalVector py = random_pmf(rng, ps.y.codomain_size(), max_den, 0.0);
  std::set<RationalVector> seen;
  std::vector<LinearPrevision> vs;
  for (int attempt = 0; vs.size() < count && attempt < 50 * static_cast<int>(count); ++attempt) {
    RationalVector px = random_pmf(rng, ps.x.codomain_size(), max_den, positive_x ? 0.0 : 0.3);
    if (seen.insert(px).second) vs.push_back(ps.product(px, py));
  }
  return CredalSet(std::move(vs));
}

GeneratedModel gen_random_model(const SuiteConfig& config, GenKind kind, Rng& rng) {
  auto space_size = [&]() {
    return static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(config.min_space), static_cast<std::int64_t>(config.max_space)));
  };
  auto vertex_count = [&]() { return 1 + rng.index(config.max_vertices); };
  switch (kind) {
    case GenKind::linear: {
      const SpacePtr s = numbered_space(space_size());
      return {LinearPrevision(s, random_pmf(rng, s->size(), config.max_den, rng.coin(0.25) ? 0.4 : 0.0)), {}};
    }
    case GenKind::credal: {
      const SpacePtr s = numbered_space(space_size());
      return {gen_credal_set(rng, s, vertex_count(), config.max_den, rng.coin(0.25) ? 0.4 : 0.0), {}};
    }
    case GenKind::product_factorizing: {
      ProductSpace ps = ProductSpace::make(rng.coin() ? std::vector<std::string>{"x0", "x1"}
                                                      : std::vector<std::string>{"x0", "x1", "x2"},
                                           rng.coin() ? std::vector<std::string>{"y0", "y1"}
                                                      : std::vector<std::string>{"y0", "y1", "y2"});
      CredalSet c = gen_product_factorizing(rng, ps, vertex_count(), config.max_den);
      return {std::move(c), std::move(ps)};
    }
    case GenKind::lower_set: {
      const SpacePtr s = numbered_space(space_size());
      std::vector<CredalSet> members;
      const std::size_t k = 1 + rng.index(3);
      for (std::size_t i = 0; i < k; ++i) members.push_back(gen_credal_set(rng, s, vertex_count(), config.max_den));
      return {ArchimedeanModel(std::move(members)), {}};
    }
  }
  throw ConfigError("unknown generator kind");
}

PolytopePair gen_interval_polytope(Rng& rng, const SpacePtr& space, std::int64_t max_den) {
  const std::size_t n = space->size();
  const RationalVector centre = random_pmf(rng, n, max_den, 0.0);
  RationalVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::max(Rational(0), centre[i] - Rational(rng.uniform_int(0, 3)) / (2 * max_den));
    hi[i] = std::min(Rational(1), centre[i] + Rational(rng.uniform_int(0, 3)) / (2 * max_den));
  }

  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    rows.push_back({e, Relation::ge, lo[i]});
    rows.push_back({e, Relation::le, hi[i]});
  }

  std::vector<LinearPrevision> vs;
  for (std::size_t free = 0; free < n; ++free) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      RationalVector p(n);
      Rational rest = 1;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == free) continue;
        p[i] = (mask >> bit++) & 1U ? hi[i] : lo[i];
        rest -= p[i];
      }
      if (rest < lo[free] || rest > hi[free]) continue;
      p[free] = rest;
      vs.emplace_back(space, std::move(p));
    }
  }
  return {CredalSet(std::move(vs)), CredalSet::from_constraints(space, std::move(rows))};
}

// ---------------------------------------------------------------- fixtures

namespace fixtures {

namespace {

RationalVector q(std::initializer_list<const char*> values) {
  RationalVector out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

const ProductSpace& omega4_product() {
  static const ProductSpace ps = ProductSpace::make({"a", "~a"}, {"b", "~b"});
  return ps;
}

}  // namespace

Omega4 omega4() {
  const ProductSpace& ps = omega4_product();
  return {ps, ps.x.preimage_of_value(0), ps.y.preimage_of_value(0)};
}

LinearPrevision unif() { return LinearPrevision(omega4_product().space, q({"1/4", "1/4", "1/4", "1/4"})); }
LinearPrevision dep() { return LinearPrevision(omega4_product().space, q({"3/10", "1/5", "1/5", "3/10"})); }
LinearPrevision p2() { return LinearPrevision(omega4_product().space, q({"9/100", "21/100", "21/100", "49/100"})); }
CredalSet c2() { return CredalSet(std::vector<LinearPrevision>{unif(), p2()}); }

namespace {
const SpacePtr& two_atoms() {
  static const SpacePtr s = FiniteSpace::make({"1", "2"});
  return s;
}
}  // namespace

CredalSet vac2() { return CredalSet::vacuous(two_atoms()); }

ArchimedeanModel eadm() {
  return ArchimedeanModel({CredalSet(LinearPrevision::point_mass(two_atoms(), 0)),
                           CredalSet(LinearPrevision::point_mass(two_atoms(), 1))});
}

Cor1 cor1() {
  static const ProductSpace ps = ProductSpace::make({"x0", "x1"}, {"y0", "y1"});
  const RationalVector r1 = q({"3/10", "7/10"});
  const RationalVector r2 = q({"1/2", "1/2"});
  // Vertices are recomputed from their marginals and compared with the
  // stated joint pmfs.
  const LinearPrevision a = ps.product(q({"1/5", "4/5"}), r1);
  const LinearPrevision b = ps.product(q({"3/5", "2/5"}), r1);
  const LinearPrevision c = ps.product(q({"1/5", "4/5"}), r2);
  const LinearPrevision d = ps.product(q({"3/5", "2/5"}), r2);
  if (a.pmf() != q({"3/50", "7/50", "12/50", "28/50"}) || b.pmf() != q({"9/50", "21/50", "6/50", "14/50"}) ||
      c.pmf() != q({"1/10", "1/10", "2/5", "2/5"}) || d.pmf() != q({"3/10", "3/10", "1/5", "1/5"})) {
    throw std::logic_error("FIX-COR1 vertices do not match their marginals");
  }
  ArchimedeanModel model({CredalSet(std::vector<LinearPrevision>{a, b}), CredalSet(std::vector<LinearPrevision>{c, d})});
  return {ps, std::move(model), LinearPrevision(ps.y.codomain_space(), r1),
          LinearPrevision(ps.y.codomain_space(), r2)};
}

}  // namespace fixtures

}  // namespace credal
