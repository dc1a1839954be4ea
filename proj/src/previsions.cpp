#include "credal/previsions.hpp"

#include "credal/errors.hpp"
#include "credal/sampling.hpp"

#include <algorithm>

namespace credal {

LinearPrevision::LinearPrevision(SpacePtr space, RationalVector pmf)
    : space_(std::move(space)), pmf_(std::move(pmf)) {
  if (!space_) throw InvalidModel("linear prevision without a space");
  if (pmf_.size() != space_->size()) {
    throw InvalidModel("pmf has " + std::to_string(pmf_.size()) + " masses for " +
                       std::to_string(space_->size()) + " atoms");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < pmf_.size(); ++i) {
    if (pmf_[i].sign() < 0) {
      throw InvalidModel("negative mass " + to_string(pmf_[i]) + " on atom " + space_->atom(i));
    }
    total += pmf_[i];
  }
  if (total != 1) throw InvalidModel("masses sum to " + to_string(total) + ", not 1");
}

LinearPrevision LinearPrevision::uniform(SpacePtr space) {
  const std::size_t n = space->size();
  return LinearPrevision(std::move(space), RationalVector(n, Rational(1) / n));
}

LinearPrevision LinearPrevision::point_mass(SpacePtr space, std::size_t atom) {
  RationalVector pmf(space->size(), Rational(0));
  pmf.at(atom) = 1;
  return LinearPrevision(std::move(space), std::move(pmf));
}

Rational LinearPrevision::operator()(const Gamble& f) const {
  require_same_space(space_, f.space());
  return dot(pmf_, f.values());
}

Rational LinearPrevision::probability(const Event& e) const {
  require_same_space(space_, e.space());
  Rational total = 0;
  for (std::size_t i = 0; i < pmf_.size(); ++i) {
    if (e.contains(i)) total += pmf_[i];
  }
  return total;
}

// ------------------------------------------------------------- CredalSet

namespace {

std::vector<LinearPrevision> canonical_vertices(std::vector<LinearPrevision> vertices) {
  if (vertices.empty()) throw InvalidModel("credal set needs at least one vertex");
  const SpacePtr& space = vertices.front().space();
  for (const auto& v : vertices) {
    if (!same_space(space, v.space())) throw SpaceMismatch("credal vertices live on different spaces");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

void check_constraint_shape(const SpacePtr& space, const std::vector<LinearConstraint>& constraints) {
  for (const auto& c : constraints) {
    if (c.coeffs.size() != space->size()) {
      throw InvalidModel("credal constraint has " + std::to_string(c.coeffs.size()) +
                         " coefficients for " + std::to_string(space->size()) + " atoms");
    }
  }
}

}  // namespace

CredalSet::CredalSet(std::vector<LinearPrevision> vertices)
    : vertices_(canonical_vertices(std::move(vertices))) {
  space_ = vertices_.front().space();
}

CredalSet::CredalSet(std::vector<LinearPrevision> vertices, std::vector<LinearConstraint> constraints)
    : CredalSet(std::move(vertices)) {
  check_constraint_shape(space_, constraints);
  constraints_ = std::move(constraints);
  const LinearProgram lp = polytope_program(Gamble::zero(space_));
  for (const auto& v : vertices_) {
    if (!satisfies(lp, v.pmf())) throw InvalidModel("a listed vertex violates the constraint form");
  }
}

CredalSet CredalSet::from_constraints(SpacePtr space, std::vector<LinearConstraint> constraints) {
  check_constraint_shape(space, constraints);
  CredalSet out;
  out.space_ = std::move(space);
  out.constraints_ = std::move(constraints);
  if (lp_minimize(out.polytope_program(Gamble::zero(out.space_))).status != LpStatus::optimal) {
    throw InvalidModel("constraint form describes an empty credal set");
  }
  return out;
}

CredalSet CredalSet::vacuous(SpacePtr space) {
  std::vector<LinearPrevision> vertices;
  for (std::size_t i = 0; i < space->size(); ++i) vertices.push_back(LinearPrevision::point_mass(space, i));
  return CredalSet(std::move(vertices));
}

const std::vector<LinearPrevision>& CredalSet::vertices() const {
  if (vertices_.empty()) throw VertexFormRequired();
  return vertices_;
}

LinearProgram CredalSet::polytope_program(const Gamble& objective) const {
  require_same_space(space_, objective.space());
  LinearProgram lp;
  lp.objective = objective.values();
  lp.constraints.push_back({RationalVector(space_->size(), Rational(1)), Relation::eq, 1});
  lp.constraints.insert(lp.constraints.end(), constraints_.begin(), constraints_.end());
  return lp;
}

ArchimedeanModel::ArchimedeanModel(std::vector<CredalSet> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidModel("lower_set model needs at least one member");
  for (const auto& m : members_) {
    if (!same_space(members_.front().space(), m.space())) {
      throw SpaceMismatch("lower_set members live on different spaces");
    }
  }
}

bool ArchimedeanModel::all_single_vertex() const {
  return std::all_of(members_.begin(), members_.end(), [](const CredalSet& m) { return m.is_single_vertex(); });
}

// ------------------------------------------------------------ evaluation

Rational prevision_eval(const LinearPrevision& model, const Gamble& f, Side) { return model(f); }

Rational lower_prevision_lp(const CredalSet& model, const Gamble& f) {
  const LpOutcome out = lp_minimize(model.polytope_program(f));
  if (out.status != LpStatus::optimal) throw std::logic_error("credal polytope LP is not optimal");
  return out.optimum;
}

std::pair<Rational, std::size_t> lower_envelope_attained(const CredalSet& model, const Gamble& f) {
  const auto& vs = model.vertices();
  require_same_space(model.space(), f.space());
  Rational best = vs[0](f);
  std::size_t arg = 0;
  for (std::size_t k = 1; k < vs.size(); ++k) {
    Rational v = vs[k](f);
    if (v < best) {
      best = std::move(v);
      arg = k;
    }
  }
  return {best, arg};
}

Rational lower_prevision(const CredalSet& model, const Gamble& f) {
  require_same_space(model.space(), f.space());
  if (model.has_vertices()) return lower_envelope_attained(model, f).first;
  return lower_prevision_lp(model, f);
}

Rational upper_prevision(const CredalSet& model, const Gamble& f) { return -lower_prevision(model, -f); }

Rational prevision_eval(const CredalSet& model, const Gamble& f, Side side) {
  return side == Side::lower ? lower_prevision(model, f) : upper_prevision(model, f);
}

bool is_precise_on(const CredalSet& model, const Gamble& f) {
  return lower_prevision(model, f) == upper_prevision(model, f);
}

LinearPrevision pushforward(const LinearPrevision& p, const Variable& z) {
  require_same_space(p.space(), z.space());
  RationalVector pmf(z.codomain_size(), Rational(0));
  for (std::size_t i = 0; i < p.pmf().size(); ++i) pmf[z.value_index(i)] += p.mass(i);
  return LinearPrevision(z.codomain_space(), std::move(pmf));
}

// ------------------------------------------------------ LP1-LP8 checking

PropertyReport check_lower_prevision_properties(const CredalSet& model,
                                                const std::vector<PropertyInstance>& instances) {
  PropertyReport report;
  auto low = [&](const Gamble& h) { return lower_prevision(model, h); };
  auto upp = [&](const Gamble& h) { return upper_prevision(model, h); };

  for (const auto& in : instances) {
    ++report.instances;
    const Gamble& f = in.f;
    const Gamble& g = in.g;
    auto fail = [&](const char* id, std::string detail, std::vector<Gamble> gs, std::vector<Rational> ss = {}) {
      report.violations.push_back({id, std::move(detail), std::move(gs), std::move(ss)});
    };
    const Rational lf = low(f), lg = low(g), uf = upp(f), ug = upp(g);
    const Gamble sum = f + g;
    const Rational ls = low(sum), us = upp(sum);

    if (lf < f.min()) fail("LP1", "lower " + to_string(lf) + " below min " + to_string(f.min()), {f});

    if (in.lambda.sign() > 0 && low(in.lambda * f) != in.lambda * lf) {
      fail("LP2", "lowP(lambda f) != lambda lowP(f)", {f}, {in.lambda});
    }

    if (ls < lf + lg) fail("LP3", "lowP(f+g) < lowP(f) + lowP(g)", {f, g});

    if (!(f.min() <= lf && lf <= uf && uf <= f.max())) fail("LP4", "min <= lower <= upper <= max broken", {f});

    // LP5 on the pointwise minimum, which is dominated by both f and g.
    RationalVector mv(f.size());
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] = std::min(f[i], g[i]);
    const Gamble m(f.space(), std::move(mv));
    const Rational lm = low(m);
    if (lm > lf || lm > lg) fail("LP5", "monotonicity broken under pointwise minimum", {f, g});

    if (low(f + in.mu) != lf + in.mu) fail("LP6", "lowP(f + mu) != lowP(f) + mu", {f}, {in.mu});

    const Gamble diff = f - g;
    const Rational sup_abs = std::max(diff.max(), -diff.min());
    if (abs(lf - lg) > sup_abs) fail("LP7", "Lipschitz bound broken", {f, g});

    if (!(lf + lg <= ls && ls <= lf + ug && lf + ug <= us && us <= uf + ug)) {
      fail("LP8", "mixed additivity chain broken", {f, g});
    }
  }
  return report;
}

PropertyReport check_lower_prevision_properties(const CredalSet& model, std::size_t samples,
                                                std::uint64_t seed) {
  if (samples == 0) throw PreconditionFailed("sample size must be at least 1");
  Rng rng(seed);
  std::vector<PropertyInstance> instances;
  instances.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    Gamble f = random_gamble(rng, model.space());
    Gamble g = random_gamble(rng, model.space());
    Rational lambda = Rational(rng.uniform_int(1, 12)) / rng.uniform_int(1, 6);
    Rational mu = rng.lattice(-3, 3, 6);
    instances.push_back({std::move(f), std::move(g), std::move(lambda), std::move(mu)});
  }
  return check_lower_prevision_properties(model, instances);
}

}  // namespace credal
