#pragma once

#include "credal/lp.hpp"
#include "credal/model_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace credal {

/// Expectation operator of a probability mass function on a finite space.
class LinearPrevision {
 public:
  /// Throws InvalidModel unless every mass is >= 0 and the masses sum to 1.
  LinearPrevision(SpacePtr space, RationalVector pmf);

  static LinearPrevision uniform(SpacePtr space);
  static LinearPrevision point_mass(SpacePtr space, std::size_t atom);

  const SpacePtr& space() const { return space_; }
  const RationalVector& pmf() const { return pmf_; }
  const Rational& mass(std::size_t atom) const { return pmf_[atom]; }

  Rational operator()(const Gamble& f) const;
  Rational probability(const Event& e) const;

  bool operator==(const LinearPrevision& other) const {
    return same_space(space_, other.space_) && pmf_ == other.pmf_;
  }
  bool operator<(const LinearPrevision& other) const { return pmf_ < other.pmf_; }

 private:
  SpacePtr space_;
  RationalVector pmf_;
};

/// Closed convex set of linear previsions. Given by its vertices, by linear
/// constraints on the mass function (on top of the simplex), or both. The
/// lower prevision it induces is the lower envelope over the set.
class CredalSet {
 public:
  /// Vertex form. Duplicates are collapsed; at least one vertex is required.
  explicit CredalSet(std::vector<LinearPrevision> vertices);
  explicit CredalSet(LinearPrevision single) : CredalSet(std::vector<LinearPrevision>{std::move(single)}) {}

  /// Constraint form. Throws InvalidModel when the polytope is empty.
  static CredalSet from_constraints(SpacePtr space, std::vector<LinearConstraint> constraints);

  /// Both forms; every vertex must satisfy every constraint.
  CredalSet(std::vector<LinearPrevision> vertices, std::vector<LinearConstraint> constraints);

  /// All point masses: the lower prevision is the minimum.
  static CredalSet vacuous(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  bool has_vertices() const { return !vertices_.empty(); }
  bool has_constraints() const { return !constraints_.empty(); }
  /// Throws VertexFormRequired for constraint-only sets.
  const std::vector<LinearPrevision>& vertices() const;
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool is_single_vertex() const { return vertices_.size() == 1; }

  /// Simplex plus the constraint rows, as an LP over the atom masses.
  LinearProgram polytope_program(const Gamble& objective) const;

 private:
  CredalSet() = default;
  SpacePtr space_;
  std::vector<LinearPrevision> vertices_;
  std::vector<LinearConstraint> constraints_;
};

/// A finite set of credal sets; its choice model is the intersection of the
/// members' models.
class ArchimedeanModel {
 public:
  explicit ArchimedeanModel(std::vector<CredalSet> members);

  const SpacePtr& space() const { return members_.front().space(); }
  const std::vector<CredalSet>& members() const { return members_; }
  bool all_single_vertex() const;

 private:
  std::vector<CredalSet> members_;
};

enum class Side { lower, upper };

Rational prevision_eval(const LinearPrevision& model, const Gamble& f, Side side = Side::lower);
/// Vertex minimum when vertices are known, otherwise the LP minimum.
Rational prevision_eval(const CredalSet& model, const Gamble& f, Side side = Side::lower);

Rational lower_prevision(const CredalSet& model, const Gamble& f);
Rational upper_prevision(const CredalSet& model, const Gamble& f);

/// Minimum over the listed vertices together with the index of a vertex
/// attaining it (the first one in vertex order).
std::pair<Rational, std::size_t> lower_envelope_attained(const CredalSet& model, const Gamble& f);

/// LP evaluation over the constraint form; the two routes must agree when a
/// set carries both forms.
Rational lower_prevision_lp(const CredalSet& model, const Gamble& f);

bool is_precise_on(const CredalSet& model, const Gamble& f);

/// Distribution of Z under P, as a prevision on Z's codomain.
LinearPrevision pushforward(const LinearPrevision& p, const Variable& z);

struct PropertyViolation {
  std::string property;  // "LP1" .. "LP8"
  std::string detail;
  std::vector<Gamble> gambles;
  std::vector<Rational> scalars;
};

struct PropertyReport {
  std::size_t instances = 0;
  std::vector<PropertyViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct PropertyInstance {
  Gamble f;
  Gamble g;
  Rational lambda;  // > 0, used by LP2
  Rational mu;      // any sign, used by LP6
};

/// Checks LP1-LP6 and LP8 on each instance, with LP7 replaced by the exact
/// Lipschitz bound |lowP(f) - lowP(g)| <= max|f - g|.
PropertyReport check_lower_prevision_properties(const CredalSet& model,
                                                const std::vector<PropertyInstance>& instances);
/// Same, on `samples` random instances drawn from `seed`.
PropertyReport check_lower_prevision_properties(const CredalSet& model, std::size_t samples,
                                                std::uint64_t seed);

}  // namespace credal
