#pragma once

#include "credal/axioms.hpp"
#include "credal/independence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace credal {

/// X x Y with atoms ordered x-major, labelled by concatenating the two value
/// labels, and its two coordinate variables.
struct ProductSpace {
  SpacePtr space;
  Variable x;
  Variable y;

  static ProductSpace make(std::vector<std::string> x_values, std::vector<std::string> y_values);

  std::size_t atom(std::size_t xi, std::size_t yi) const { return xi * y.codomain_size() + yi; }
  /// The product measure of an X-pmf and a Y-pmf.
  LinearPrevision product(const RationalVector& px, const RationalVector& py) const;
};

/// Pushes every member forward vertex by vertex onto codomain(Z). Linear
/// models stay linear, credal sets stay credal, lower_sets stay lower_sets.
ChoiceModel distribution_model(const ChoiceModel& model, const Variable& z);

enum class ClauseStatus { pass, fail, skipped };
std::string to_string(ClauseStatus s);

struct MarginalClause {
  std::string name;
  ClauseStatus status = ClauseStatus::skipped;
  std::string detail;
};

struct MarginalReport {
  std::vector<MarginalClause> clauses;  // five, in order
  std::optional<ChoiceModel> marginal;   // Y-distribution model
  std::optional<IndependenceVerdict> irrelevance;
  bool ok() const;
  /// Clauses 1 and 2 both pass.
  bool premises() const;
};

/// (1) X credibly indeterminate; (2) X S-irrelevant to Y; then (3) every
/// member has a precise Y-distribution; (4) the Y-distribution model is a set
/// of single-vertex members; (5) no mixing violation on it within `trials`.
/// Outside survey mode a failed premise throws PreconditionFailed.
MarginalReport corollary1_check(const ChoiceModel& model, const Variable& x, const Variable& y,
                                 std::size_t trials = 1000, std::uint64_t seed = 1, bool survey = true);

}  // namespace credal
