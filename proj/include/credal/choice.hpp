#pragma once

#include "credal/previsions.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace credal {

using ChoiceModel = std::variant<LinearPrevision, CredalSet, ArchimedeanModel>;

enum class ModelKind { linear, credal, lower_set };

ModelKind kind_of(const ChoiceModel& model);
std::string to_string(ModelKind kind);
const SpacePtr& space_of(const ChoiceModel& model);

/// The model as a list of credal sets whose membership tests are intersected.
/// Linear models become one single-vertex set.
std::vector<CredalSet> members_of(const ChoiceModel& model);

enum class Criterion { meu, maximality, eadmissibility, lowerset };

std::string to_string(Criterion c);
Criterion parse_criterion(const std::string& name);

/// Why an option was rejected. For meu and maximality `preferred` holds one
/// gamble g with P(g) > P(f), resp. lowP(g - f) > 0. For the set-valued
/// criteria it holds one such g per member, in member order.
struct Certificate {
  Gamble option;
  std::vector<Gamble> preferred;
};

struct ChoiceResult {
  OptionSet chosen;
  OptionSet rejected;
  std::vector<Certificate> certificates;  // one per rejected option, in option order
};

/// Is A desirable: does it contain at least one desirable gamble, for every
/// member? The empty set never is.
bool k_member(const ChoiceModel& model, const OptionSet& options);

/// Rejection through the model: opt_minus(A, f) in K.
bool rejected_by_duality(const ChoiceModel& model, const OptionSet& options, const Gamble& f);

/// Throws CriterionMismatch when the criterion does not fit the model kind:
/// meu needs a linear model; maximality a linear or credal model;
/// eadmissibility a linear model or a lower_set of single-vertex members;
/// lowerset accepts every kind (credal and linear as one-member sets).
ChoiceResult choose(const ChoiceModel& model, const OptionSet& options, Criterion criterion);

/// min over members of max over f in A of lowP(f); nullopt when A is not in K.
std::optional<Rational> archimedean_slack(const ChoiceModel& model, const OptionSet& options);

/// Drops options that some other option dominates pointwise with a strict
/// inequality somewhere.
OptionSet dominance_filter(const OptionSet& options);

}  // namespace credal
