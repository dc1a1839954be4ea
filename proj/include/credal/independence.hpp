#pragma once

// Triviality, credibility, classical independence, and S-irrelevance /
// S-independence for events and variables.

#include "credal/choice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace credal {

struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval(Rational l, Rational h);
  bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

/// [lo, hi] (.) c = [min(lo c, hi c), max(lo c, hi c)].
RationalInterval interval_product(const RationalInterval& i, const Rational& c);

/// upper(E) = 0 or upper(co E) = 0.
bool is_trivial(const CredalSet& model, const Event& e);
/// At most one codomain value has a preimage of positive upper probability.
bool is_trivial(const CredalSet& model, const Variable& z);

struct Credibility {
  bool credible = false;
  bool credibly_indeterminate = false;
  /// For variables: the first codomain subset (bit mask order) whose
  /// preimage is credibly indeterminate.
  std::optional<std::vector<bool>> subset;
};

/// Event: credible iff min over members of lowP(E) > 0; indeterminate iff
/// E and co E are both credible.
Credibility credibility_status(const ChoiceModel& model, const Event& e);
/// Variable: credible iff some non-empty proper subset has a credible
/// preimage; indeterminate iff some preimage is credibly indeterminate.
Credibility credibility_status(const ChoiceModel& model, const Variable& z);

bool classical_independent(const LinearPrevision& p, const Event& a, const Event& b);
/// Per-value factorization of the joint distribution.
bool classical_independent(const LinearPrevision& p, const Variable& x, const Variable& y);
/// Factorization over every pair of codomain subsets.
bool classical_independent_all_subsets(const LinearPrevision& p, const Variable& x, const Variable& y);

enum class Method { direct, characterization };
std::string to_string(Method m);

enum class Clause {
  none,
  classical,                // linear model, product rule
  trivial,                  // first event or variable is trivial
  precision_factorization,  // precise second, factorizing vertices
};
std::string to_string(Clause c);

/// A gamble f on the second event with lowP(I_coA f) < 0 and
/// lowP(-I_A f) < 0 in one member.
struct EventWitness {
  EventGamble f;
  std::size_t member = 0;
  Rational low_co_a;       // lowP(I_coA f) in that member
  Rational low_minus_a;    // lowP(-I_A f) in that member
  /// Half the smaller violation: {I_coA f + eps, -I_A f + eps} stays outside
  /// the member's K.
  Rational epsilon;
  OptionSet replay;        // that option set
};

struct VariableWitness {
  std::vector<bool> first_subset;   // over codomain(X)
  std::vector<bool> second_subset;  // over codomain(Y)
  EventWitness event;
};

struct IndependenceVerdict {
  bool holds = true;
  Method route = Method::direct;
  Clause clause = Clause::none;
  std::optional<EventWitness> event_witness;
  std::optional<VariableWitness> variable_witness;
  std::string detail;
};

/// Event level. Direct: the exact two-parameter cone test over ordered vertex
/// pairs. Characterization: triviality, or shared second-event probability
/// with factorizing vertices (classical independence for linear models).
IndependenceVerdict s_irrelevant(const ChoiceModel& model, const Event& a, const Event& b, Method method);

/// Largest |codomain(X)| + |codomain(Y)| handled exactly; 16 unless the
/// CREDAL_CHOICE_SUBSET_CAP environment variable says otherwise.
std::size_t subset_cap();

/// Variable level. Direct: conjunction of the event-level direct verdicts over
/// subset pairs, each complement pair represented once. Characterization:
/// X trivial, or Y precise with per-value factorization in every vertex.
/// Throws CapExceeded beyond `cap`.
IndependenceVerdict s_irrelevant(const ChoiceModel& model, const Variable& x, const Variable& y, Method method,
                                 std::size_t cap = subset_cap());

struct IndependencePair {
  bool holds = true;
  IndependenceVerdict forward;   // first -> second
  IndependenceVerdict backward;  // second -> first
};

IndependencePair s_independent(const ChoiceModel& model, const Event& a, const Event& b, Method method);
IndependencePair s_independent(const ChoiceModel& model, const Variable& x, const Variable& y, Method method,
                               std::size_t cap = subset_cap());

/// The option set g_E = sum over C != E of I_C(X)[s_E(Y) - s_C(Y)], one
/// gamble per cell, shifted by epsilon.
std::vector<Gamble> partition_option_gambles(const Variable& x, const Variable& y,
                                             const std::vector<std::vector<bool>>& cells,
                                             const std::vector<Gamble>& gambles);

struct PartitionWitness {
  std::vector<std::vector<bool>> cells;  // partition of codomain(X)
  std::vector<Gamble> gambles;           // s_E on codomain(Y), one per cell
  std::size_t member = 0;
  Rational worst;                        // max over cells of lowP(g_E), < 0
  Rational epsilon;                      // -worst / 2
  OptionSet replay;                      // {g_E + epsilon}
  bool guided = false;
  std::size_t trial = 0;
};

/// Max over cells of lowP(g_E) in one member.
Rational partition_criterion(const CredalSet& member, const Variable& x, const Variable& y,
                             const std::vector<std::vector<bool>>& cells, const std::vector<Gamble>& gambles);

/// Falsifier for variable-level S-irrelevance. Tries the two-cell partitions
/// built from event-level witnesses first, then `trials` random partitions
/// with random cell gambles.
std::optional<PartitionWitness> s_irrelevant_variables_sampled(const ChoiceModel& model, const Variable& x,
                                                               const Variable& y, std::size_t trials,
                                                               std::uint64_t seed);

/// Common pushforward of every vertex, when there is one.
std::optional<LinearPrevision> precise_distribution(const CredalSet& model, const Variable& z);

struct FactorizationReport {
  bool precondition = false;  // Y has a precise distribution
  std::string detail;
  bool exact = false;         // every vertex is its X-marginal times the Y-marginal
  std::size_t samples = 0;
  std::size_t sample_failures = 0;
  bool ok() const { return precondition && exact && sample_failures == 0; }
};

/// Vertex-level factorization plus sampled checks of
/// lowupp(f(X) g(Y)) = lowupp(f(X)) (.) P_Y(g).
FactorizationReport factorization_check(const CredalSet& model, const Variable& x, const Variable& y,
                                        std::size_t samples, std::uint64_t seed);

}  // namespace credal
