#pragma once

#include "credal/choice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace credal {

struct AxiomViolation {
  std::vector<OptionSet> inputs;
  bool expected = true;
  bool got = false;
};

struct AxiomReport {
  std::string axiom;  // "K0" .. "K4"
  std::size_t instances = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct CoherenceReport {
  std::vector<AxiomReport> axioms;
  bool ok() const;
  std::size_t instances() const;
};

/// K0-K4 on `instances` generated instances per axiom, each checked through
/// k_member on constructed option sets.
CoherenceReport check_coherence_axioms(const ChoiceModel& model, std::size_t instances, std::uint64_t seed);

/// Does (A in K => B in K) hold? Throws PreconditionFailed unless B is a
/// subset of A and A lies in posi(B).
bool check_mixing_axiom_instance(const ChoiceModel& model, const OptionSet& B, const OptionSet& A);

struct MixingWitness {
  Gamble f;
  Gamble g;
  OptionSet B;  // {f, g}
  OptionSet A;  // {f, g, f + g}
  std::size_t trial = 0;
};

/// Targeted sweep over vertex-disagreement directions of every member, then
/// `trials` seeded random pairs. Each sweep candidate counts as one trial.
/// Every returned witness has been rechecked with check_mixing_axiom_instance.
std::optional<MixingWitness> find_mixing_violation(const ChoiceModel& model, std::size_t trials,
                                                   std::uint64_t seed);

}  // namespace credal
