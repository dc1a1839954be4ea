#pragma once

// Canonical JSON encodings. Object keys come out sorted and rationals as
// reduced "p/q" or "n" strings, so dumps are byte-stable.

#include "credal/axioms.hpp"
#include "credal/independence.hpp"
#include "credal/marginals.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace credal {

using Json = nlohmann::json;

Json to_json(const Rational& r);
/// Accepts "p/q" or "n" strings and JSON integers; rejects floats.
Rational rational_from_json(const Json& j);

Json to_json(const Gamble& g);
/// Object atom -> rational; every atom of the space must be present.
Gamble gamble_from_json(const SpacePtr& space, const Json& j);

Json to_json(const Event& e);
Event event_from_json(const SpacePtr& space, const Json& j);

Json to_json(const OptionSet& a);
OptionSet option_set_from_json(const SpacePtr& space, const Json& j,
                               const std::map<std::string, Gamble>& named = {});

Json to_json(const Variable& z);
Variable variable_from_json(const SpacePtr& space, const Json& j);

Json to_json(const LinearPrevision& p);
Json to_json(const CredalSet& c);
Json to_json(const ChoiceModel& m);
ChoiceModel model_from_json(const SpacePtr& space, const Json& j);

Json space_to_json(const SpacePtr& space);
SpacePtr space_from_json(const Json& j);

struct ModelFile {
  SpacePtr space;
  ChoiceModel model;
  std::map<std::string, Variable> variables;
  std::map<std::string, Event> events;
  std::map<std::string, Gamble> gambles;
  std::map<std::string, OptionSet> option_sets;
};

ModelFile model_file_from_json(const Json& j);
Json to_json(const ModelFile& f);
ModelFile load_model_file(const std::string& path);

Json to_json(const EventGamble& f);
Json to_json(const EventWitness& w);
Json to_json(const VariableWitness& w, const Variable& x, const Variable& y);
Json to_json(const IndependenceVerdict& v);
Json to_json(const PartitionWitness& w, const Variable& x);
Json to_json(const MixingWitness& w);
Json to_json(const ChoiceResult& r);
Json to_json(const CoherenceReport& r);
Json to_json(const PropertyReport& r);
Json to_json(const FactorizationReport& r);
Json to_json(const MarginalReport& r);

/// Two-space-indent dump with a trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace credal
