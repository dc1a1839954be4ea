#include "credal/json_io.hpp"

#include "credal/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace credal {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json space_to_json(const SpacePtr& space) { return space->atoms(); }

SpacePtr space_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("space must be an array of atom labels");
  std::vector<std::string> atoms;
  for (const auto& a : j) {
    if (!a.is_string()) throw ParseError("atom labels must be strings");
    atoms.push_back(a.get<std::string>());
  }
  return FiniteSpace::make(std::move(atoms));
}

namespace {

RationalVector per_atom(const SpacePtr& space, const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object atom -> rational");
  RationalVector v(space->size());
  std::vector<bool> seen(space->size(), false);
  for (const auto& [atom, value] : j.items()) {
    const auto i = space->find(atom);
    if (!i) throw ParseError(std::string(what) + " names unknown atom '" + atom + "'");
    v[*i] = rational_from_json(value);
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError(std::string(what) + " is missing atom '" + space->atom(i) + "'");
  }
  return v;
}

Json per_atom_json(const SpacePtr& space, const RationalVector& v) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) j[space->atom(i)] = to_json(v[i]);
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Gamble& g) { return per_atom_json(g.space(), g.values()); }

Gamble gamble_from_json(const SpacePtr& space, const Json& j) { return Gamble(space, per_atom(space, j, "gamble")); }

Json to_json(const Event& e) { return e.labels(); }

Event event_from_json(const SpacePtr& space, const Json& j) {
  if (!j.is_array()) throw ParseError("event must be an array of atom labels");
  std::vector<std::string> labels;
  for (const auto& a : j) {
    if (!a.is_string()) throw ParseError("event atoms must be strings");
    labels.push_back(a.get<std::string>());
  }
  return Event::from_labels(space, labels);
}

Json to_json(const OptionSet& a) {
  Json j = Json::array();
  for (const auto& g : a) j.push_back(to_json(g));
  return j;
}

OptionSet option_set_from_json(const SpacePtr& space, const Json& j, const std::map<std::string, Gamble>& named) {
  if (!j.is_array()) throw ParseError("option set must be an array of gambles");
  OptionSet out(space);
  for (const auto& item : j) {
    if (item.is_string()) {
      const auto it = named.find(item.get<std::string>());
      if (it == named.end()) throw ParseError("unknown gamble '" + item.get<std::string>() + "'");
      out.insert(it->second);
    } else {
      out.insert(gamble_from_json(space, item));
    }
  }
  return out;
}

Json to_json(const Variable& z) {
  Json assignment = Json::object();
  for (std::size_t i = 0; i < z.space()->size(); ++i) {
    assignment[z.space()->atom(i)] = z.codomain()[z.value_index(i)];
  }
  return {{"codomain", z.codomain()}, {"assignment", assignment}};
}

Variable variable_from_json(const SpacePtr& space, const Json& j) {
  std::vector<std::string> codomain;
  for (const auto& c : field(j, "codomain")) codomain.push_back(c.get<std::string>());
  const Json& as = field(j, "assignment");
  if (!as.is_object()) throw ParseError("assignment must be an object atom -> label");
  std::vector<std::string> labels(space->size());
  std::vector<bool> seen(space->size(), false);
  for (const auto& [atom, label] : as.items()) {
    const auto i = space->find(atom);
    if (!i) throw ParseError("assignment names unknown atom '" + atom + "'");
    labels[*i] = label.get<std::string>();
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError("assignment is missing atom '" + space->atom(i) + "'");
  }
  return Variable::from_labels(space, std::move(codomain), labels);
}

Json to_json(const LinearPrevision& p) { return {{"kind", "linear"}, {"pmf", per_atom_json(p.space(), p.pmf())}}; }

namespace {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::ge: return ">=";
    case Relation::le: return "<=";
    case Relation::eq: return "=";
  }
  return "?";
}

Relation relation_from(const std::string& s) {
  if (s == ">=") return Relation::ge;
  if (s == "<=") return Relation::le;
  if (s == "=" || s == "==") return Relation::eq;
  throw ParseError("unknown relation '" + s + "'");
}

CredalSet credal_from_json(const SpacePtr& space, const Json& j) {
  std::vector<LinearPrevision> vertices;
  std::vector<LinearConstraint> constraints;
  if (j.contains("vertices")) {
    for (const auto& v : j.at("vertices")) vertices.emplace_back(space, per_atom(space, v, "vertex"));
  }
  if (j.contains("constraints")) {
    for (const auto& c : j.at("constraints")) {
      RationalVector coeffs(space->size(), Rational(0));
      for (const auto& [atom, value] : field(c, "coeffs").items()) coeffs[space->index(atom)] = rational_from_json(value);
      constraints.push_back({std::move(coeffs), relation_from(field(c, "rel").get<std::string>()),
                             rational_from_json(field(c, "rhs"))});
    }
  }
  if (vertices.empty() && constraints.empty()) throw ParseError("credal model needs vertices or constraints");
  if (constraints.empty()) return CredalSet(std::move(vertices));
  if (vertices.empty()) return CredalSet::from_constraints(space, std::move(constraints));
  return CredalSet(std::move(vertices), std::move(constraints));
}

}  // namespace

Json to_json(const CredalSet& c) {
  Json j = {{"kind", "credal"}};
  if (c.has_vertices()) {
    Json vs = Json::array();
    for (const auto& v : c.vertices()) vs.push_back(per_atom_json(c.space(), v.pmf()));
    j["vertices"] = vs;
  }
  if (c.has_constraints()) {
    Json cs = Json::array();
    for (const auto& row : c.constraints()) {
      Json coeffs = Json::object();
      for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        if (!row.coeffs[i].is_zero()) coeffs[c.space()->atom(i)] = to_json(row.coeffs[i]);
      }
      cs.push_back({{"coeffs", coeffs}, {"rel", relation_name(row.rel)}, {"rhs", to_json(row.rhs)}});
    }
    j["constraints"] = cs;
  }
  return j;
}

Json to_json(const ChoiceModel& m) {
  switch (kind_of(m)) {
    case ModelKind::linear: return to_json(std::get<LinearPrevision>(m));
    case ModelKind::credal: return to_json(std::get<CredalSet>(m));
    case ModelKind::lower_set: {
      Json members = Json::array();
      for (const auto& c : std::get<ArchimedeanModel>(m).members()) members.push_back(to_json(c));
      return {{"kind", "lower_set"}, {"members", members}};
    }
  }
  return nullptr;
}

ChoiceModel model_from_json(const SpacePtr& space, const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "linear") return LinearPrevision(space, per_atom(space, field(j, "pmf"), "pmf"));
  if (kind == "credal") return credal_from_json(space, j);
  if (kind == "lower_set") {
    std::vector<CredalSet> members;
    for (const auto& m : field(j, "members")) {
      const std::string mk = m.value("kind", "credal");
      if (mk == "linear") members.emplace_back(LinearPrevision(space, per_atom(space, field(m, "pmf"), "pmf")));
      else if (mk == "credal") members.push_back(credal_from_json(space, m));
      else throw ParseError("lower_set member of unknown kind '" + mk + "'");
    }
    return ArchimedeanModel(std::move(members));
  }
  throw ParseError("unknown model kind '" + kind + "'");
}

ModelFile model_file_from_json(const Json& j) {
  SpacePtr space = space_from_json(field(j, "space"));
  ModelFile f{space, model_from_json(space, field(j, "model")), {}, {}, {}, {}};
  if (j.contains("variables")) {
    for (const auto& [name, v] : j.at("variables").items()) f.variables.emplace(name, variable_from_json(space, v));
  }
  if (j.contains("events")) {
    for (const auto& [name, e] : j.at("events").items()) f.events.emplace(name, event_from_json(space, e));
  }
  if (j.contains("gambles")) {
    for (const auto& [name, g] : j.at("gambles").items()) f.gambles.emplace(name, gamble_from_json(space, g));
  }
  if (j.contains("option_sets")) {
    for (const auto& [name, a] : j.at("option_sets").items()) {
      f.option_sets.emplace(name, option_set_from_json(space, a, f.gambles));
    }
  }
  return f;
}

Json to_json(const ModelFile& f) {
  Json j = {{"space", space_to_json(f.space)}, {"model", to_json(f.model)}};
  if (!f.variables.empty()) {
    for (const auto& [name, v] : f.variables) j["variables"][name] = to_json(v);
  }
  if (!f.events.empty()) {
    for (const auto& [name, e] : f.events) j["events"][name] = to_json(e);
  }
  if (!f.gambles.empty()) {
    for (const auto& [name, g] : f.gambles) j["gambles"][name] = to_json(g);
  }
  if (!f.option_sets.empty()) {
    for (const auto& [name, a] : f.option_sets) j["option_sets"][name] = to_json(a);
  }
  return j;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("model file '" + path + "': " + e.what());
  }
  try {
    return model_file_from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError("model file '" + path + "': " + e.what());
  }
}

// --------------------------------------------------------------- witnesses

Json to_json(const EventGamble& f) {
  return {{"event", to_json(f.event)}, {"lambda", to_json(f.lambda)}, {"mu", to_json(f.mu)},
          {"gamble", to_json(f.gamble())}};
}

Json to_json(const EventWitness& w) {
  return {{"f", to_json(w.f)},
          {"member", w.member},
          {"lower_coA_f", to_json(w.low_co_a)},
          {"lower_minus_A_f", to_json(w.low_minus_a)},
          {"epsilon", to_json(w.epsilon)},
          {"replay_option_set", to_json(w.replay)}};
}

namespace {

Json subset_json(const SpacePtr& codomain, const std::vector<bool>& bits) {
  Json j = Json::array();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) j.push_back(codomain->atom(i));
  }
  return j;
}

}  // namespace

Json to_json(const VariableWitness& w, const Variable& x, const Variable& y) {
  return {{"first_subset", subset_json(x.codomain_space(), w.first_subset)},
          {"second_subset", subset_json(y.codomain_space(), w.second_subset)},
          {"event_witness", to_json(w.event)}};
}

Json to_json(const IndependenceVerdict& v) {
  Json j = {{"holds", v.holds}, {"route", to_string(v.route)}};
  if (v.clause != Clause::none) j["clause"] = to_string(v.clause);
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.event_witness) j["witness"] = to_json(*v.event_witness);
  return j;
}

Json to_json(const PartitionWitness& w, const Variable& x) {
  Json cells = Json::array();
  for (const auto& c : w.cells) cells.push_back(subset_json(x.codomain_space(), c));
  Json gambles = Json::array();
  for (const auto& g : w.gambles) gambles.push_back(to_json(g));
  return {{"partition", cells},           {"gambles", gambles},
          {"member", w.member},           {"worst", to_json(w.worst)},
          {"epsilon", to_json(w.epsilon)}, {"replay_option_set", to_json(w.replay)},
          {"guided", w.guided}, {"trial", w.trial}};
}

Json to_json(const MixingWitness& w) {
  return {{"f", to_json(w.f)}, {"g", to_json(w.g)}, {"B", to_json(w.B)}, {"A", to_json(w.A)}, {"trial", w.trial}};
}

Json to_json(const ChoiceResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json pref = Json::array();
    for (const auto& g : c.preferred) pref.push_back(to_json(g));
    certs.push_back({{"option", to_json(c.option)}, {"preferred", pref}});
  }
  return {{"chosen", to_json(r.chosen)}, {"rejected", to_json(r.rejected)}, {"certificates", certs}};
}

Json to_json(const CoherenceReport& r) {
  Json axioms = Json::object();
  for (const auto& a : r.axioms) {
    Json violations = Json::array();
    for (const auto& v : a.violations) {
      Json inputs = Json::array();
      for (const auto& s : v.inputs) inputs.push_back(to_json(s));
      violations.push_back({{"inputs", inputs}, {"expected", v.expected}, {"got", v.got}});
    }
    axioms[a.axiom] = {{"instances", a.instances}, {"violations", violations}};
  }
  return {{"ok", r.ok()}, {"axioms", axioms}};
}

Json to_json(const PropertyReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json gs = Json::array();
    for (const auto& g : v.gambles) gs.push_back(to_json(g));
    Json ss = Json::array();
    for (const auto& s : v.scalars) ss.push_back(to_json(s));
    violations.push_back({{"property", v.property}, {"detail", v.detail}, {"gambles", gs}, {"scalars", ss}});
  }
  return {{"ok", r.ok()}, {"instances", r.instances}, {"violations", violations}};
}

Json to_json(const FactorizationReport& r) {
  return {{"ok", r.ok()},           {"precondition", r.precondition}, {"exact", r.exact},
          {"samples", r.samples}, {"sample_failures", r.sample_failures}, {"detail", r.detail}};
}

Json to_json(const MarginalReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json cj = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    clauses.push_back(cj);
  }
  Json j = {{"ok", r.ok()}, {"clauses", clauses}};
  if (r.marginal) j["marginal"] = to_json(*r.marginal);
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace credal
