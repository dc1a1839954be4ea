// credal-choice: command-line front end.
//
// Exit status: 0 the property holds (or the command succeeded), 1 it fails
// (the witness goes to standard output), 2 usage or data error.

#include "credal/errors.hpp"
#include "credal/json_io.hpp"
#include "credal/verify_suite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace credal;

namespace {

struct Common {
  std::string model_path;
  bool json = false;
};

// Output: under --json one canonical document; otherwise short text lines
// followed by the JSON payload when there is one, so witnesses can be
// copied back in.
int emit(const Common& c, bool holds, const Json& doc, const std::string& text) {
  if (c.json) {
    std::cout << canonical_dump(doc);
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    if (doc.contains("witness")) std::cout << "witness:\n" << canonical_dump(doc.at("witness"));
  }
  return holds ? 0 : 1;
}

Json parse_inline(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    throw ParseError("cannot parse '" + s + "' as a name or JSON: " + e.what());
  }
}

Gamble resolve_gamble(const ModelFile& f, const std::string& s) {
  if (auto it = f.gambles.find(s); it != f.gambles.end()) return it->second;
  return gamble_from_json(f.space, parse_inline(s));
}

OptionSet resolve_option_set(const ModelFile& f, const std::string& s) {
  if (auto it = f.option_sets.find(s); it != f.option_sets.end()) return it->second;
  return option_set_from_json(f.space, parse_inline(s), f.gambles);
}

Event resolve_event(const ModelFile& f, const std::string& s) {
  if (auto it = f.events.find(s); it != f.events.end()) return it->second;
  return event_from_json(f.space, parse_inline(s));
}

Variable resolve_variable(const ModelFile& f, const std::string& s) {
  if (auto it = f.variables.find(s); it != f.variables.end()) return it->second;
  return variable_from_json(f.space, parse_inline(s));
}

std::string str(const Rational& r) { return to_string(r); }

// ------------------------------------------------------------ subcommands

int cmd_eval(const Common& c, const std::string& gamble, const std::string& side_name) {
  const ModelFile f = load_model_file(c.model_path);
  const Gamble g = resolve_gamble(f, gamble);
  const Side side = side_name == "upper" ? Side::upper : Side::lower;
  Json values = Json::array();
  std::ostringstream text;
  const auto members = members_of(f.model);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Rational v = prevision_eval(members[i], g, side);
    values.push_back(to_json(v));
    text << (members.size() > 1 ? "member " + std::to_string(i) + ": " : std::string()) << side_name << " = " << str(v)
         << "\n";
  }
  Json doc = {{"side", side_name}, {"kind", to_string(kind_of(f.model))}};
  if (kind_of(f.model) == ModelKind::lower_set) doc["members"] = values;
  else doc["value"] = values.at(0);
  return emit(c, true, doc, text.str());
}

int cmd_member(const Common& c, const std::string& set) {
  const ModelFile f = load_model_file(c.model_path);
  const OptionSet a = resolve_option_set(f, set);
  const bool in = k_member(f.model, a);
  Json doc = {{"member", in}};
  std::string text = in ? "A is in K" : "A is not in K";
  if (const auto slack = archimedean_slack(f.model, a)) {
    doc["slack"] = to_json(*slack);
    text += " (slack " + str(*slack) + ")";
  }
  return emit(c, in, doc, text);
}

int cmd_choose(const Common& c, const std::string& set, const std::string& criterion, bool dominance) {
  const ModelFile f = load_model_file(c.model_path);
  OptionSet a = resolve_option_set(f, set);
  if (dominance) a = dominance_filter(a);
  const ChoiceResult r = choose(f.model, a, parse_criterion(criterion));
  std::ostringstream text;
  text << "chosen " << r.chosen.size() << " of " << a.size() << " options\n" << canonical_dump(to_json(r.chosen));
  return emit(c, true, to_json(r), text.str());
}

int cmd_reject(const Common& c, const std::string& set, const std::string& gamble) {
  const ModelFile f = load_model_file(c.model_path);
  const OptionSet a = resolve_option_set(f, set);
  const Gamble g = resolve_gamble(f, gamble);
  if (!a.contains(g)) throw FNotInSet("the gamble is not an element of the option set");
  const bool rejected = rejected_by_duality(f.model, a, g);
  return emit(c, rejected, {{"rejected", rejected}}, rejected ? "f is rejected from A" : "f is not rejected from A");
}

int cmd_coherence(const Common& c, std::size_t instances, std::uint64_t seed) {
  const ModelFile f = load_model_file(c.model_path);
  const CoherenceReport rep = check_coherence_axioms(f.model, instances, seed);
  Json doc = to_json(rep);
  std::ostringstream text;
  for (const auto& a : rep.axioms) {
    text << a.axiom << ": " << a.instances << " instances, " << a.violations.size() << " violations\n";
  }
  if (!rep.ok()) doc["witness"] = doc;
  return emit(c, rep.ok(), doc, text.str());
}

int cmd_mixing(const Common& c, std::size_t trials, std::uint64_t seed) {
  const ModelFile f = load_model_file(c.model_path);
  const auto w = find_mixing_violation(f.model, trials, seed);
  Json doc = {{"violation_found", w.has_value()}, {"trials", trials}};
  if (w) doc["witness"] = to_json(*w);
  return emit(c, !w, doc, w ? "mixing violation found" : "no mixing violation within " + std::to_string(trials) + " trials");
}

struct IndependenceArgs {
  std::string level = "event";
  std::string kind = "s-irrelevance";
  std::string method = "direct";
  std::string first;
  std::string second;
};

std::vector<Method> routes(const std::string& m) {
  if (m == "both") return {Method::direct, Method::characterization};
  if (m == "characterization") return {Method::characterization};
  return {Method::direct};
}

int cmd_independence(const Common& c, const IndependenceArgs& args) {
  const ModelFile f = load_model_file(c.model_path);
  const bool variable_level = args.level == "variable";
  std::optional<Event> a, b;
  std::optional<Variable> x, y;
  if (variable_level) {
    x = resolve_variable(f, args.first);
    y = resolve_variable(f, args.second);
  } else {
    a = resolve_event(f, args.first);
    b = resolve_event(f, args.second);
  }

  if (args.kind == "classical") {
    if (kind_of(f.model) != ModelKind::linear) throw CriterionMismatch("classical independence needs a linear model");
    const auto& p = std::get<LinearPrevision>(f.model);
    const bool holds = variable_level ? classical_independent(p, *x, *y) : classical_independent(p, *a, *b);
    return emit(c, holds, {{"holds", holds}, {"kind", "classical"}},
                holds ? "classically independent" : "not classically independent");
  }

  const bool pair = args.kind == "s-independence";
  auto verdict_json = [&](const IndependenceVerdict& v) {
    Json j = to_json(v);
    if (v.variable_witness) j["witness"] = to_json(*v.variable_witness, *x, *y);
    return j;
  };
  Json per_route = Json::object();
  std::optional<bool> agreed;
  Json witness;
  for (const Method m : routes(args.method)) {
    bool holds;
    Json j;
    if (pair) {
      const IndependencePair p = variable_level ? s_independent(f.model, *x, *y, m) : s_independent(f.model, *a, *b, m);
      holds = p.holds;
      j = {{"holds", p.holds}, {"forward", verdict_json(p.forward)}, {"backward", verdict_json(p.backward)}};
      if (witness.is_null() && !p.forward.holds) witness = j["forward"].value("witness", Json());
      if (witness.is_null() && !p.backward.holds) witness = j["backward"].value("witness", Json());
    } else {
      const IndependenceVerdict v = variable_level ? s_irrelevant(f.model, *x, *y, m) : s_irrelevant(f.model, *a, *b, m);
      holds = v.holds;
      j = verdict_json(v);
      if (witness.is_null() && j.contains("witness")) witness = j["witness"];
    }
    if (agreed && *agreed != holds) {
      throw std::logic_error("direct and characterization routes disagree");
    }
    agreed = holds;
    per_route[to_string(m)] = j;
  }
  Json doc = {{"holds", *agreed}, {"level", args.level}, {"kind", args.kind}, {"routes", per_route}};
  if (!witness.is_null()) doc["witness"] = witness;
  std::string text = args.kind + (*agreed ? " holds" : " fails");
  if (args.method == "both") text += " (routes agree)";
  return emit(c, *agreed, doc, text);
}

int cmd_credibility(const Common& c, const std::string& event, const std::string& variable, bool indeterminate) {
  const ModelFile f = load_model_file(c.model_path);
  const Credibility cr = variable.empty() ? credibility_status(f.model, resolve_event(f, event))
                                          : credibility_status(f.model, resolve_variable(f, variable));
  Json doc = {{"credible", cr.credible}, {"credibly_indeterminate", cr.credibly_indeterminate}};
  if (cr.subset) {
    const Variable z = resolve_variable(f, variable);
    Json s = Json::array();
    for (std::size_t i = 0; i < cr.subset->size(); ++i) {
      if ((*cr.subset)[i]) s.push_back(z.codomain()[i]);
    }
    doc["subset"] = s;
  }
  const bool holds = indeterminate ? cr.credibly_indeterminate : cr.credible;
  std::string text = std::string(cr.credible ? "credible" : "not credible") + ", " +
                     (cr.credibly_indeterminate ? "credibly indeterminate" : "not credibly indeterminate");
  return emit(c, holds, doc, text);
}

int cmd_trivial(const Common& c, const std::string& event, const std::string& variable) {
  const ModelFile f = load_model_file(c.model_path);
  bool trivial = true;
  for (const auto& m : members_of(f.model)) {
    trivial = trivial && (variable.empty() ? is_trivial(m, resolve_event(f, event))
                                           : is_trivial(m, resolve_variable(f, variable)));
  }
  return emit(c, trivial, {{"trivial", trivial}}, trivial ? "trivial" : "not trivial");
}

int cmd_marginalize(const Common& c, const std::string& variable) {
  const ModelFile f = load_model_file(c.model_path);
  const Variable z = resolve_variable(f, variable);
  const ModelFile out{z.codomain_space(), distribution_model(f.model, z), {}, {}, {}, {}};
  // The marginal is itself a model file, printed as JSON either way.
  std::cout << canonical_dump(to_json(out));
  return 0;
}

int cmd_corollary(const Common& c, const std::string& xs, const std::string& ys, std::size_t trials,
                  std::uint64_t seed) {
  const ModelFile f = load_model_file(c.model_path);
  const Variable x = resolve_variable(f, xs);
  const Variable y = resolve_variable(f, ys);
  const MarginalReport rep = corollary1_check(f.model, x, y, trials, seed, true);
  std::ostringstream text;
  for (const auto& cl : rep.clauses) {
    text << to_string(cl.status) << "  " << cl.name << (cl.detail.empty() ? "" : "  (" + cl.detail + ")") << "\n";
  }
  Json doc = to_json(rep);
  if (rep.irrelevance && rep.irrelevance->variable_witness) {
    doc["witness"] = to_json(*rep.irrelevance->variable_witness, x, y);
  }
  return emit(c, rep.ok(), doc, text.str());
}

int cmd_verify(const Common& c, const SuiteConfig& config) {
  const SuiteReport rep = run_verify_suite(config);
  if (c.json) std::cout << canonical_dump(rep.to_json(true));
  else std::cout << rep.to_text();
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact choice and independence checks for sets of desirable option sets"};
  app.require_subcommand(1);
  Common common;

  auto with_model = [&](CLI::App* sub) {
    sub->add_option("-m,--model", common.model_path, "model file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", common.json, "canonical JSON output");
  };
  std::function<int()> run;

  std::string gamble, set, side = "lower", criterion, event, variable, xs, ys;
  bool dominance = false;
  std::size_t instances = 200, trials = 1000;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand("eval", "lower or upper prevision of a gamble");
  with_model(eval);
  eval->add_option("-f,--gamble", gamble, "gamble name or inline JSON")->required();
  eval->add_option("--side", side)->check(CLI::IsMember({"lower", "upper"}));
  eval->callback([&] { run = [&] { return cmd_eval(common, gamble, side); }; });

  auto* member = app.add_subcommand("member", "is the option set in K");
  with_model(member);
  member->add_option("-A,--options", set, "option set name or inline JSON")->required();
  member->callback([&] { run = [&] { return cmd_member(common, set); }; });

  auto* choose_cmd = app.add_subcommand("choose", "chosen options under a criterion");
  with_model(choose_cmd);
  choose_cmd->add_option("-A,--options", set)->required();
  choose_cmd->add_option("--criterion", criterion, "meu | maximality | eadmissibility | lowerset")->required();
  choose_cmd->add_flag("--dominance", dominance, "drop pointwise dominated options first");
  choose_cmd->callback([&] { run = [&] { return cmd_choose(common, set, criterion, dominance); }; });

  auto* reject = app.add_subcommand("reject", "is f rejected from A");
  with_model(reject);
  reject->add_option("-A,--options", set)->required();
  reject->add_option("-f,--gamble", gamble)->required();
  reject->callback([&] { run = [&] { return cmd_reject(common, set, gamble); }; });

  auto* coherence = app.add_subcommand("check-coherence", "sampled K0-K4 instances");
  with_model(coherence);
  coherence->add_option("--instances", instances)->check(CLI::PositiveNumber);
  coherence->add_option("--seed", seed);
  coherence->callback([&] { run = [&] { return cmd_coherence(common, instances, seed); }; });

  auto* mixing = app.add_subcommand("find-mixing-violation", "search for a mixing violation");
  with_model(mixing);
  mixing->add_option("--trials", trials)->check(CLI::PositiveNumber);
  mixing->add_option("--seed", seed);
  mixing->callback([&] { run = [&] { return cmd_mixing(common, trials, seed); }; });

  IndependenceArgs ind;
  auto* independence = app.add_subcommand("check-independence", "event or variable independence");
  with_model(independence);
  independence->add_option("--level", ind.level)->check(CLI::IsMember({"event", "variable"}));
  independence->add_option("--kind", ind.kind)->check(CLI::IsMember({"s-irrelevance", "s-independence", "classical"}));
  independence->add_option("--method", ind.method)->check(CLI::IsMember({"direct", "characterization", "both"}));
  independence->add_option("--first", ind.first, "event or variable: name or inline JSON")->required();
  independence->add_option("--second", ind.second)->required();
  independence->callback([&] { run = [&] { return cmd_independence(common, ind); }; });

  auto add_target = [&](CLI::App* sub) {
    auto* e = sub->add_option("--event", event);
    auto* v = sub->add_option("--variable", variable);
    e->excludes(v);
    sub->callback([sub] {
      if (sub->count("--event") + sub->count("--variable") != 1) {
        throw CLI::ValidationError("exactly one of --event and --variable is required");
      }
    });
  };

  auto* credibility = app.add_subcommand("check-credibility", "credibility of an event or variable");
  with_model(credibility);
  add_target(credibility);
  bool credible_only = false;
  credibility->add_flag("--credible-only", credible_only, "exit 0 when credible, rather than credibly indeterminate");
  credibility->final_callback([&] { run = [&] { return cmd_credibility(common, event, variable, !credible_only); }; });

  auto* trivial = app.add_subcommand("check-trivial", "triviality of an event or variable");
  with_model(trivial);
  add_target(trivial);
  trivial->final_callback([&] { run = [&] { return cmd_trivial(common, event, variable); }; });

  auto* marginalize = app.add_subcommand("marginalize", "distribution model of a variable");
  with_model(marginalize);
  marginalize->add_option("--variable", variable)->required();
  marginalize->callback([&] { run = [&] { return cmd_marginalize(common, variable); }; });

  auto* corollary = app.add_subcommand("corollary1", "marginal mixingness under S-irrelevance");
  with_model(corollary);
  corollary->add_option("--x", xs)->required();
  corollary->add_option("--y", ys)->required();
  corollary->add_option("--trials", trials)->check(CLI::PositiveNumber);
  corollary->add_option("--seed", seed);
  corollary->callback([&] { run = [&] { return cmd_corollary(common, xs, ys, trials, seed); }; });

  SuiteConfig config;
  std::size_t suite_trials = 0;
  auto* verify = app.add_subcommand("verify", "run the randomized batteries");
  verify->add_option("--seed", config.seed);
  verify->add_option("--trials", suite_trials, "case count for every battery");
  verify->add_option("--battery", config.batteries, "battery name (repeatable)");
  verify->add_flag("--mutate-characterization", config.mutate_characterization,
                   "make the characterization route always answer holds");
  verify->add_flag("--json", common.json);
  verify->callback([&] {
    if (verify->count("--trials")) config.trials = suite_trials;
    run = [&] { return cmd_verify(common, config); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
