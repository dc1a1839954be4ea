#include "credal/verify_suite.hpp"

#include "credal/errors.hpp"
#include "credal/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace credal {

bool SuiteReport::ok() const {
  return std::all_of(batteries.begin(), batteries.end(), [](const BatteryResult& b) { return b.ok(); });
}

Json SuiteReport::to_json(bool with_runtime) const {
  Json bs = Json::array();
  for (const auto& b : batteries) {
    Json j = {{"name", b.name}, {"cases", b.cases}, {"failures", b.failures}, {"ok", b.ok()}, {"stats", b.stats},
              {"first_counterexample", b.first_counterexample}};
    if (with_runtime) j["seconds"] = b.seconds;
    bs.push_back(j);
  }
  Json j = {{"ok", ok()}, {"batteries", bs}};
  if (with_runtime) j["seconds"] = seconds;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const auto& b : batteries) {
    out << (b.ok() ? "PASS " : "FAIL ") << b.name << "  cases=" << b.cases << " failures=" << b.failures
        << " time=" << b.seconds << "s\n";
    if (!b.ok()) out << "  first counterexample: " << b.first_counterexample.dump() << "\n";
  }
  out << (ok() ? "all batteries pass" : "some batteries fail") << " (" << seconds << "s)\n";
  return out.str();
}

const std::vector<std::string>& battery_names() {
  static const std::vector<std::string> names = {"linear_events",         "credal_events", "complementation", "precise_collapse",
                                                 "mixing",           "coherence", "variable_level",  "marginal_mixing",
                                                 "lp_backend",       "lp_properties"};
  return names;
}

namespace {

// ------------------------------------------------------------ plumbing

struct CaseOutcome {
  bool failed = false;
  Json counterexample;
  std::vector<std::string> tags;
};

CaseOutcome fail_with(Json counterexample) { return {true, std::move(counterexample), {}}; }

void fold(BatteryResult& r, std::vector<CaseOutcome>&& outcomes) {
  for (auto& o : outcomes) {
    ++r.cases;
    for (const auto& t : o.tags) r.stats[t] = r.stats.value(t, 0) + 1;
    if (!o.failed) continue;
    if (r.failures++ == 0) r.first_counterexample = std::move(o.counterexample);
  }
}

template <typename F>
void run_cases(BatteryResult& r, std::size_t n, F&& fn) {
  fold(r, map_indices<CaseOutcome>(n, fn));
}

Json model_json(const ChoiceModel& m, const std::map<std::string, Event>& events = {},
                const std::map<std::string, Variable>& variables = {},
                const std::map<std::string, OptionSet>& option_sets = {}) {
  ModelFile f{space_of(m), m, variables, events, {}, option_sets};
  return to_json(f);
}

bool characterization(const SuiteConfig& c, const ChoiceModel& m, const Event& a, const Event& b) {
  if (c.mutate_characterization) return true;
  return s_irrelevant(m, a, b, Method::characterization).holds;
}

bool characterization(const SuiteConfig& c, const ChoiceModel& m, const Variable& x, const Variable& y) {
  if (c.mutate_characterization) return true;
  return s_irrelevant(m, x, y, Method::characterization).holds;
}

// ----------------------------------------------------- event-pair cases

struct EventCase {
  ChoiceModel model;
  Event a;
  Event b;
  std::string origin;
  std::optional<bool> expected;  // pinned verdict, when known
};

std::vector<std::string> value_labels(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<bool> random_bits(Rng& rng, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = rng.coin();
  return bits;
}

constexpr std::size_t kLinearEventCases = 1000;
constexpr std::size_t kCredalEventCases = 500;

EventCase linear_event_case(const SuiteConfig& c, std::size_t t) {
  const auto o4 = fixtures::omega4();
  if (t == 0) return {fixtures::unif(), o4.a, o4.b, "FIX-UNIF", true};
  if (t == 1) return {fixtures::dep(), o4.a, o4.b, "FIX-DEP", false};
  if (t == 2) return {fixtures::p2(), o4.a, o4.b, "P2", true};
  Rng rng(mix_seed(c.seed, 3, t));
  if (t % 3 == 0) {
    // Product measure, with the events read off the two coordinates.
    const std::size_t nx = 2 + rng.index(std::max<std::size_t>(1, std::min<std::size_t>(3, c.max_space / 2 - 1)));
    const ProductSpace ps = ProductSpace::make(value_labels("x", nx), value_labels("y", 2));
    const LinearPrevision p = ps.product(random_pmf(rng, nx, c.max_den, rng.coin(0.3) ? 0.4 : 0.0),
                                         random_pmf(rng, 2, c.max_den, 0.0));
    return {p, ps.x.preimage(random_bits(rng, nx)), ps.y.preimage(random_bits(rng, 2)), "product", true};
  }
  const SpacePtr s = numbered_space(static_cast<std::size_t>(
      rng.uniform_int(static_cast<std::int64_t>(c.min_space), static_cast<std::int64_t>(c.max_space))));
  const LinearPrevision p(s, random_pmf(rng, s->size(), c.max_den, rng.coin(0.3) ? 0.4 : 0.0));
  return {p, random_event(rng, s), random_event(rng, s), "random", std::nullopt};
}

EventCase credal_event_case(const SuiteConfig& c, std::size_t t) {
  if (t == 0) {
    const auto o4 = fixtures::omega4();
    return {fixtures::c2(), o4.a, o4.b, "FIX-C2", false};
  }
  Rng rng(mix_seed(c.seed, 5, t));
  const std::size_t vertices = 1 + rng.index(c.max_vertices);
  if (t % 4 == 1) {
    const ProductSpace ps = ProductSpace::make(value_labels("x", 2 + rng.index(2)), value_labels("y", 2));
    CredalSet m = gen_product_factorizing(rng, ps, vertices, c.max_den);
    return {std::move(m), ps.x.preimage(random_bits(rng, ps.x.codomain_size())),
            ps.y.preimage(random_bits(rng, 2)), "product_factorizing", true};
  }
  const SpacePtr s = numbered_space(static_cast<std::size_t>(
      rng.uniform_int(static_cast<std::int64_t>(c.min_space), static_cast<std::int64_t>(c.max_space))));
  const double sparsity = t % 4 == 2 ? 0.6 : 0.0;
  CredalSet m = gen_credal_set(rng, s, vertices, c.max_den, sparsity);
  return {std::move(m), random_event(rng, s), random_event(rng, s), sparsity > 0 ? "sparse" : "random",
          std::nullopt};
}

Json event_case_json(const EventCase& k, const std::string& detail) {
  return {{"origin", k.origin}, {"detail", detail}, {"model_file", model_json(k.model, {{"A", k.a}, {"B", k.b}})},
          {"replay", "check-independence --level event --kind s-irrelevance --first A --second B --method both"}};
}

// ---------------------------------------------------------- batteries

void linear_events(BatteryResult& r, const SuiteConfig& c) {
  run_cases(r, c.count(kLinearEventCases), [&](std::size_t t) {
    const EventCase k = linear_event_case(c, t);
    const auto& p = std::get<LinearPrevision>(k.model);
    const bool direct = s_irrelevant(k.model, k.a, k.b, Method::direct).holds;
    const bool classical = classical_independent(p, k.a, k.b);
    const bool charac = characterization(c, k.model, k.a, k.b);
    const bool both_ways = s_independent(k.model, k.a, k.b, Method::direct).holds;
    if (direct != classical || charac != classical || both_ways != classical ||
        (k.expected && *k.expected != direct)) {
      return fail_with(event_case_json(k, "direct=" + std::to_string(direct) + " classical=" +
                                              std::to_string(classical) + " characterization=" +
                                              std::to_string(charac) + " independent=" + std::to_string(both_ways)));
    }
    return CaseOutcome{false, nullptr, {direct ? "holds" : "fails"}};
  });
}

void credal_events(BatteryResult& r, const SuiteConfig& c) {
  run_cases(r, c.count(kCredalEventCases), [&](std::size_t t) {
    const EventCase k = credal_event_case(c, t);
    const auto& m = std::get<CredalSet>(k.model);
    const bool direct = s_irrelevant(k.model, k.a, k.b, Method::direct).holds;
    const bool charac = characterization(c, k.model, k.a, k.b);
    std::string problem;
    if (direct != charac) problem = "routes disagree";
    else if (k.expected && *k.expected != direct) problem = "pinned verdict missed";
    else if (is_trivial(m, k.a) && !direct) problem = "trivial first event but not irrelevant";
    else if (direct && !is_trivial(m, k.a) && !is_precise_on(m, indicator(k.b))) problem = "no forced precision";
    if (!problem.empty()) {
      return fail_with(event_case_json(k, problem + ": direct=" + std::to_string(direct) +
                                              " characterization=" + std::to_string(charac)));
    }
    return CaseOutcome{false, nullptr, {direct ? "holds" : "fails", k.origin}};
  });
}

void complementation(BatteryResult& r, const SuiteConfig& c) {
  auto check = [&](const EventCase& k) {
    std::optional<bool> d, ch;
    for (const Event& a : {k.a, k.a.complement()}) {
      for (const Event& b : {k.b, k.b.complement()}) {
        const bool dv = s_irrelevant(k.model, a, b, Method::direct).holds;
        const bool cv = s_irrelevant(k.model, a, b, Method::characterization).holds;
        if ((d && *d != dv) || (ch && *ch != cv)) {
          return fail_with(event_case_json(k, "verdict changes under complementation"));
        }
        d = dv;
        ch = cv;
      }
    }
    return CaseOutcome{};
  };
  const std::size_t n3 = c.count(kLinearEventCases), n5 = c.count(kCredalEventCases);
  run_cases(r, n3 + n5, [&](std::size_t t) { return check(t < n3 ? linear_event_case(c, t) : credal_event_case(c, t - n3)); });
}

void precise_collapse(BatteryResult& r, const SuiteConfig& c) {
  run_cases(r, c.count(500), [&](std::size_t t) {
    Rng rng(mix_seed(c.seed, 4, t));
    const ChoiceModel model = gen_random_model(c, GenKind::linear, rng).model;
    const OptionSet a = random_option_set(rng, space_of(model), 6);
    const ChoiceModel as_set = ArchimedeanModel({CredalSet(std::get<LinearPrevision>(model))});
    const ChoiceResult meu = choose(model, a, Criterion::meu);
    const ChoiceResult maxi = choose(model, a, Criterion::maximality);
    const ChoiceResult eadm = choose(model, a, Criterion::eadmissibility);
    const ChoiceResult eadm_set = choose(as_set, a, Criterion::eadmissibility);
    const ChoiceResult lowerset = choose(as_set, a, Criterion::lowerset);
    std::string problem;
    if (!(meu.chosen == maxi.chosen && meu.chosen == eadm.chosen && meu.chosen == eadm_set.chosen &&
          meu.chosen == lowerset.chosen)) {
      problem = "criteria disagree";
    }
    for (const auto& f : a) {
      if (problem.empty() && meu.rejected.contains(f) != rejected_by_duality(model, a, f)) {
        problem = "rejection differs from membership of A - f";
      }
    }
    const auto slack = archimedean_slack(model, a);
    if (problem.empty() && k_member(model, a) != (slack.has_value() && slack->sign() > 0)) problem = "slack mismatch";
    if (!problem.empty()) {
      return fail_with({{"detail", problem}, {"model_file", model_json(model, {}, {}, {{"A", a}})}});
    }
    return CaseOutcome{false, nullptr, {meu.rejected.empty() ? "nothing_rejected" : "some_rejected"}};
  });
}

void mixing(BatteryResult& r, const SuiteConfig& c) {
  const std::size_t models = c.count(100);
  run_cases(r, models + 2, [&](std::size_t t) -> CaseOutcome {
    if (t == 0) {
      const ChoiceModel vac = fixtures::vac2();
      const auto w = find_mixing_violation(vac, 100, c.seed);
      if (!w) return fail_with({{"detail", "no witness for FIX-VAC2 within 100 trials"}});
      if (check_mixing_axiom_instance(vac, w->B, w->A)) return fail_with({{"detail", "witness does not validate"}});
      return CaseOutcome{false, nullptr, {"vac2_witness"}};
    }
    ChoiceModel model = fixtures::eadm();
    if (t > 1) {
      Rng rng(mix_seed(c.seed, 6, t));
      const SpacePtr s = numbered_space(static_cast<std::size_t>(
          rng.uniform_int(static_cast<std::int64_t>(c.min_space), static_cast<std::int64_t>(c.max_space))));
      std::vector<CredalSet> members;
      const std::size_t k = 1 + rng.index(4);
      for (std::size_t i = 0; i < k; ++i) members.emplace_back(LinearPrevision(s, random_pmf(rng, s->size(), c.max_den)));
      model = ArchimedeanModel(std::move(members));
    }
    const auto w = find_mixing_violation(model, 1000, mix_seed(c.seed, 7, t));
    if (w) return fail_with({{"detail", "mixing violation on an all-linear model"}, {"witness", to_json(*w)},
                             {"model_file", model_json(model)}});
    return CaseOutcome{false, nullptr, {"linear_silent"}};
  });
}

void coherence(BatteryResult& r, const SuiteConfig& c) {
  const std::size_t per_kind = c.count(1000);
  const std::size_t models = std::min<std::size_t>(20, per_kind);
  const std::size_t per_model = (per_kind + models - 1) / models;
  const GenKind kinds[] = {GenKind::linear, GenKind::credal, GenKind::lower_set};
  run_cases(r, 3 * models + 1, [&](std::size_t t) {
    ChoiceModel model = fixtures::c2();
    std::size_t budget = 1000;
    std::string tag = "FIX-C2";
    if (t > 0) {
      Rng rng(mix_seed(c.seed, 8, t));
      const GenKind kind = kinds[(t - 1) / models];
      model = gen_random_model(c, kind, rng).model;
      budget = per_model;
      tag = to_string(kind);
    }
    const CoherenceReport rep = check_coherence_axioms(model, budget, mix_seed(c.seed, 9, t));
    if (!rep.ok()) return fail_with({{"report", to_json(rep)}, {"model_file", model_json(model)}});
    return CaseOutcome{false, nullptr, {tag}};
  });
}

// Replay of a partition witness: {g_E + eps} must lie outside the member's K.
bool replay_confirms(const ChoiceModel& model, const PartitionWitness& w) {
  return !k_member(members_of(model)[w.member], w.replay);
}

void variable_level(BatteryResult& r, const SuiteConfig& c) {
  const std::size_t per_shape = c.count(40);
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}};
  run_cases(r, 2 * per_shape + 1, [&](std::size_t t) -> CaseOutcome {
    if (t == 0) {
      const auto o4 = fixtures::omega4();
      const ChoiceModel m = fixtures::c2();
      const auto& x = o4.product.x;
      const auto& y = o4.product.y;
      const auto v = s_irrelevant(m, x, y, Method::direct);
      const auto w = s_irrelevant_variables_sampled(m, x, y, 200, c.seed);
      const bool stated = !v.holds && v.variable_witness->event.f.gamble() == indicator(o4.b) - Rational(2, 5) &&
                          w && w->guided && w->gambles.size() == 2 &&
                          w->gambles[0] == Gamble(y.codomain_space(), {Rational(3, 5), Rational(-2, 5)}) &&
                          w->gambles[1].is_zero() && replay_confirms(m, *w);
      if (!stated || characterization(c, m, x, y)) {
        return fail_with({{"origin", "FIX-C2 as product"}, {"detail", "expected failure with f = I_B - 2/5"}});
      }
      return CaseOutcome{false, nullptr, {"fix_c2_fails"}};
    }
    const auto [nx, ny] = shapes[(t - 1) / per_shape];
    Rng rng(mix_seed(c.seed, 10, t));
    const ProductSpace ps = ProductSpace::make(value_labels("x", nx), value_labels("y", ny));
    const std::size_t vertices = 1 + rng.index(c.max_vertices);
    ChoiceModel model = fixtures::unif();
    std::string origin;
    switch (t % 5) {
      case 0:
        model = gen_product_factorizing(rng, ps, vertices, c.max_den);
        origin = "product_factorizing";
        break;
      case 1:
        model = gen_credal_set(rng, ps.space, vertices, c.max_den);
        origin = "random_credal";
        break;
      case 2: {
        // X concentrated on one value in every vertex.
        const std::size_t xv = rng.index(nx);
        std::vector<LinearPrevision> vs;
        RationalVector px(nx, Rational(0));
        px[xv] = 1;
        for (std::size_t k = 0; k < vertices; ++k) vs.push_back(ps.product(px, random_pmf(rng, ny, c.max_den)));
        model = CredalSet(std::move(vs));
        origin = "trivial_x";
        break;
      }
      case 3: {
        std::vector<CredalSet> ms;
        for (std::size_t k = 0, n = 1 + rng.index(3); k < n; ++k) {
          ms.push_back(gen_product_factorizing(rng, ps, 1 + rng.index(c.max_vertices), c.max_den));
        }
        model = ArchimedeanModel(std::move(ms));
        origin = "lower_set_factorizing";
        break;
      }
      default:
        model = rng.coin() ? ps.product(random_pmf(rng, nx, c.max_den), random_pmf(rng, ny, c.max_den))
                           : LinearPrevision(ps.space, random_pmf(rng, nx * ny, c.max_den));
        origin = "linear";
    }
    const auto v = s_irrelevant(model, ps.x, ps.y, Method::direct, c.subset_cap);
    const bool charac = characterization(c, model, ps.x, ps.y);
    const auto w = s_irrelevant_variables_sampled(model, ps.x, ps.y, 200, mix_seed(c.seed, 11, t));
    std::string problem;
    if (v.holds != charac) problem = "exact routes disagree";
    else if (v.holds && w) problem = "falsifier found a witness against a holds verdict";
    else if (!v.holds && !(w && w->guided && replay_confirms(model, *w))) {
      problem = "no confirmed guided witness for a fails verdict";
    }
    if (!problem.empty()) {
      Json ce = {{"origin", origin},
                 {"detail", problem},
                 {"model_file", model_json(model, {}, {{"X", ps.x}, {"Y", ps.y}})}};
      if (w) ce["falsifier_witness"] = to_json(*w, ps.x);
      return fail_with(std::move(ce));
    }
    return CaseOutcome{false, nullptr, {v.holds ? "holds" : "fails", origin}};
  });
}

void marginal_mixing(BatteryResult& r, const SuiteConfig& c) {
  const std::size_t option_sets = c.count(500);
  const std::size_t generated = c.count(200);
  const auto fix = fixtures::cor1();
  const ChoiceModel cor_model = fix.model;
  const ChoiceModel explicit_marginal =
      ArchimedeanModel({CredalSet(fix.r1), CredalSet(fix.r2)});

  // Case 0: FIX-COR1 itself. Cases 1..option_sets: K_Y membership. Then
  // generated factorizing models (premises expected), then surveyed random
  // models (implication only).
  run_cases(r, 1 + option_sets + 2 * generated, [&](std::size_t t) -> CaseOutcome {
    if (t == 0) {
      const MarginalReport rep = corollary1_check(cor_model, fix.product.x, fix.product.y, 1000, c.seed);
      const auto members = members_of(*rep.marginal);
      const bool reps = members.size() == 2 && members[0].vertices() == std::vector<LinearPrevision>{fix.r1} &&
                        members[1].vertices() == std::vector<LinearPrevision>{fix.r2};
      if (!rep.ok() || !reps) return fail_with({{"origin", "FIX-COR1"}, {"report", to_json(rep)}});
      return CaseOutcome{false, nullptr, {"cor1"}};
    }
    if (t <= option_sets) {
      Rng rng(mix_seed(c.seed, 12, t));
      const OptionSet h = random_option_set(rng, fix.product.y.codomain_space(), 4);
      const ChoiceModel ky = distribution_model(cor_model, fix.product.y);
      const bool a = k_member(ky, h);
      const bool b = k_member(explicit_marginal, h);
      const bool joint = k_member(cor_model, fix.product.y.compose(h));
      if (a != b || a != joint) {
        return fail_with({{"origin", "K_Y membership"}, {"option_set", to_json(h)},
                          {"detail", "distribution model, explicit marginal and joint disagree"}});
      }
      return CaseOutcome{false, nullptr, {a ? "ky_member" : "ky_nonmember"}};
    }
    const std::size_t g = t - option_sets - 1;
    const bool surveyed = g >= generated;
    Rng rng(mix_seed(c.seed, 13, g));
    const ProductSpace ps = ProductSpace::make(value_labels("x", 2 + rng.index(2)), value_labels("y", 2 + rng.index(2)));
    std::vector<CredalSet> ms;
    for (std::size_t k = 0, n = 1 + rng.index(3); k < n; ++k) {
      const std::size_t vs = 1 + rng.index(c.max_vertices);
      ms.push_back(surveyed ? gen_credal_set(rng, ps.space, vs, c.max_den)
                            : gen_product_factorizing(rng, ps, vs, c.max_den, true));
    }
    const ChoiceModel model = ArchimedeanModel(std::move(ms));
    const MarginalReport rep = corollary1_check(model, ps.x, ps.y, 200, mix_seed(c.seed, 14, g));
    if (!surveyed && !rep.premises()) {
      return fail_with({{"origin", "generated"}, {"detail", "premises fail on a factorizing model"},
                        {"report", to_json(rep)}, {"model_file", model_json(model, {}, {{"X", ps.x}, {"Y", ps.y}})}});
    }
    if (rep.premises() && !rep.ok()) {
      return fail_with({{"origin", surveyed ? "surveyed" : "generated"}, {"detail", "premises pass, conclusion fails"},
                        {"report", to_json(rep)}, {"model_file", model_json(model, {}, {{"X", ps.x}, {"Y", ps.y}})}});
    }
    return CaseOutcome{false, nullptr, {rep.premises() ? "premises_hold" : "premises_fail"}};
  });
}

void lp_backend(BatteryResult& r, const SuiteConfig& c) {
  const std::size_t polytopes = c.count(200);
  const std::size_t slack_cases = c.count(300);
  run_cases(r, polytopes + slack_cases, [&](std::size_t t) -> CaseOutcome {
    Rng rng(mix_seed(c.seed, 15, t));
    if (t < polytopes) {
      const SpacePtr s = numbered_space(
          static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(c.min_space),
                                                   static_cast<std::int64_t>(std::min<std::size_t>(c.max_space, 6)))));
      const PolytopePair pp = gen_interval_polytope(rng, s, c.max_den);
      const CredalSet both(pp.vertex_form.vertices(), pp.constraint_form.constraints());
      for (int i = 0; i < 20; ++i) {
        const Gamble f = random_gamble(rng, s);
        const Rational v = lower_prevision(pp.vertex_form, f);
        if (v != lower_prevision(pp.constraint_form, f) || v != lower_prevision_lp(both, f)) {
          return fail_with({{"detail", "vertex and constraint envelopes differ"}, {"gamble", to_json(f)},
                            {"vertex_form", to_json(pp.vertex_form)}, {"constraint_form", to_json(pp.constraint_form)}});
        }
      }
      return CaseOutcome{false, nullptr, {"polytope"}};
    }
    const GenKind kinds[] = {GenKind::linear, GenKind::credal, GenKind::lower_set};
    ChoiceModel model = gen_random_model(c, kinds[t % 3], rng).model;
    if (t % 4 == 0) {
      model = gen_interval_polytope(rng, numbered_space(3 + rng.index(3)), c.max_den).constraint_form;
    }
    const OptionSet a = random_option_set(rng, space_of(model), 4);
    const auto slack = archimedean_slack(model, a);
    std::string problem;
    if (k_member(model, a)) {
      if (!slack || slack->sign() <= 0) problem = "member without positive slack";
      else if (!k_member(model, OptionSet(a.space(), [&] {
                 std::vector<Gamble> gs;
                 for (const auto& f : a) gs.push_back(f - *slack / 2);
                 return gs;
               }()))) {
        problem = "shift by half the slack leaves K";
      }
    } else if (slack) {
      problem = "slack reported for a non-member";
    }
    if (!problem.empty()) return fail_with({{"detail", problem}, {"model_file", model_json(model, {}, {}, {{"A", a}})}});
    return CaseOutcome{false, nullptr, {slack ? "slack_member" : "slack_nonmember"}};
  });
}

void lp_properties(BatteryResult& r, const SuiteConfig& c) {
  const std::size_t samples = c.count(500);
  run_cases(r, 21, [&](std::size_t t) -> CaseOutcome {
    if (t == 0) {
      const CredalSet m = fixtures::c2();
      const Gamble ib = indicator(fixtures::omega4().b);
      const auto rep = check_lower_prevision_properties(m, {{ib, ib, Rational(2), Rational(0)}});
      if (!rep.ok() || lower_prevision(m, ib + ib) != Rational(3, 5)) {
        return fail_with({{"origin", "FIX-C2 LP3 instance"}, {"report", to_json(rep)}});
      }
      return CaseOutcome{false, nullptr, {"fix_c2"}};
    }
    Rng rng(mix_seed(c.seed, 16, t));
    const ChoiceModel model = gen_random_model(c, GenKind::credal, rng).model;
    const auto rep = check_lower_prevision_properties(std::get<CredalSet>(model), samples, mix_seed(c.seed, 17, t));
    if (!rep.ok()) return fail_with({{"report", to_json(rep)}, {"model_file", model_json(model)}});
    return CaseOutcome{false, nullptr, {"credal"}};
  });
}

using Battery = void (*)(BatteryResult&, const SuiteConfig&);

Battery lookup(const std::string& name) {
  static const std::map<std::string, Battery> table = {
      {"linear_events", linear_events},       {"credal_events", credal_events},     {"complementation", complementation},
      {"precise_collapse", precise_collapse}, {"mixing", mixing}, {"coherence", coherence},
      {"variable_level", variable_level}, {"marginal_mixing", marginal_mixing}, {"lp_backend", lp_backend},
      {"lp_properties", lp_properties}};
  const auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown battery '" + name + "'");
  return it->second;
}

}  // namespace

BatteryResult run_battery(const std::string& name, const SuiteConfig& config) {
  config.validate();
  const Battery battery = lookup(name);
  BatteryResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  battery(r, config);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteReport run_verify_suite(const SuiteConfig& config) {
  config.validate();
  const auto& names = config.batteries.empty() ? battery_names() : config.batteries;
  for (const auto& n : names) lookup(n);
  SuiteReport report;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& n : names) report.batteries.push_back(run_battery(n, config));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace credal
