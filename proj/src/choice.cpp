#include "credal/choice.hpp"

#include "credal/errors.hpp"

namespace credal {

ModelKind kind_of(const ChoiceModel& model) { return static_cast<ModelKind>(model.index()); }

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::linear: return "linear";
    case ModelKind::credal: return "credal";
    case ModelKind::lower_set: return "lower_set";
  }
  return "?";
}

const SpacePtr& space_of(const ChoiceModel& model) {
  return std::visit([](const auto& m) -> const SpacePtr& { return m.space(); }, model);
}

std::vector<CredalSet> members_of(const ChoiceModel& model) {
  switch (kind_of(model)) {
    case ModelKind::linear: return {CredalSet(std::get<LinearPrevision>(model))};
    case ModelKind::credal: return {std::get<CredalSet>(model)};
    case ModelKind::lower_set: return std::get<ArchimedeanModel>(model).members();
  }
  return {};
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::meu: return "meu";
    case Criterion::maximality: return "maximality";
    case Criterion::eadmissibility: return "eadmissibility";
    case Criterion::lowerset: return "lowerset";
  }
  return "?";
}

Criterion parse_criterion(const std::string& name) {
  if (name == "meu") return Criterion::meu;
  if (name == "maximality") return Criterion::maximality;
  if (name == "eadmissibility") return Criterion::eadmissibility;
  if (name == "lowerset") return Criterion::lowerset;
  throw ParseError("unknown criterion '" + name + "'");
}

bool k_member(const ChoiceModel& model, const OptionSet& options) {
  require_same_space(space_of(model), options.space());
  if (options.empty()) return false;
  for (const auto& member : members_of(model)) {
    bool any = false;
    for (const auto& f : options) {
      if (lower_prevision(member, f).sign() > 0) {
        any = true;
        break;
      }
    }
    if (!any) return false;
  }
  return true;
}

bool rejected_by_duality(const ChoiceModel& model, const OptionSet& options, const Gamble& f) {
  return k_member(model, opt_minus(options, f));
}

namespace {

// Options of A not beaten inside one credal member; `beaten[i]` receives a
// g with lowP(g - f_i) > 0 when there is one.
std::vector<bool> maximal_in(const CredalSet& member, const OptionSet& options,
                             std::vector<std::optional<Gamble>>& beaten) {
  const std::size_t n = options.size();
  std::vector<bool> chosen(n, true);
  beaten.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n && chosen[i]; ++j) {
      if (i == j) continue;
      if (lower_prevision(member, options[j] - options[i]).sign() > 0) {
        chosen[i] = false;
        beaten[i] = options[j];
      }
    }
  }
  return chosen;
}

std::vector<bool> meu_in(const LinearPrevision& p, const OptionSet& options,
                         std::vector<std::optional<Gamble>>& beaten) {
  const std::size_t n = options.size();
  std::vector<Rational> values(n);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = p(options[i]);
    if (values[i] > values[best]) best = i;
  }
  std::vector<bool> chosen(n);
  beaten.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    chosen[i] = values[i] == values[best];
    if (!chosen[i]) beaten[i] = options[best];
  }
  return chosen;
}

ChoiceResult assemble(const OptionSet& options, const std::vector<bool>& chosen,
                      const std::vector<std::vector<Gamble>>& reasons) {
  ChoiceResult out{OptionSet(options.space()), OptionSet(options.space()), {}};
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (chosen[i]) {
      out.chosen.insert(options[i]);
    } else {
      out.rejected.insert(options[i]);
      out.certificates.push_back({options[i], reasons[i]});
    }
  }
  return out;
}

// Union over members of the per-member choices.
template <typename PerMember>
ChoiceResult union_of(const OptionSet& options, std::size_t members, PerMember per_member) {
  const std::size_t n = options.size();
  std::vector<bool> chosen(n, false);
  std::vector<std::vector<Gamble>> reasons(n);
  std::vector<std::optional<Gamble>> beaten;
  for (std::size_t k = 0; k < members; ++k) {
    const auto c = per_member(k, beaten);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i]) chosen[i] = true;
      else reasons[i].push_back(*beaten[i]);
    }
  }
  return assemble(options, chosen, reasons);
}

}  // namespace

ChoiceResult choose(const ChoiceModel& model, const OptionSet& options, Criterion criterion) {
  require_same_space(space_of(model), options.space());
  const ModelKind kind = kind_of(model);
  auto mismatch = [&]() {
    return CriterionMismatch("criterion " + to_string(criterion) + " does not apply to a " + to_string(kind) +
                             " model");
  };

  switch (criterion) {
    case Criterion::meu: {
      if (kind != ModelKind::linear) throw mismatch();
      const auto& p = std::get<LinearPrevision>(model);
      return union_of(options, 1, [&](std::size_t, auto& beaten) { return meu_in(p, options, beaten); });
    }
    case Criterion::maximality: {
      if (kind == ModelKind::lower_set) throw mismatch();
      const CredalSet member = members_of(model).front();
      return union_of(options, 1, [&](std::size_t, auto& beaten) { return maximal_in(member, options, beaten); });
    }
    case Criterion::eadmissibility: {
      if (kind == ModelKind::credal) throw mismatch();
      if (kind == ModelKind::lower_set && !std::get<ArchimedeanModel>(model).all_single_vertex()) {
        throw CriterionMismatch("eadmissibility needs a lower_set whose members are all single-vertex");
      }
      std::vector<LinearPrevision> ps;
      for (const auto& m : members_of(model)) ps.push_back(m.vertices().front());
      return union_of(options, ps.size(),
                      [&](std::size_t k, auto& beaten) { return meu_in(ps[k], options, beaten); });
    }
    case Criterion::lowerset: {
      const auto ms = members_of(model);
      return union_of(options, ms.size(),
                      [&](std::size_t k, auto& beaten) { return maximal_in(ms[k], options, beaten); });
    }
  }
  throw mismatch();
}

std::optional<Rational> archimedean_slack(const ChoiceModel& model, const OptionSet& options) {
  require_same_space(space_of(model), options.space());
  if (options.empty()) return std::nullopt;
  std::optional<Rational> slack;
  for (const auto& member : members_of(model)) {
    std::optional<Rational> best;
    for (const auto& f : options) {
      Rational v = lower_prevision(member, f);
      if (!best || v > *best) best = std::move(v);
    }
    if (best->sign() <= 0) return std::nullopt;
    if (!slack || *best < *slack) slack = best;
  }
  return slack;
}

OptionSet dominance_filter(const OptionSet& options) {
  OptionSet out(options.space());
  for (const auto& g : options) {
    bool dominated = false;
    for (const auto& f : options) {
      if (dominates(f, g, Dominance::strict_pointwise)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(g);
  }
  return out;
}

}  // namespace credal
