#include "credal/marginals.hpp"

#include "credal/errors.hpp"

#include <algorithm>

namespace credal {

ProductSpace ProductSpace::make(std::vector<std::string> x_values, std::vector<std::string> y_values) {
  if (x_values.empty() || y_values.empty()) throw InvalidModel("product of an empty codomain");
  std::vector<std::string> atoms;
  std::vector<std::size_t> xa, ya;
  for (std::size_t i = 0; i < x_values.size(); ++i) {
    for (std::size_t j = 0; j < y_values.size(); ++j) {
      atoms.push_back(x_values[i] + y_values[j]);
      xa.push_back(i);
      ya.push_back(j);
    }
  }
  SpacePtr space = FiniteSpace::make(std::move(atoms));
  Variable x(space, std::move(x_values), std::move(xa));
  Variable y(space, std::move(y_values), std::move(ya));
  return ProductSpace{space, std::move(x), std::move(y)};
}

LinearPrevision ProductSpace::product(const RationalVector& px, const RationalVector& py) const {
  if (px.size() != x.codomain_size() || py.size() != y.codomain_size()) {
    throw InvalidModel("marginal sizes do not match the product space");
  }
  RationalVector pmf(space->size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    for (std::size_t j = 0; j < py.size(); ++j) pmf[atom(i, j)] = px[i] * py[j];
  }
  return LinearPrevision(space, std::move(pmf));
}

namespace {

CredalSet push_set(const CredalSet& m, const Variable& z) {
  std::vector<LinearPrevision> vs;
  for (const auto& v : m.vertices()) vs.push_back(pushforward(v, z));
  return CredalSet(std::move(vs));
}

}  // namespace

ChoiceModel distribution_model(const ChoiceModel& model, const Variable& z) {
  require_same_space(space_of(model), z.space());
  switch (kind_of(model)) {
    case ModelKind::linear: return pushforward(std::get<LinearPrevision>(model), z);
    case ModelKind::credal: return push_set(std::get<CredalSet>(model), z);
    case ModelKind::lower_set: {
      std::vector<CredalSet> ms;
      for (const auto& m : std::get<ArchimedeanModel>(model).members()) ms.push_back(push_set(m, z));
      return ArchimedeanModel(std::move(ms));
    }
  }
  throw InvalidModel("unknown model kind");
}

std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::skipped: return "skipped";
  }
  return "?";
}

bool MarginalReport::ok() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const MarginalClause& c) { return c.status == ClauseStatus::pass; });
}

bool MarginalReport::premises() const {
  return clauses.size() >= 2 && clauses[0].status == ClauseStatus::pass && clauses[1].status == ClauseStatus::pass;
}

MarginalReport corollary1_check(const ChoiceModel& model, const Variable& x, const Variable& y, std::size_t trials,
                                 std::uint64_t seed, bool survey) {
  require_same_space(space_of(model), x.space());
  require_same_space(space_of(model), y.space());
  MarginalReport r;
  r.clauses = {{"credibly_indeterminate_x", ClauseStatus::skipped, ""},
               {"s_irrelevant_x_to_y", ClauseStatus::skipped, ""},
               {"precise_y_per_member", ClauseStatus::skipped, ""},
               {"marginal_single_vertex_members", ClauseStatus::skipped, ""},
               {"no_mixing_violation_on_marginal", ClauseStatus::skipped, ""}};

  const Credibility cred = credibility_status(model, x);
  r.clauses[0].status = cred.credibly_indeterminate ? ClauseStatus::pass : ClauseStatus::fail;
  if (!cred.credibly_indeterminate) r.clauses[0].detail = "no preimage of X is credibly indeterminate";

  IndependenceVerdict v = s_irrelevant(model, x, y, Method::direct);
  r.clauses[1].status = v.holds ? ClauseStatus::pass : ClauseStatus::fail;
  if (!v.holds) {
    const auto& f = v.variable_witness->event.f;
    r.clauses[1].detail = "witness gamble " + to_string(f.lambda) + " on the second event, " + to_string(f.mu) +
                          " off it";
  }
  r.irrelevance = std::move(v);

  if (!r.premises()) {
    if (!survey) {
      throw PreconditionFailed(r.clauses[0].status == ClauseStatus::fail ? r.clauses[0].detail
                                                                          : r.clauses[1].detail);
    }
    return r;
  }

  const auto members = members_of(model);
  r.clauses[2].status = ClauseStatus::pass;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!precise_distribution(members[k], y)) {
      r.clauses[2].status = ClauseStatus::fail;
      r.clauses[2].detail = "member " + std::to_string(k) + " has an imprecise Y-distribution";
      break;
    }
  }

  ChoiceModel marginal = distribution_model(model, y);
  const auto pushed = members_of(marginal);
  const bool single = std::all_of(pushed.begin(), pushed.end(), [](const CredalSet& m) { return m.is_single_vertex(); });
  r.clauses[3].status = single ? ClauseStatus::pass : ClauseStatus::fail;
  if (!single) r.clauses[3].detail = "some pushed-forward member has several vertices";

  const auto w = find_mixing_violation(marginal, trials, seed);
  r.clauses[4].status = w ? ClauseStatus::fail : ClauseStatus::pass;
  if (w) r.clauses[4].detail = "mixing violation found at trial " + std::to_string(w->trial);
  r.marginal = std::move(marginal);
  return r;
}

}  // namespace credal
