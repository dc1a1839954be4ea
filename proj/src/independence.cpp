#include "credal/independence.hpp"

#include "credal/errors.hpp"
#include "credal/kernels.hpp"
#include "credal/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace credal {

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw InvalidModel("interval with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
}

RationalInterval interval_product(const RationalInterval& i, const Rational& c) {
  Rational a = i.lo * c, b = i.hi * c;
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// ------------------------------------------------------------- triviality

bool is_trivial(const CredalSet& model, const Event& e) {
  require_same_space(model.space(), e.space());
  return upper_prevision(model, indicator(e)).sign() == 0 ||
         upper_prevision(model, indicator(e.complement())).sign() == 0;
}

bool is_trivial(const CredalSet& model, const Variable& z) {
  require_same_space(model.space(), z.space());
  std::size_t positive = 0;
  for (std::size_t v = 0; v < z.codomain_size(); ++v) {
    if (upper_prevision(model, indicator(z.preimage_of_value(v))).sign() > 0) ++positive;
  }
  return positive <= 1;
}

namespace {

std::vector<bool> mask_bits(std::uint64_t mask, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1U;
  return bits;
}

// Subsets containing value 0 and missing some other value: one per
// complement pair of non-trivial subsets.
std::vector<std::uint64_t> representative_masks(std::size_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m < full; m += 2) out.push_back(m);
  return out;
}

bool credible_in_all(const std::vector<CredalSet>& members, const Event& e) {
  const Gamble ind = indicator(e);
  return std::all_of(members.begin(), members.end(),
                     [&](const CredalSet& m) { return lower_prevision(m, ind).sign() > 0; });
}

}  // namespace

Credibility credibility_status(const ChoiceModel& model, const Event& e) {
  require_same_space(space_of(model), e.space());
  const auto members = members_of(model);
  Credibility c;
  c.credible = credible_in_all(members, e);
  c.credibly_indeterminate = c.credible && credible_in_all(members, e.complement());
  return c;
}

Credibility credibility_status(const ChoiceModel& model, const Variable& z) {
  require_same_space(space_of(model), z.space());
  const std::size_t n = z.codomain_size();
  if (n > 62) throw CapExceeded("codomain too large for subset enumeration");
  const auto members = members_of(model);
  Credibility c;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m < full; ++m) {
    const auto bits = mask_bits(m, n);
    const Event e = z.preimage(bits);
    if (!credible_in_all(members, e)) continue;
    c.credible = true;
    if (credible_in_all(members, e.complement())) {
      c.credibly_indeterminate = true;
      c.subset = bits;
      break;
    }
  }
  return c;
}

// ---------------------------------------------------- classical independence

bool classical_independent(const LinearPrevision& p, const Event& a, const Event& b) {
  require_same_space(p.space(), a.space());
  require_same_space(p.space(), b.space());
  return p.probability(a.intersect(b)) == p.probability(a) * p.probability(b);
}

bool classical_independent(const LinearPrevision& p, const Variable& x, const Variable& y) {
  require_same_space(p.space(), x.space());
  require_same_space(p.space(), y.space());
  const RationalVector px = pushforward(p, x).pmf();
  const RationalVector py = pushforward(p, y).pmf();
  std::vector<RationalVector> joint(px.size(), RationalVector(py.size(), Rational(0)));
  for (std::size_t i = 0; i < p.pmf().size(); ++i) joint[x.value_index(i)][y.value_index(i)] += p.mass(i);
  for (std::size_t u = 0; u < px.size(); ++u) {
    for (std::size_t v = 0; v < py.size(); ++v) {
      if (joint[u][v] != px[u] * py[v]) return false;
    }
  }
  return true;
}

bool classical_independent_all_subsets(const LinearPrevision& p, const Variable& x, const Variable& y) {
  const std::size_t nx = x.codomain_size(), ny = y.codomain_size();
  if (nx + ny > 40) throw CapExceeded("codomains too large for subset enumeration");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << nx); ++a) {
    const Event ea = x.preimage(mask_bits(a, nx));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << ny); ++b) {
      if (!classical_independent(p, ea, y.preimage(mask_bits(b, ny)))) return false;
    }
  }
  return true;
}

std::string to_string(Method m) { return m == Method::direct ? "direct" : "characterization"; }

std::string to_string(Clause c) {
  switch (c) {
    case Clause::none: return "none";
    case Clause::classical: return "classical";
    case Clause::trivial: return "trivial";
    case Clause::precision_factorization: return "precision_factorization";
  }
  return "?";
}

// ------------------------------------------------------- event level

namespace {

struct Cells {
  Rational ab, a_cob, coa_b, coa_cob;
};

Cells cells_of(const LinearPrevision& q, const Event& a, const Event& b) {
  const Event coa = a.complement(), cob = b.complement();
  return {q.probability(a.intersect(b)), q.probability(a.intersect(cob)), q.probability(coa.intersect(b)),
          q.probability(coa.intersect(cob))};
}

EventWitness make_event_witness(const CredalSet& member, std::size_t index, const Event& a, const Event& b,
                                const Vec2& x) {
  EventGamble f{b, x[0], x[1]};
  const Gamble fg = f.gamble();
  const Gamble g1 = indicator(a.complement()).times(fg);
  const Gamble g2 = -indicator(a).times(fg);
  Rational l1 = lower_prevision(member, g1);
  Rational l2 = lower_prevision(member, g2);
  if (l1.sign() >= 0 || l2.sign() >= 0) throw std::logic_error("event witness fails its recheck");
  Rational eps = std::min(-l1, -l2) / 2;
  OptionSet replay(a.space(), {g1 + eps, g2 + eps});
  return EventWitness{std::move(f), index, std::move(l1), std::move(l2), std::move(eps), std::move(replay)};
}

// Direct test inside one credal member. The vertex minimum commutes with the
// existential over f, so the pair (Q1 for the first inequality, Q2 for the
// second) ranges over all ordered vertex pairs.
std::optional<EventWitness> event_direct_member(const CredalSet& member, std::size_t index, const Event& a,
                                                const Event& b) {
  const auto& vs = member.vertices();
  std::vector<Vec2> first, second;
  for (const auto& q : vs) {
    const Cells c = cells_of(q, a, b);
    first.push_back({c.coa_b, c.coa_cob});
    second.push_back({-c.ab, -c.a_cob});
  }
  bool feasible = false;
  for (const auto& u : first) {
    for (const auto& v : second) feasible = feasible || open_halfplane_pair_feasible(u, v);
  }
  for (int s : {1, -1}) {
    for (const auto& u : first) {
      for (const auto& v : second) {
        if (auto x = open_halfplane_pair_witness(u, v, s)) {
          if (!feasible) throw std::logic_error("cone witness found for an infeasible pair");
          return make_event_witness(member, index, a, b, *x);
        }
      }
    }
  }
  if (feasible) throw std::logic_error("feasible vertex pair without a rational witness");
  return std::nullopt;
}

// Triviality, or shared Q(B) with Q(A and B) = Q(A) Q(B) at every vertex.
Clause event_characterization_member(const CredalSet& member, const Event& a, const Event& b) {
  if (is_trivial(member, a)) return Clause::trivial;
  const auto& vs = member.vertices();
  const Rational qb = vs.front().probability(b);
  for (const auto& q : vs) {
    if (q.probability(b) != qb) return Clause::none;
    if (!classical_independent(q, a, b)) return Clause::none;
  }
  return Clause::precision_factorization;
}

IndependenceVerdict event_direct(const std::vector<CredalSet>& members, const Event& a, const Event& b) {
  IndependenceVerdict v;
  v.route = Method::direct;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (auto w = event_direct_member(members[k], k, a, b)) {
      v.holds = false;
      v.event_witness = std::move(w);
      return v;
    }
  }
  return v;
}

IndependenceVerdict event_characterization(const ChoiceModel& model, const Event& a, const Event& b) {
  IndependenceVerdict v;
  v.route = Method::characterization;
  if (kind_of(model) == ModelKind::linear) {
    v.holds = classical_independent(std::get<LinearPrevision>(model), a, b);
    v.clause = v.holds ? Clause::classical : Clause::none;
    if (!v.holds) v.detail = "product rule fails";
    return v;
  }
  const auto members = members_of(model);
  v.clause = Clause::trivial;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const Clause c = event_characterization_member(members[k], a, b);
    if (c == Clause::none) {
      v.holds = false;
      v.clause = Clause::none;
      v.detail = "member " + std::to_string(k) +
                 ": first event is non-trivial and the vertices do not share a factorizing "
                 "probability for the second event";
      return v;
    }
    if (c == Clause::precision_factorization) v.clause = c;
  }
  return v;
}

}  // namespace

IndependenceVerdict s_irrelevant(const ChoiceModel& model, const Event& a, const Event& b, Method method) {
  require_same_space(space_of(model), a.space());
  require_same_space(space_of(model), b.space());
  if (method == Method::characterization) return event_characterization(model, a, b);
  return event_direct(members_of(model), a, b);
}

// ---------------------------------------------------------- variable level

std::size_t subset_cap() {
  const char* raw = std::getenv("CREDAL_CHOICE_SUBSET_CAP");
  if (raw == nullptr || *raw == '\0') return 16;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0 || value > 40) {
    throw ConfigError("CREDAL_CHOICE_SUBSET_CAP must be an integer in 1..40, got '" + std::string(text) + "'");
  }
  return value;
}

namespace {

void check_cap(const Variable& x, const Variable& y, std::size_t cap) {
  const std::size_t total = x.codomain_size() + y.codomain_size();
  if (total > cap) {
    throw CapExceeded("codomain sizes add up to " + std::to_string(total) + ", above the cap of " +
                      std::to_string(cap));
  }
}

bool factorizes(const LinearPrevision& q, const Variable& x, const Variable& y, const RationalVector& py) {
  const RationalVector px = pushforward(q, x).pmf();
  std::vector<RationalVector> joint(px.size(), RationalVector(py.size(), Rational(0)));
  for (std::size_t i = 0; i < q.pmf().size(); ++i) joint[x.value_index(i)][y.value_index(i)] += q.mass(i);
  for (std::size_t u = 0; u < px.size(); ++u) {
    for (std::size_t v = 0; v < py.size(); ++v) {
      if (joint[u][v] != px[u] * py[v]) return false;
    }
  }
  return true;
}

IndependenceVerdict variable_direct(const ChoiceModel& model, const Variable& x, const Variable& y) {
  const auto members = members_of(model);
  for (const auto& m : members) m.vertices();  // vertex form is required up front
  const auto xs = representative_masks(x.codomain_size());
  const auto ys = representative_masks(y.codomain_size());
  const std::size_t pairs = xs.size() * ys.size();
  auto events = [&](std::size_t i) {
    return std::make_pair(x.preimage(mask_bits(xs[i / ys.size()], x.codomain_size())),
                          y.preimage(mask_bits(ys[i % ys.size()], y.codomain_size())));
  };
  const auto hit = first_index_where(pairs, [&](std::size_t i) {
    const auto [a, b] = events(i);
    return !event_direct(members, a, b).holds;
  });

  IndependenceVerdict v;
  v.route = Method::direct;
  if (!hit) return v;
  const auto [a, b] = events(*hit);
  IndependenceVerdict ev = event_direct(members, a, b);
  v.holds = false;
  v.variable_witness = VariableWitness{mask_bits(xs[*hit / ys.size()], x.codomain_size()),
                                       mask_bits(ys[*hit % ys.size()], y.codomain_size()), *ev.event_witness};
  return v;
}

IndependenceVerdict variable_characterization(const ChoiceModel& model, const Variable& x, const Variable& y) {
  IndependenceVerdict v;
  v.route = Method::characterization;
  if (kind_of(model) == ModelKind::linear) {
    v.holds = classical_independent(std::get<LinearPrevision>(model), x, y);
    v.clause = v.holds ? Clause::classical : Clause::none;
    if (!v.holds) v.detail = "joint distribution does not factorize";
    return v;
  }
  const auto members = members_of(model);
  v.clause = Clause::trivial;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const CredalSet& m = members[k];
    const auto& vs = m.vertices();
    if (is_trivial(m, x)) continue;
    const auto py = precise_distribution(m, y);
    bool ok = py.has_value();
    for (std::size_t j = 0; ok && j < vs.size(); ++j) ok = factorizes(vs[j], x, y, py->pmf());
    if (!ok) {
      v.holds = false;
      v.clause = Clause::none;
      v.detail = "member " + std::to_string(k) + ": first variable is non-trivial and " +
                 (py ? "some vertex does not factorize" : "the second variable has no precise distribution");
      return v;
    }
    v.clause = Clause::precision_factorization;
  }
  return v;
}

}  // namespace

IndependenceVerdict s_irrelevant(const ChoiceModel& model, const Variable& x, const Variable& y, Method method,
                                 std::size_t cap) {
  require_same_space(space_of(model), x.space());
  require_same_space(space_of(model), y.space());
  if (method == Method::characterization) return variable_characterization(model, x, y);
  check_cap(x, y, cap);
  return variable_direct(model, x, y);
}

IndependencePair s_independent(const ChoiceModel& model, const Event& a, const Event& b, Method method) {
  IndependencePair p{true, s_irrelevant(model, a, b, method), s_irrelevant(model, b, a, method)};
  p.holds = p.forward.holds && p.backward.holds;
  return p;
}

IndependencePair s_independent(const ChoiceModel& model, const Variable& x, const Variable& y, Method method,
                               std::size_t cap) {
  IndependencePair p{true, s_irrelevant(model, x, y, method, cap), s_irrelevant(model, y, x, method, cap)};
  p.holds = p.forward.holds && p.backward.holds;
  return p;
}

// ------------------------------------------------------ partition falsifier

std::vector<Gamble> partition_option_gambles(const Variable& x, const Variable& y,
                                             const std::vector<std::vector<bool>>& cells,
                                             const std::vector<Gamble>& gambles) {
  require_same_space(x.space(), y.space());
  if (cells.size() != gambles.size()) throw PreconditionFailed("one gamble per cell is required");
  std::vector<std::size_t> cell_of(x.codomain_size(), cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() != x.codomain_size()) throw PreconditionFailed("cell has the wrong length");
    for (std::size_t v = 0; v < cells[c].size(); ++v) {
      if (!cells[c][v]) continue;
      if (cell_of[v] != cells.size()) throw PreconditionFailed("cells overlap");
      cell_of[v] = c;
    }
  }
  for (std::size_t v = 0; v < cell_of.size(); ++v) {
    if (cell_of[v] == cells.size()) throw PreconditionFailed("cells do not cover the codomain");
  }
  const SpacePtr& space = x.space();
  std::vector<Gamble> out;
  for (std::size_t e = 0; e < cells.size(); ++e) {
    require_same_space(gambles[e].space(), y.codomain_space());
    RationalVector vals(space->size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const std::size_t yv = y.value_index(i);
      vals[i] = gambles[e][yv] - gambles[cell_of[x.value_index(i)]][yv];
    }
    out.emplace_back(space, std::move(vals));
  }
  return out;
}

Rational partition_criterion(const CredalSet& member, const Variable& x, const Variable& y,
                             const std::vector<std::vector<bool>>& cells, const std::vector<Gamble>& gambles) {
  std::optional<Rational> best;
  for (const auto& g : partition_option_gambles(x, y, cells, gambles)) {
    Rational v = lower_prevision(member, g);
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

namespace {

std::optional<PartitionWitness> check_partition(const std::vector<CredalSet>& members, const Variable& x,
                                                const Variable& y, std::vector<std::vector<bool>> cells,
                                                std::vector<Gamble> gambles) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    Rational worst = partition_criterion(members[k], x, y, cells, gambles);
    if (worst.sign() >= 0) continue;
    Rational eps = -worst / 2;
    OptionSet replay(x.space());
    for (const auto& g : partition_option_gambles(x, y, cells, gambles)) replay.insert(g + eps);
    return PartitionWitness{std::move(cells), std::move(gambles), k, std::move(worst), std::move(eps),
                            std::move(replay), false, 0};
  }
  return std::nullopt;
}

}  // namespace

std::optional<PartitionWitness> s_irrelevant_variables_sampled(const ChoiceModel& model, const Variable& x,
                                                               const Variable& y, std::size_t trials,
                                                               std::uint64_t seed) {
  if (trials == 0) throw PreconditionFailed("trials must be at least 1");
  require_same_space(space_of(model), x.space());
  require_same_space(space_of(model), y.space());
  const auto members = members_of(model);
  const std::size_t nx = x.codomain_size(), ny = y.codomain_size();

  // Two-cell partitions {A, co A} with s_A the event-level witness and
  // s_coA = 0.
  if (nx + ny <= subset_cap() && std::all_of(members.begin(), members.end(),
                                             [](const CredalSet& m) { return m.has_vertices(); })) {
    for (const auto am : representative_masks(nx)) {
      const auto abits = mask_bits(am, nx);
      const Event a = x.preimage(abits);
      for (const auto bm : representative_masks(ny)) {
        const auto bbits = mask_bits(bm, ny);
        for (std::size_t k = 0; k < members.size(); ++k) {
          const auto w = event_direct_member(members[k], k, a, y.preimage(bbits));
          if (!w) continue;
          std::vector<bool> co(abits.size());
          for (std::size_t i = 0; i < co.size(); ++i) co[i] = !abits[i];
          const Gamble s_a = event_gamble(Event(y.codomain_space(), bbits), w->f.lambda, w->f.mu);
          auto hit = check_partition(members, x, y, {abits, co}, {s_a, Gamble::zero(y.codomain_space())});
          if (!hit) throw std::logic_error("guided partition does not violate the criterion");
          hit->guided = true;
          return hit;
        }
      }
    }
  }

  if (nx < 2) return std::nullopt;
  auto draw = [&](std::size_t t) {
    Rng rng(mix_seed(seed, 0x5041, t));
    const std::size_t k = 2 + rng.index(nx - 1);
    std::vector<std::size_t> order(nx);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::vector<std::vector<bool>> cells(k, std::vector<bool>(nx, false));
    for (std::size_t i = 0; i < nx; ++i) cells[i < k ? i : rng.index(k)][order[i]] = true;
    std::vector<Gamble> gambles;
    for (std::size_t c = 0; c < k; ++c) gambles.push_back(random_gamble(rng, y.codomain_space()));
    return std::make_pair(std::move(cells), std::move(gambles));
  };
  const auto hit = first_index_where(trials, [&](std::size_t t) {
    auto [cells, gambles] = draw(t);
    return check_partition(members, x, y, std::move(cells), std::move(gambles)).has_value();
  });
  if (!hit) return std::nullopt;
  auto [cells, gambles] = draw(*hit);
  auto w = check_partition(members, x, y, std::move(cells), std::move(gambles));
  w->trial = *hit;
  return w;
}

// ------------------------------------------------ precision, factorization

std::optional<LinearPrevision> precise_distribution(const CredalSet& model, const Variable& z) {
  require_same_space(model.space(), z.space());
  const auto& vs = model.vertices();
  LinearPrevision first = pushforward(vs.front(), z);
  for (std::size_t k = 1; k < vs.size(); ++k) {
    if (!(pushforward(vs[k], z) == first)) return std::nullopt;
  }
  return first;
}

FactorizationReport factorization_check(const CredalSet& model, const Variable& x, const Variable& y,
                                        std::size_t samples, std::uint64_t seed) {
  require_same_space(model.space(), x.space());
  require_same_space(model.space(), y.space());
  FactorizationReport r;
  const auto py = precise_distribution(model, y);
  if (!py) {
    r.detail = "second variable has no precise distribution";
    return r;
  }
  r.precondition = true;
  r.exact = true;
  const auto& vs = model.vertices();
  for (std::size_t k = 0; k < vs.size() && r.exact; ++k) {
    if (!factorizes(vs[k], x, y, py->pmf())) {
      r.exact = false;
      r.detail = "vertex " + std::to_string(k) + " does not factorize";
    }
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Gamble fx = x.compose(random_gamble(rng, x.codomain_space()));
    const Gamble g = random_gamble(rng, y.codomain_space());
    const Gamble prod = fx.times(y.compose(g));
    const RationalInterval lhs(lower_prevision(model, prod), upper_prevision(model, prod));
    const RationalInterval rhs =
        interval_product(RationalInterval(lower_prevision(model, fx), upper_prevision(model, fx)), (*py)(g));
    ++r.samples;
    if (!(lhs == rhs)) ++r.sample_failures;
  }
  if (r.sample_failures > 0 && r.detail.empty()) r.detail = "sampled interval identity fails";
  return r;
}

}  // namespace credal
