#include "credal/axioms.hpp"

#include "credal/errors.hpp"
#include "credal/kernels.hpp"
#include "credal/posi.hpp"
#include "credal/sampling.hpp"

#include <algorithm>

namespace credal {

bool CoherenceReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomReport& r) { return r.ok(); });
}

std::size_t CoherenceReport::instances() const {
  std::size_t n = 0;
  for (const auto& r : axioms) n += r.instances;
  return n;
}

namespace {

// A random option set, redrawn a few times to make membership likely.
OptionSet draw_member(const ChoiceModel& model, Rng& rng) {
  const SpacePtr& space = space_of(model);
  OptionSet a = random_option_set(rng, space, 4);
  for (int attempt = 0; attempt < 8 && !k_member(model, a); ++attempt) a = random_option_set(rng, space, 4);
  return a;
}

// Small positive coefficient pair; one of them may be zero, never both.
std::pair<Rational, Rational> draw_coefficients(Rng& rng) {
  switch (rng.uniform_int(0, 5)) {
    case 0: return {Rational(0), Rational(rng.uniform_int(1, 4)) / rng.uniform_int(1, 3)};
    case 1: return {Rational(rng.uniform_int(1, 4)) / rng.uniform_int(1, 3), Rational(0)};
    default:
      return {Rational(rng.uniform_int(1, 4)) / rng.uniform_int(1, 3),
              Rational(rng.uniform_int(1, 4)) / rng.uniform_int(1, 3)};
  }
}

using Instance = std::optional<AxiomViolation>;

Instance k0(const ChoiceModel& model, Rng& rng) {
  OptionSet a = draw_member(model, rng);
  a.insert(Gamble::zero(a.space()));
  if (!k_member(model, a)) return std::nullopt;
  const OptionSet reduced = a.without(Gamble::zero(a.space()));
  if (k_member(model, reduced)) return std::nullopt;
  return AxiomViolation{{a, reduced}, true, false};
}

Instance k1(const ChoiceModel& model, Rng&) {
  const OptionSet zero(space_of(model), {Gamble::zero(space_of(model))});
  if (!k_member(model, zero)) return std::nullopt;
  return AxiomViolation{{zero}, false, true};
}

Instance k2(const ChoiceModel& model, Rng& rng) {
  const SpacePtr& space = space_of(model);
  RationalVector v(space->size());
  for (auto& x : v) x = Rational(rng.uniform_int(1, 12)) / rng.uniform_int(1, 8);
  const OptionSet s(space, {Gamble(space, std::move(v))});
  if (k_member(model, s)) return std::nullopt;
  return AxiomViolation{{s}, true, false};
}

Instance k3(const ChoiceModel& model, Rng& rng) {
  const OptionSet a1 = draw_member(model, rng);
  const OptionSet a2 = draw_member(model, rng);
  if (!k_member(model, a1) || !k_member(model, a2)) return std::nullopt;
  OptionSet combined(a1.space());
  for (const auto& f1 : a1) {
    for (const auto& f2 : a2) {
      const auto [lambda, mu] = draw_coefficients(rng);
      combined.insert(lambda * f1 + mu * f2);
    }
  }
  if (k_member(model, combined)) return std::nullopt;
  return AxiomViolation{{a1, a2, combined}, true, false};
}

Instance k4(const ChoiceModel& model, Rng& rng) {
  const OptionSet a1 = draw_member(model, rng);
  if (!k_member(model, a1)) return std::nullopt;
  OptionSet a2 = a1;
  for (const auto& g : random_option_set(rng, a1.space(), 3)) a2.insert(g);
  if (k_member(model, a2)) return std::nullopt;
  return AxiomViolation{{a1, a2}, true, false};
}

}  // namespace

CoherenceReport check_coherence_axioms(const ChoiceModel& model, std::size_t instances, std::uint64_t seed) {
  if (instances == 0) throw PreconditionFailed("instance budget must be at least 1");
  using Check = Instance (*)(const ChoiceModel&, Rng&);
  const std::pair<const char*, Check> axioms[] = {{"K0", k0}, {"K1", k1}, {"K2", k2}, {"K3", k3}, {"K4", k4}};

  CoherenceReport report;
  for (std::size_t a = 0; a < std::size(axioms); ++a) {
    const Check check = axioms[a].second;
    auto results = map_indices<Instance>(instances, [&](std::size_t i) {
      Rng rng(mix_seed(seed, a, i));
      return check(model, rng);
    });
    AxiomReport r{axioms[a].first, instances, {}};
    for (auto& v : results) {
      if (v) r.violations.push_back(std::move(*v));
    }
    report.axioms.push_back(std::move(r));
  }
  return report;
}

bool check_mixing_axiom_instance(const ChoiceModel& model, const OptionSet& B, const OptionSet& A) {
  require_same_space(B.space(), A.space());
  if (!B.is_subset_of(A)) throw PreconditionFailed("B is not a subset of A");
  if (B.empty()) throw PreconditionFailed("B is empty");
  for (const auto& a : A) {
    if (!posi_member(a, B).member) {
      throw PreconditionFailed("A is not contained in posi(B)");
    }
  }
  return !k_member(model, A) || k_member(model, B);
}

namespace {

std::optional<MixingWitness> as_witness(const ChoiceModel& model, const Gamble& f, const Gamble& g,
                                        std::size_t trial) {
  if (f == g) return std::nullopt;
  OptionSet B(f.space(), {f, g});
  OptionSet A = B;
  A.insert(f + g);
  // A is in posi(B) by construction; the LP recheck runs only on hits.
  if (!k_member(model, A) || k_member(model, B)) return std::nullopt;
  if (check_mixing_axiom_instance(model, B, A)) throw std::logic_error("mixing witness fails its recheck");
  return MixingWitness{f, g, std::move(B), std::move(A), trial};
}

// For distinct vertices Q1, Q2 of one member: v = Q1 - Q2 read as a gamble,
// centred at the midpoint of its lower and upper previsions. Then f = c + u
// and g = c - u have lower prevision 0 in that member while f + g = 2c > 0.
std::vector<std::pair<Gamble, Gamble>> targeted_candidates(const ChoiceModel& model) {
  std::vector<std::pair<Gamble, Gamble>> out;
  for (const auto& member : members_of(model)) {
    if (!member.has_vertices()) continue;
    const auto& vs = member.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        RationalVector d(vs[i].pmf().size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = vs[i].mass(k) - vs[j].mass(k);
        const Gamble v(member.space(), std::move(d));
        const Rational lo = lower_prevision(member, v);
        const Rational hi = upper_prevision(member, v);
        const Rational c = (hi - lo) / 2;
        if (c.sign() <= 0) continue;
        const Gamble u = v - (lo + hi) / 2;
        out.emplace_back(u + c, -u + c);
      }
    }
  }
  return out;
}

}  // namespace

std::optional<MixingWitness> find_mixing_violation(const ChoiceModel& model, std::size_t trials,
                                                   std::uint64_t seed) {
  if (trials == 0) throw PreconditionFailed("trials must be at least 1");
  const auto targeted = targeted_candidates(model);
  const std::size_t sweep = std::min(targeted.size(), trials);
  for (std::size_t t = 0; t < sweep; ++t) {
    if (auto w = as_witness(model, targeted[t].first, targeted[t].second, t)) return w;
  }

  const SpacePtr& space = space_of(model);
  auto draw = [&](std::size_t t) {
    Rng rng(mix_seed(seed, 0x4d49, t));
    Gamble f = random_gamble(rng, space);
    Gamble g = random_gamble(rng, space);
    return std::make_pair(std::move(f), std::move(g));
  };
  const auto hit = first_index_where(trials - sweep, [&](std::size_t t) {
    const auto [f, g] = draw(t);
    return as_witness(model, f, g, sweep + t).has_value();
  });
  if (!hit) return std::nullopt;
  const auto [f, g] = draw(*hit);
  return as_witness(model, f, g, sweep + *hit);
}

}  // namespace credal
