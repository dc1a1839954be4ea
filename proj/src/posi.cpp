#include "credal/posi.hpp"

#include "credal/errors.hpp"
#include "credal/lp.hpp"

namespace credal {

PosiMembership posi_member(const Gamble& h, const OptionSet& generators) {
  if (generators.empty()) throw PreconditionFailed("posi of an empty set");
  require_same_space(h.space(), generators.space());

  const std::size_t k = generators.size();
  LinearProgram lp;
  lp.objective.assign(k, Rational(1));
  for (std::size_t atom = 0; atom < h.size(); ++atom) {
    LinearConstraint row;
    row.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) row.coeffs[j] = generators[j][atom];
    row.rel = Relation::eq;
    row.rhs = h[atom];
    lp.constraints.push_back(std::move(row));
  }
  if (h.is_zero()) {
    lp.constraints.push_back(LinearConstraint{RationalVector(k, Rational(1)), Relation::eq, 1});
  }

  LpOutcome out = lp_minimize(lp);
  if (out.status != LpStatus::optimal) return {};
  return PosiMembership{true, std::move(out.witness)};
}

}  // namespace credal
