#pragma once

#include "credal/model_core.hpp"

namespace credal {

struct PosiMembership {
  bool member = false;
  /// One coefficient per generator, in option-set order; nonnegative and not
  /// all zero. Empty when not a member.
  RationalVector coefficients;
};

/// Is h a positive linear combination of the generators? Decided by an exact
/// feasibility LP; for h = 0 the coefficients are also required to sum to 1.
PosiMembership posi_member(const Gamble& h, const OptionSet& generators);

}  // namespace credal
