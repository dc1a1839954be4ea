#pragma once

// Seeded random draws of exact rational objects.

#include "credal/model_core.hpp"

#include <cstdint>
#include <random>

namespace credal {

/// Seed derivation that keeps independent streams for (seed, stream, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin(double p_true = 0.5);
  /// Uniform on the lattice {k/den : lo*den <= k <= hi*den}.
  Rational lattice(std::int64_t lo, std::int64_t hi, std::int64_t den);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Gamble random_gamble(Rng& rng, const SpacePtr& space, std::int64_t bound = 3, std::int64_t den = 4);

/// Integer weights in 1..max_den, normalised; denominators are at most
/// n * max_den. With probability `sparsity` each atom is zeroed (at least one
/// atom stays positive).
RationalVector random_pmf(Rng& rng, std::size_t n, std::int64_t max_den = 12, double sparsity = 0.0);

Event random_event(Rng& rng, const SpacePtr& space);

OptionSet random_option_set(Rng& rng, const SpacePtr& space, std::size_t max_size,
                            std::int64_t bound = 3, std::int64_t den = 4);

}  // namespace credal
