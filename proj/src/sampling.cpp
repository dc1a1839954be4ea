#include "credal/sampling.hpp"

namespace credal {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 finalizer over a combined key.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1) + 0xBF58476D1CE4E5B9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool Rng::coin(double p_true) { return std::bernoulli_distribution(p_true)(engine_); }

Rational Rng::lattice(std::int64_t lo, std::int64_t hi, std::int64_t den) {
  return Rational(uniform_int(lo * den, hi * den)) / den;
}

Gamble random_gamble(Rng& rng, const SpacePtr& space, std::int64_t bound, std::int64_t den) {
  RationalVector v(space->size());
  for (auto& x : v) x = rng.lattice(-bound, bound, den);
  return Gamble(space, std::move(v));
}

RationalVector random_pmf(Rng& rng, std::size_t n, std::int64_t max_den, double sparsity) {
  std::vector<std::int64_t> weights(n);
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = (sparsity > 0.0 && rng.coin(sparsity)) ? 0 : rng.uniform_int(1, max_den);
    total += w;
  }
  if (total == 0) {
    weights[rng.index(n)] = 1;
    total = 1;
  }
  RationalVector pmf(n);
  for (std::size_t i = 0; i < n; ++i) pmf[i] = Rational(weights[i]) / total;
  return pmf;
}

Event random_event(Rng& rng, const SpacePtr& space) {
  std::vector<bool> mask(space->size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = rng.coin();
  return Event(space, std::move(mask));
}

OptionSet random_option_set(Rng& rng, const SpacePtr& space, std::size_t max_size, std::int64_t bound,
                            std::int64_t den) {
  const std::size_t k = 1 + rng.index(max_size);
  std::vector<Gamble> gambles;
  for (std::size_t i = 0; i < k; ++i) gambles.push_back(random_gamble(rng, space, bound, den));
  return OptionSet(space, std::move(gambles));
}

}  // namespace credal
