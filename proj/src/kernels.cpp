#include "credal/kernels.hpp"

#include <omp.h>

namespace credal {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec exec) { g_exec.store(exec); }

int max_threads() { return omp_get_max_threads(); }

RationalVector lower_envelope_batch(const CredalSet& model, const std::vector<Gamble>& gambles, Exec exec) {
  return map_indices<Rational>(
      gambles.size(), [&](std::size_t i) { return lower_prevision(model, gambles[i]); }, exec);
}

}  // namespace credal
