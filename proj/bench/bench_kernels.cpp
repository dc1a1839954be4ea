// Serial reference vs OpenMP for the three loop kernels. Arg 0 is serial,
// arg 1 parallel.

#include "credal/kernels.hpp"
#include "credal/random_models.hpp"

#include <benchmark/benchmark.h>

using namespace credal;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

const CredalSet& bench_model() {
  static const CredalSet m = [] {
    Rng rng(7);
    return gen_credal_set(rng, numbered_space(8), 5, 12);
  }();
  return m;
}

void BM_MapIndicesCoherence(benchmark::State& state) {
  const ChoiceModel model = bench_model();
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    auto out = map_indices<bool>(
        256,
        [&](std::size_t i) {
          Rng rng(mix_seed(3, i));
          return k_member(model, random_option_set(rng, space_of(model), 4));
        },
        exec);
    benchmark::DoNotOptimize(out);
  }
}

void BM_VariableScan(benchmark::State& state) {
  // No hit: the scan runs over every subset pair of a factorizing model.
  Rng rng(11);
  const ProductSpace ps = ProductSpace::make({"x0", "x1", "x2", "x3"}, {"y0", "y1", "y2"});
  const ChoiceModel model = gen_product_factorizing(rng, ps, 3, 12);
  const Exec previous = default_exec();
  set_default_exec(exec_of(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_irrelevant(model, ps.x, ps.y, Method::direct).holds);
  }
  set_default_exec(previous);
}

void BM_FirstIndexWhere(benchmark::State& state) {
  const CredalSet& model = bench_model();
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    auto hit = first_index_where(
        512,
        [&](std::size_t i) {
          Rng rng(mix_seed(5, i));
          return lower_prevision(model, random_gamble(rng, model.space())) > 2;
        },
        exec);
    benchmark::DoNotOptimize(hit);
  }
}

void BM_LowerEnvelopeBatch(benchmark::State& state) {
  const CredalSet& model = bench_model();
  std::vector<Gamble> gambles;
  Rng rng(13);
  for (int i = 0; i < 2048; ++i) gambles.push_back(random_gamble(rng, model.space()));
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(lower_envelope_batch(model, gambles, exec));
}

}  // namespace

BENCHMARK(BM_MapIndicesCoherence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VariableScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstIndexWhere)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowerEnvelopeBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
