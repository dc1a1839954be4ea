#include "credal/kernels.hpp"
#include "credal/random_models.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace credal;

namespace {
struct ExecGuard {
  Exec saved = default_exec();
  ~ExecGuard() { set_default_exec(saved); }
};
}  // namespace

TEST_CASE("map_indices: serial and parallel give the same vector") {
  auto fn = [](std::size_t i) { return Rational(static_cast<long>(i * i), static_cast<long>(i + 1)); };
  CHECK(map_indices<Rational>(500, fn, Exec::serial) == map_indices<Rational>(500, fn, Exec::parallel));
  CHECK(map_indices<int>(0, [](std::size_t) { return 1; }, Exec::parallel).empty());
}

TEST_CASE("exceptions inside parallel loops reach the caller") {
  auto fn = [](std::size_t i) -> int {
    if (i == 37) throw std::runtime_error("boom");
    return 0;
  };
  CHECK_THROWS_AS(map_indices<int>(100, fn, Exec::parallel), std::runtime_error);
  CHECK_THROWS_AS(first_index_where(100, [](std::size_t i) -> bool {
    if (i == 5) throw std::runtime_error("boom");
    return false;
  }, Exec::parallel), std::runtime_error);
}

TEST_CASE("first_index_where returns the smallest hit in both modes") {
  for (std::size_t stride : {1u, 7u, 97u, 1000u}) {
    auto pred = [stride](std::size_t i) { return i >= 13 && i % stride == 0; };
    const auto s = first_index_where(900, pred, Exec::serial);
    const auto p = first_index_where(900, pred, Exec::parallel);
    CHECK(s == p);
  }
  CHECK_FALSE(first_index_where(50, [](std::size_t) { return false; }, Exec::parallel).has_value());
}

TEST_CASE("lower_envelope_batch matches pointwise evaluation") {
  Rng rng(17);
  const CredalSet m = gen_credal_set(rng, numbered_space(6), 4, 12);
  std::vector<Gamble> gs;
  for (int i = 0; i < 200; ++i) gs.push_back(random_gamble(rng, m.space()));
  const RationalVector par = lower_envelope_batch(m, gs, Exec::parallel);
  const RationalVector ser = lower_envelope_batch(m, gs, Exec::serial);
  CHECK(par == ser);
  for (std::size_t i = 0; i < gs.size(); ++i) CHECK(par[i] == lower_prevision(m, gs[i]));
}

TEST_CASE("search results do not depend on the execution mode") {
  ExecGuard guard;
  const ProductSpace ps = ProductSpace::make({"x0", "x1", "x2"}, {"y0", "y1"});
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(mix_seed(41, 6, t));
    const CredalSet m = gen_credal_set(rng, ps.space, 3, 8);
    set_default_exec(Exec::serial);
    const auto vs = s_irrelevant(m, ps.x, ps.y, Method::direct);
    const auto ws = s_irrelevant_variables_sampled(m, ps.x, ps.y, 40, t);
    const auto ms = find_mixing_violation(m, 60, t);
    set_default_exec(Exec::parallel);
    const auto vp = s_irrelevant(m, ps.x, ps.y, Method::direct);
    const auto wp = s_irrelevant_variables_sampled(m, ps.x, ps.y, 40, t);
    const auto mp = find_mixing_violation(m, 60, t);
    CHECK(vs.holds == vp.holds);
    if (vs.variable_witness) {
      CHECK(vs.variable_witness->first_subset == vp.variable_witness->first_subset);
      CHECK(vs.variable_witness->second_subset == vp.variable_witness->second_subset);
    }
    CHECK(ws.has_value() == wp.has_value());
    if (ws) CHECK(ws->replay == wp->replay);
    CHECK(ms.has_value() == mp.has_value());
    if (ms) CHECK(ms->A == mp->A);
  }
}
