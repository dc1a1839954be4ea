// One line per acceptance criterion. Each criterion runs its battery with the
// default configuration (seed 1, default case counts); three of them also
// carry a wall-clock limit.

#include "credal/verify_suite.hpp"

#include <cstdio>
#include <optional>
#include <string>

using namespace credal;

namespace {

struct Criterion {
  const char* id;
  const char* battery;
  const char* what;
  std::optional<double> limit_seconds;
};

const Criterion kCriteria[] = {
    {"AC1", "linear_events", "linear models: cone test == classical independence", 10.0},
    {"AC2", "credal_events", "credal sets: vertex-pair test == triviality or precision+factorization", 30.0},
    {"AC3", "complementation", "verdicts invariant under the four complement combinations", std::nullopt},
    {"AC4", "precise_collapse", "meu == maximality == E-admissibility on linear models", std::nullopt},
    {"AC5", "mixing", "VAC2 witness within 100 trials, none for all-linear lower sets", std::nullopt},
    {"AC6", "coherence", "K0-K4 over 1000 instances per model kind", std::nullopt},
    {"AC7", "variable_level", "subset verdicts agree with the partition falsifier", 60.0},
    {"AC8", "marginal_mixing", "COR1 clauses, K_Y membership, premises imply precise marginals", std::nullopt},
    {"AC9", "lp_backend", "vertex == constraint envelopes; positive slack for members", std::nullopt},
    {"AC10", "lp_properties", "LP1-LP8 over 500 instances on 20 credal sets", std::nullopt},
};

}  // namespace

int main() {
  SuiteConfig config;
  int failed = 0;
  for (const auto& c : kCriteria) {
    bool pass = false;
    std::string info;
    try {
      const BatteryResult r = run_battery(c.battery, config);
      const bool in_time = !c.limit_seconds || r.seconds < *c.limit_seconds;
      pass = r.ok() && in_time;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%zu cases, %zu failures, %.2f s", r.cases, r.failures, r.seconds);
      info = buf;
      if (c.limit_seconds) info += " (limit " + std::to_string(static_cast<int>(*c.limit_seconds)) + " s)";
      if (!r.ok()) info += "; first counterexample: " + r.first_counterexample.dump();
    } catch (const std::exception& e) {
      info = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s %s: %s; %s\n", pass ? "PASS" : "FAIL", c.id, c.battery, c.what, info.c_str());
    std::fflush(stdout);
    failed += !pass;
  }
  return failed == 0 ? 0 : 1;
}
