#pragma once

// Seeded model generators and the named fixtures.

#include "credal/marginals.hpp"
#include "credal/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace credal {

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Replaces the main case count of every battery when set.
  std::optional<std::size_t> trials;
  std::size_t min_space = 2;
  std::size_t max_space = 8;
  std::size_t max_vertices = 5;
  std::size_t subset_cap = 16;
  std::int64_t max_den = 12;
  /// Mutation knob for the smoke test: the characterization route answers
  /// "holds" unconditionally.
  bool mutate_characterization = false;
  /// Battery names to run; empty runs all of them.
  std::vector<std::string> batteries;

  /// Throws ConfigError on zero trials or inconsistent bounds.
  void validate() const;
  std::size_t count(std::size_t default_count) const { return trials.value_or(default_count); }
};

enum class GenKind { linear, credal, product_factorizing, lower_set };
std::string to_string(GenKind k);

struct GeneratedModel {
  ChoiceModel model;
  /// Set for product_factorizing models.
  std::optional<ProductSpace> product;
};

/// Atoms "w0", "w1", ...
SpacePtr numbered_space(std::size_t n);

GeneratedModel gen_random_model(const SuiteConfig& config, GenKind kind, Rng& rng);

/// Credal set with `count` distinct vertices (fewer only when the space is
/// too small to hold that many distinct lattice pmfs).
CredalSet gen_credal_set(Rng& rng, const SpacePtr& space, std::size_t count, std::int64_t max_den,
                         double sparsity = 0.0);

/// Credal set on a product space whose vertices are products of varying
/// X-marginals with one shared Y-marginal. With `positive_x` every X-marginal
/// has full support.
CredalSet gen_product_factorizing(Rng& rng, const ProductSpace& ps, std::size_t count, std::int64_t max_den,
                                  bool positive_x = false);

/// A probability-interval polytope l <= p <= u given both ways: by its
/// vertices, listed exhaustively (all atoms but one sit at a bound), and by
/// its bound constraints.
struct PolytopePair {
  CredalSet vertex_form;
  CredalSet constraint_form;
};
PolytopePair gen_interval_polytope(Rng& rng, const SpacePtr& space, std::int64_t max_den);

namespace fixtures {

/// Atoms ab, a~b, ~ab, ~a~b; A = {ab, a~b}; B = {ab, ~ab}. Built as the
/// product of X in {a, ~a} and Y in {b, ~b}.
struct Omega4 {
  ProductSpace product;
  Event a;
  Event b;
};
Omega4 omega4();

LinearPrevision unif();
LinearPrevision dep();
LinearPrevision p2();
CredalSet c2();
CredalSet vac2();
ArchimedeanModel eadm();

struct Cor1 {
  ProductSpace product;
  ArchimedeanModel model;
  LinearPrevision r1;  // Y-marginal of the first member
  LinearPrevision r2;  // Y-marginal of the second member
};
Cor1 cor1();

}  // namespace fixtures

}  // namespace credal
