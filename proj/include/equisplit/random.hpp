#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "equisplit/bundle.hpp"

namespace equisplit {

struct RandomInstance {
  EquivariantBundle bundle;
  std::vector<LineSummand> expected;  // hidden answer, as given
};

struct ReframeOptions {
  int max_exponent = 3;  // bound on |d| for every elementary multiplier
};

// Applies `ops` random weight-respecting elementary frame changes to E:
// unipotent column operations with multipliers in k[z], unipotent row
// operations with multipliers in k[w], chart-local swaps and scalings.
// The result is equivariantly isomorphic to E. Pure function of the seed.
EquivariantBundle reframe(const EquivariantBundle& E, std::uint64_t seed, int ops,
                          const ReframeOptions& options = {});

// diag(z^{-n_i}) disguised by `complexity` elementary operations.
RandomInstance random_instance(std::uint64_t seed, const std::vector<LineSummand>& summands,
                               const TorusAction& torus, int complexity,
                               const ReframeOptions& options = {});

// Nonzero multipliers drawn by the generator.
const std::vector<Rational>& multiplier_pool();

}  // namespace equisplit
