#pragma once

#include <cstdint>

#include "htlab/horizontal.hpp"

namespace htlab {

struct SearchConfig {
  uint64_t seed = 0;
  size_t trials = 1;
  long long coordinate_bound = 1;  // candidate entries drawn from -b..b
  size_t target_dim = 1;
};

struct SearchReport {
  std::vector<Subspace> found;  // deduplicated, sorted by canonical form
  size_t trials_run = 0;
  bool exhaustive = false;
  long long grid_bound = 0;  // meaningful only when exhaustive
  uint64_t seed = 0;
};

/// Seeded randomized search for horizontal subspaces of the target dimension.
/// Deterministic given (algebra, config): trial k draws its vectors from a
/// generator seeded by mixing the base seed with k.
SearchReport random_horizontal(const HTypeAlgebra& alg, const SearchConfig& cfg);

/// Exhaustive scan over all spans of target_dim distinct grid directions
/// (vectors with entries in -b..b, primitive, first nonzero positive), in
/// lexicographic order. Exhaustive for that grid only. Throws
/// std::invalid_argument when the tuple count exceeds the budget (1e7).
SearchReport exhaustive_tiny(const HTypeAlgebra& alg, size_t target_dim, long long coordinate_bound);

/// The m=8 irreducible verification suite: centralizer formula, forced
/// noncommutation, two-plane extension, and the two eigenspace Lagrangians,
/// on seeded random rational instances.
CheckReport octonion_suite(uint64_t seed);

}  // namespace htlab
