#pragma once

#include <set>

#include "htlab/htype.hpp"
#include "htlab/subspace.hpp"

namespace htlab {

/// True iff the bracket vanishes on S x S (checked on basis pairs; bilinearity
/// makes that sufficient).
bool is_horizontal(const HTypeAlgebra& alg, const Subspace& s);

/// { w in v : bracket(w, S) = 0 }, computed as the orthogonal complement of
/// sum_t J_t(S).
Subspace centralizer(const HTypeAlgebra& alg, const Subspace& s);

/// Horizontal and equal to its own centralizer.
bool is_maximal_horizontal(const HTypeAlgebra& alg, const Subspace& s);

/// { n/k : 2 <= k <= m+1 and k divides n }.
std::set<size_t> allowed_dims(size_t n, size_t m);

/// Deterministic greedy completion of a horizontal seed to a maximal
/// horizontal subspace. When invariance operators are given, each accepted
/// vector is added together with its operator orbit and the joint span is
/// re-tested; candidates are scanned in canonical centralizer-basis order.
/// Throws std::invalid_argument if the seed is not horizontal.
Subspace extend_horizontal(const HTypeAlgebra& alg, const Subspace& seed,
                           const std::vector<Matrix>& invariance = {});

}  // namespace htlab
