#pragma once

#include "htlab/clifford.hpp"

namespace htlab {

/// Two-step algebra v (+) R^m with bracket determined by <z,[u,v]> = <J_z u, v>.
/// Vectors in v and in the center are plain coordinate vectors.
struct HTypeAlgebra {
  HTypeSpec spec;
  CliffordRep rep;
  size_t n = 0;  // dim v
  int m = 0;     // dim of the center
};

HTypeAlgebra build(const HTypeSpec& spec);

/// Center-valued bracket: component t is <J_t u, v>.
Vec bracket(const HTypeAlgebra& alg, const Vec& u, const Vec& v);

/// J_z u = sum_t z_t J_t u.
Vec j_action(const HTypeAlgebra& alg, const Vec& z, const Vec& u);

/// Matrix of J_z.
Matrix j_matrix(const HTypeAlgebra& alg, const Vec& z);

/// Exact verification of the defining conditions: J_z^2 = -|z|^2 Id on the
/// center basis and seeded random z, bracket skewness, and surjectivity of
/// ad(u) for seeded random nonzero u.
CheckReport verify_htype(const HTypeAlgebra& alg, uint64_t seed = 0);

}  // namespace htlab
