#pragma once

#include <optional>

#include "htlab/algebra.hpp"
#include "htlab/horizontal.hpp"

namespace htlab {

/// Checklist attached to a candidate Lagrangian. Valid only when every check
/// holds; orbit_type is set exactly when m = 0 mod 4 and the label is defined.
struct LagrangianCertificate {
  Subspace subspace;
  bool half_dim = false;
  bool isotropic = false;
  bool cplus_closed = false;
  bool complement_lagrangian = false;
  bool jz_maps_to_complement = false;
  std::optional<int> orbit_type;

  bool valid() const {
    return half_dim && isotropic && cplus_closed && complement_lagrangian && jz_maps_to_complement;
  }
};

/// Existence of a half-dimensional horizontal subspace, by residue of m mod 8:
/// 0,1,2,4 -> any multiplicity; 3,7 -> p+ == p-; 5,6 -> p even.
bool lag_exists(const HTypeSpec& spec);

/// Case-by-case construction of a Lagrangian representative. For m = 0 mod 4,
/// orbit_index selects the representative with that many plus-eigenspace
/// blocks (default: all of them, i.e. orbit_index = p). Throws
/// std::invalid_argument when lag_exists is false or the index is out of
/// range, std::runtime_error if no construction path certifies.
Subspace construct_lagrangian(const HTypeAlgebra& alg, std::optional<int> orbit_index = std::nullopt);

LagrangianCertificate certify_lagrangian(const HTypeAlgebra& alg, const Subspace& l, uint64_t seed = 0);

/// The C(m+r) module structure on the tensor product of a module with
/// m = 0 mod 4 and an arbitrary second factor: the first factor's generators
/// tensor the identity, the second factor's generators are twisted by the
/// first volume element.
HTypeAlgebra tensor_extension(const HTypeAlgebra& a, const HTypeAlgebra& b);

/// L8 (x) Lr + L8-perp (x) Lr-perp in the tensor coordinates used by
/// periodic_generators and tensor_extension. Both inputs must certify in
/// their own algebras.
Subspace tensor_lagrangian(const HTypeAlgebra& alg8, const Subspace& l8, const HTypeAlgebra& algr,
                           const Subspace& lr);

/// Orbit label for m = 0 mod 4: multiplicity of the plus eigenspace of K
/// inside l, in units of one irreducible half-block. Throws on the wrong
/// residue or a non-integer ratio.
int orbit_type(const HTypeAlgebra& alg, const Subspace& l);

struct TraceObstruction {
  Rat k_trace;
  bool obstructed;  // true means no Lagrangian can exist
};

/// Exact trace of K, defined for m = 3 mod 4.
TraceObstruction trace_obstruction(const HTypeAlgebra& alg);

/// Parameter blocks for the matrix-condition cases. Entries live in the base
/// ring of the case: real for residue 1, complex for residue 2, quaternion
/// for residue 3. Grids are p x p, row-major.
struct ParamBlocks {
  int case_residue = 1;  // 1, 2 or 3
  size_t p = 1;
  std::vector<AlgebraElement> A, B, C, D;

  static ParamBlocks make(int case_residue, size_t p);
  AlgebraId ring() const;
  const AlgebraElement& at(const std::vector<AlgebraElement>& g, size_t i, size_t j) const {
    return g[i * p + j];
  }
};

/// The case's exact isotropy condition on the blocks: A^t B - B^t A = 0 for
/// residues 1 and 2 (plain transpose), (A+C)*(A+C) - (B+D)*(B+D) = 0 for
/// residue 3 (conjugate transpose).
bool param_isotropy(const ParamBlocks& blocks);

/// The subspace the blocks parametrize, in the algebra's coordinates.
/// Supported for the base algebras m = 1, 2, 3; contract:
/// param_isotropy(blocks) == is_horizontal(realize(blocks)).
Subspace realize(const HTypeAlgebra& alg, const ParamBlocks& blocks);

/// Membership test for automorphisms acting trivially on the center:
/// commutation with every J_i J_j plus xi^t J_i xi = J_i for every i (the
/// latter is exactly bracket preservation on all basis pairs).
bool is_aut_o(const HTypeAlgebra& alg, const Matrix& xi);

struct AutCandidate {
  Matrix xi;
  bool valid;
};

/// Assemble the block operator of the case and report whether the blocks
/// satisfy the case's group conditions. Supported: residues 1, 2, 3 on the
/// base algebras, and m = 0 mod 4 with a real invertible A block acting as
/// diag(A, (A^t)^-1) across copies.
AutCandidate build_aut_from_blocks(const HTypeAlgebra& alg, const ParamBlocks& blocks);

/// Image of s under a verified automorphism; throws if xi fails is_aut_o.
Subspace apply_aut(const HTypeAlgebra& alg, const Matrix& xi, const Subspace& s);

}  // namespace htlab
