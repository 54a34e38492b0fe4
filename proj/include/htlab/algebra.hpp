#pragma once

#include <cstddef>
#include <string>

#include "htlab/matrix.hpp"

namespace htlab {

/// The four real composition algebras, as coordinate vectors with a fixed
/// multiplication table obtained by Cayley-Dickson doubling R -> C -> H -> O.
/// Basis order: e0 = 1 real unit, then imaginary units; doubling pairs the
/// first-half basis with its shifted copy.
enum class AlgebraId { R, C, H, O };

size_t algebra_dim(AlgebraId a);
AlgebraId algebra_of_dim(size_t dim);
std::string algebra_name(AlgebraId a);

struct AlgebraElement {
  AlgebraId alg;
  Vec coords;

  AlgebraElement() : alg(AlgebraId::R), coords(1) {}
  AlgebraElement(AlgebraId a, Vec c);
  static AlgebraElement zero(AlgebraId a);
  static AlgebraElement one(AlgebraId a);
  static AlgebraElement basis(AlgebraId a, size_t i);

  bool operator==(const AlgebraElement& o) const { return alg == o.alg && coords == o.coords; }
  bool is_zero() const { return htlab::is_zero(coords); }
};

/// Basis product e_i * e_j = sign * e_k in the fixed table.
void basis_product(AlgebraId a, size_t i, size_t j, int& sign_out, size_t& index_out);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement conjugate(const AlgebraElement& a);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rat& c);
Rat norm2(const AlgebraElement& a);  // sum of squared coordinates = |a|^2

/// Matrix of x -> a*x (resp. x -> x*a) in the coordinate basis.
Matrix left_mult_matrix(const AlgebraElement& a);
Matrix right_mult_matrix(const AlgebraElement& a);

/// Matrix of coordinate conjugation (diag(1,-1,...,-1)).
Matrix conjugation_matrix(AlgebraId a);

}  // namespace htlab
