#pragma once

#include <optional>

#include "htlab/matrix.hpp"

namespace htlab {

/// Linear subspace of Q^n held by its reduced-row-echelon basis, so that two
/// subspaces are equal iff their basis matrices are entry-wise equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(size_t ambient_dim);
  static Subspace full(size_t ambient_dim);
  /// Row space of `vectors` in canonical form. Idempotent.
  static Subspace row_space(const Matrix& vectors);
  static Subspace span_of(const std::vector<Vec>& vectors, size_t ambient_dim);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(size_t i) const { return basis_.row(i); }
  /// Pivot columns of the canonical basis; coordinates of a member vector in
  /// this basis are its entries at these columns.
  const std::vector<size_t>& pivot_cols() const { return pivots_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;

  /// Residual of v after eliminating against the canonical basis; zero iff v is
  /// in the subspace.
  Vec reduce(const Vec& v) const;

  Subspace orth_complement() const;
  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

  /// Image under a linear map (columns convention): span of { M v : v in S }.
  Subspace map_by(const Matrix& m) const;

  /// Lexicographic order on (ambient, dim, entries); used for deduplication.
  static int compare(const Subspace& a, const Subspace& b);

 private:
  size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
  std::vector<size_t> pivots_;
};

/// Null space of m (right kernel, as row-basis subspace of Q^cols).
Subspace kernel(const Matrix& m);

/// One solution of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Eigenspace of an exact involution for eigenvalue +1 or -1.
/// Throws std::invalid_argument unless m is square with m*m == I.
Subspace pm1_eigenspace(const Matrix& m, int sign_value);

}  // namespace htlab
