#include "htlab/subspace.hpp"

#include <stdexcept>

namespace htlab {

Subspace Subspace::zero(size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  for (size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::row_space(const Matrix& vectors) {
  Subspace s;
  s.ambient_ = vectors.cols();
  Matrix work = vectors;
  size_t rank = work.rref(&s.pivots_);
  Matrix basis(rank, vectors.cols());
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < vectors.cols(); ++j) basis.at(i, j) = work.at(i, j);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span_of(const std::vector<Vec>& vectors, size_t ambient_dim) {
  if (vectors.empty()) return zero(ambient_dim);
  return row_space(Matrix::from_rows(vectors));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  Vec r = v;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    const Rat& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    const Rat f = c;
    for (size_t j = pivots_[i]; j < ambient_; ++j) {
      if (basis_.at(i, j).is_zero()) continue;
      r[j] -= f * basis_.at(i, j);
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return htlab::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  for (size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

Subspace Subspace::orth_complement() const {
  if (dim() == 0) return full(ambient_);
  return kernel(basis_);
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  return row_space(Matrix::vstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  return sum(a.orth_complement(), b.orth_complement()).orth_complement();
}

Subspace Subspace::map_by(const Matrix& m) const {
  if (m.cols() != ambient_) throw std::invalid_argument("Subspace: map size mismatch");
  if (dim() == 0) return zero(m.rows());
  return row_space(m.apply_rows(basis_));
}

int Subspace::compare(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.ambient_; ++j) {
      int c = a.basis_.at(i, j).compare(b.basis_.at(i, j));
      if (c != 0) return c;
    }
  return 0;
}

Subspace kernel(const Matrix& m) {
  Matrix work = m;
  std::vector<size_t> pivots;
  size_t rank = work.rref(&pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<Vec> gens;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols());
    v[free_col] = Rat(1);
    for (size_t i = 0; i < rank; ++i) v[pivots[i]] = -work.at(i, free_col);
    gens.push_back(std::move(v));
  }
  return Subspace::span_of(gens, m.cols());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<size_t> pivots;
  aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

Subspace pm1_eigenspace(const Matrix& m, int sign_value) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pm1_eigenspace: matrix not square");
  if (sign_value != 1 && sign_value != -1) throw std::invalid_argument("pm1_eigenspace: sign must be +1 or -1");
  if (!(m * m).is_identity()) throw std::invalid_argument("pm1_eigenspace: matrix is not an involution");
  Matrix shifted = m;
  for (size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= Rat(sign_value);
  return kernel(shifted);
}

}  // namespace htlab
