#include "htlab/matrix.hpp"

#include <stdexcept>

namespace htlab {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: size mismatch");
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: size mismatch");
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
  return true;
}

Rat Matrix::trace() const {
  Rat t;
  for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix: vector size mismatch");
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Rat s;
    for (size_t j = 0; j < cols_; ++j) {
      const Rat& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) s += a * v[j];
    }
    r[i] = s;
  }
  return r;
}

Matrix Matrix::apply_rows(const Matrix& b) const { return b * transpose(); }

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Rat& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          const Rat& y = b.at(k, l);
          if (y.is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(rows, cols);
  size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("Matrix: vstack width mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

size_t Matrix::rref(std::vector<size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t piv = rank;
    while (piv < rows_ && at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
    Rat inv = at(rank, col).inv();
    for (size_t j = col; j < cols_; ++j)
      if (!at(rank, j).is_zero()) at(rank, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == rank) continue;
      const Rat f = at(i, col);
      if (f.is_zero()) continue;
      for (size_t j = col; j < cols_; ++j) {
        if (at(rank, j).is_zero()) continue;
        at(i, j) -= f * at(rank, j);
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& a, const Rat& c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace htlab
