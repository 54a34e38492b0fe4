#pragma once

#include <cstddef>
#include <vector>

#include "htlab/rational.hpp"

namespace htlab {

using Vec = std::vector<Rat>;

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  Vec row(size_t i) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rat& c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  Rat trace() const;

  Vec apply(const Vec& v) const;           // matrix * column vector
  Matrix apply_rows(const Matrix& b) const;  // rows of b mapped through *this: b * this^t

  static Matrix kronecker(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const std::vector<Matrix>& blocks);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// In-place reduction to reduced row echelon form; returns rank.
  /// Pivot choice: first nonzero entry scanning columns left to right.
  size_t rref(std::vector<size_t>* pivot_cols = nullptr);

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rat& c);
bool is_zero(const Vec& v);

}  // namespace htlab
