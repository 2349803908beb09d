#pragma once

#include <cstddef>
#include <vector>

#include "strand/rational.hpp"

namespace strand {

/// Dense matrix over the rationals.  Row-major, value semantics, exact.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMatrix identity(size_t n);
  static QMatrix from_rows(const std::vector<QVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  QVec row(size_t r) const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& rhs) const;
  QVec apply(const QVec& v) const;

  bool operator==(const QMatrix& rhs) const = default;

  bool is_identity() const;
  /// Q^T Q == I, checked exactly.
  bool is_orthogonal() const;

  /// Stack the rows of `below` under this matrix.  Column counts must match
  /// (an empty matrix stacks with anything).
  QMatrix vstack(const QMatrix& below) const;

  /// In-place reduction to reduced row echelon form; returns the rank.
  /// Zero rows are deleted, so the result has exactly `rank` rows.
  size_t rref();

  /// Basis of the right nullspace {v : Av = 0}, one row per basis vector,
  /// itself in reduced row echelon form.
  QMatrix nullspace() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace strand
