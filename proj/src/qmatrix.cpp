#include "strand/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace strand {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QVec QMatrix::row(size_t r) const {
  QVec out(cols_);
  for (size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  QMatrix m(rows_, rhs.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (a == 0) continue;
      for (size_t c = 0; c < rhs.cols_; ++c) m.at(r, c) += a * rhs.at(k, c);
    }
  return m;
}

QVec QMatrix::apply(const QVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix apply");
  QVec out(rows_, Rat(0));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (at(r, c) != Rat(r == c ? 1 : 0)) return false;
  return true;
}

bool QMatrix::is_orthogonal() const { return (transpose() * *this).is_identity(); }

QMatrix QMatrix::vstack(const QMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("column mismatch in vstack");
  QMatrix m(rows_ + below.rows_, cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (size_t r = 0; r < below.rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = below.at(r, c);
  return m;
}

size_t QMatrix::rref() {
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    size_t sel = pivot_row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row)
      for (size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pivot_row, c));
    Rat inv = Rat(1) / at(pivot_row, col);
    for (size_t c = col; c < cols_; ++c) at(pivot_row, c) *= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row || at(r, col) == 0) continue;
      Rat f = at(r, col);
      for (size_t c = col; c < cols_; ++c) at(r, c) -= f * at(pivot_row, c);
    }
    ++pivot_row;
  }
  rows_ = pivot_row;
  data_.resize(rows_ * cols_);
  return pivot_row;
}

QMatrix QMatrix::nullspace() const {
  QMatrix red = *this;
  size_t rank = red.rref();
  std::vector<size_t> pivot_col(rank);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t r = 0; r < rank; ++r) {
    size_t c = 0;
    while (c < cols_ && red.at(r, c) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  QMatrix basis(cols_ - rank, cols_);
  size_t out = 0;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(out, free_col) = 1;
    for (size_t r = 0; r < rank; ++r) basis.at(out, pivot_col[r]) = -red.at(r, free_col);
    ++out;
  }
  basis.rref();
  return basis;
}

}  // namespace strand
