#pragma once

#include <string>
#include <vector>

#include "strand/rational.hpp"

namespace strand {

/// Dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Int& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Int det() const;

  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal with a divisibility
/// chain d1 | d2 | ... (nonnegative, trailing zeros).
struct SmithResult {
  IntMatrix u, d, v;
  std::vector<Int> diagonal() const;
  size_t rank() const;
};

/// Deterministic Smith normal form: pivots are chosen as the smallest
/// nonzero absolute value, ties broken by row then column index.
SmithResult smith_normal_form(const IntMatrix& a);

/// Invariant factor diagonal alone, skipping the U/V bookkeeping; suited to
/// large relation matrices.
std::vector<Int> snf_diagonal_only(const IntMatrix& a);

/// Exact check of the certificate equation and, when `with_det` is set, of
/// |det U| = |det V| = 1 and the divisibility chain.
bool check_smith_certificate(const IntMatrix& a, const SmithResult& s, bool with_det = true);

/// Independent oracle: the k-th determinant divisor is the gcd of all k x k
/// minors; invariant factors are successive quotients.  Throws when the
/// minor count exceeds `minor_budget`.  Returns the nontrivial invariant
/// factors (including 1 entries) up to the rank.
std::vector<Int> determinant_divisor_invariants(const IntMatrix& a, long minor_budget = 50000000);

/// Isomorphism type of a finitely generated abelian group.
struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;  // divisibility chain, entries >= 2

  bool operator==(const AbelianGroup& rhs) const = default;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

/// Z^m / (column space of A) for A mapping Z^n -> Z^m.
AbelianGroup cokernel(const IntMatrix& a);

/// ker(d_out) / im(d_in) for a chain segment
///   Z^{n_high} --d_in--> Z^{n_mid} --d_out--> Z^{n_low}.
/// Requires d_out * d_in = 0.
AbelianGroup homology_group(const IntMatrix& d_out, const IntMatrix& d_in);

}  // namespace strand
