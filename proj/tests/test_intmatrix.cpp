#include <doctest.h>

#include <random>

#include "strand/intmatrix.hpp"

using namespace strand;

TEST_SUITE_BEGIN("intmatrix");

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.push_back(std::vector<Int>(r.begin(), r.end()));
  return IntMatrix::from_rows(conv);
}

IntMatrix random_matrix(std::mt19937_64& rng, int max_side, int entry_bound) {
  std::uniform_int_distribution<int> side(1, max_side), entry(-entry_bound, entry_bound);
  IntMatrix m(side(rng), side(rng));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("determinants by fraction-free elimination") {
  CHECK(mat({{2, 4}, {6, 8}}).det() == -8);
  CHECK(mat({{1, 2}, {2, 4}}).det() == 0);
  CHECK(IntMatrix::identity(5).det() == 1);
  // cofactor-expansion oracle on random 4x4
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 6);
    if (m.rows() != m.cols()) continue;
    // permanent-style expansion with signs
    const size_t n = m.rows();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Int expected = 0;
    do {
      int sign = 1;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      Int term = sign;
      for (size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
      expected += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(m.det() == expected);
  }
}

TEST_CASE("Smith normal form on pinned examples") {
  SmithResult s = smith_normal_form(mat({{2, 4}, {6, 8}}));
  CHECK(check_smith_certificate(mat({{2, 4}, {6, 8}}), s, true));
  CHECK(s.diagonal() == std::vector<Int>{Int(2), Int(4)});

  IntMatrix diag = mat({{3, 0}, {0, 1}});
  SmithResult s2 = smith_normal_form(diag);
  CHECK(check_smith_certificate(diag, s2, true));
  CHECK(s2.diagonal() == std::vector<Int>{Int(1), Int(3)});  // divisibility fix-up

  IntMatrix zero(3, 2);
  SmithResult s3 = smith_normal_form(zero);
  CHECK(s3.u == IntMatrix::identity(3));
  CHECK(s3.v == IntMatrix::identity(2));
  CHECK(s3.diagonal() == std::vector<Int>{Int(0), Int(0)});
}

TEST_CASE("SNF certificates hold on random matrices") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, 8, 9);
    SmithResult s = smith_normal_form(m);
    CHECK(check_smith_certificate(m, s, true));
  }
}

TEST_CASE("determinant divisor oracle agrees with SNF") {
  IntMatrix m = mat({{2, 4}, {6, 8}});
  auto factors = determinant_divisor_invariants(m);
  CHECK(factors == std::vector<Int>{Int(2), Int(4)});

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 6, 5);
    auto oracle = determinant_divisor_invariants(a);
    auto diag = smith_normal_form(a).diagonal();
    std::vector<Int> nonzero;
    for (const Int& d : diag)
      if (d != 0) nonzero.push_back(d);
    CHECK(oracle == nonzero);
  }
}

TEST_CASE("cokernels and homology") {
  // Z^2 / <(2,0),(0,4)> = Z/2 + Z/4
  AbelianGroup g = cokernel(mat({{2, 0}, {0, 4}}));
  CHECK(g.rank == 0);
  CHECK(g.torsion == std::vector<Int>{Int(2), Int(4)});

  // Z^2 / <(2,4)> = Z + Z/2
  AbelianGroup h = cokernel(mat({{2}, {4}}));
  CHECK(h.rank == 1);
  CHECK(h.torsion == std::vector<Int>{Int(2)});

  // circle: one vertex, one loop edge, no 2-cells
  IntMatrix d1(1, 1);  // boundary of the loop is zero
  IntMatrix d2(1, 0);
  AbelianGroup h1 = homology_group(d1, d2);
  CHECK(h1.rank == 1);
  CHECK(h1.torsion.empty());

  // disc: the loop is killed twice (projective-plane style torsion)
  IntMatrix d2b(1, 1);
  d2b.at(0, 0) = 2;
  AbelianGroup h1b = homology_group(d1, d2b);
  CHECK(h1b.rank == 0);
  CHECK(h1b.torsion == std::vector<Int>{Int(2)});
}

TEST_SUITE_END();
