#pragma once

#include <string>
#include <vector>

#include "strand/intmatrix.hpp"
#include "strand/monoid.hpp"

namespace strand {

/// A finite commutative monoid given by a total multiplication table.
class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<int>> mul);

  int size() const { return static_cast<int>(names_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  const std::string& name(int a) const { return names_[a]; }

  static FiniteMonoid cyclic(int n);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  int identity_ = -1;
};

/// Totalize a finite partial monoid; throws when some pair is unsummable.
FiniteMonoid finite_monoid_from_pm(const PartialMonoid& m);

struct HomologyReport {
  AbelianGroup h0, h1;
  long objects = 0;
  long morphisms = 0;       // non-identity
  long two_simplices = 0;   // nondegenerate composable pairs
  int p_bound = 0;          // tuple length bound (nerve of tuples only)
};

/// H0 and H1 of the nerve of the summation category of a finite partial
/// monoid: objects are tuples of length <= p_bound, morphisms are index
/// maps theta with b_j = sum over theta^{-1}(j) of a_i.  Chains are used in
/// degrees <= 2, restricted to objects with p <= p_bound.
HomologyReport nerve_q_homology(const PartialMonoid& m, int p_bound, long budget = 2000000);

/// H0 and H1 of the two-sided bar category of f: A -> A': objects A',
/// morphisms (d, d') from d' to f(d) d'.
HomologyReport bar_homology_two_sided(const FiniteMonoid& a, const FiniteMonoid& a_prime,
                                      const std::vector<int>& f);

/// H0 and H1 of the one-object bar nerve of A (so H1 is the Grothendieck
/// group of A, computed through boundary matrices rather than through a
/// presentation).
HomologyReport bar_homology_one_object(const FiniteMonoid& a);

}  // namespace strand
