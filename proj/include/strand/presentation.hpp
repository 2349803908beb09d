#pragma once

#include <string>
#include <vector>

#include "strand/intmatrix.hpp"
#include "strand/monoid.hpp"

namespace strand {

/// Commutative monoid presentation extracted from a finite partial monoid:
/// one generator per nonzero element, one relation per summable multiset.
/// Relations are stored as integer vectors LHS - RHS over the generators,
/// deduplicated; the arity bound is part of the data.
struct MonoidPresentation {
  std::vector<Elem> generators;
  std::vector<std::vector<Int>> relations;
  int arity_bound = 0;

  int generator_index(const Elem& e) const;
};

/// Scan all summable multisets of nonzero elements up to the arity bound
/// and emit [a_1] + ... + [a_n] = [sum] (right side empty when the sum is
/// zero).  Throws when the carrier is infinite.
MonoidPresentation pi0_presentation(const PartialMonoid& m, int arity_bound);

/// The universal abelian group of the presented monoid with the universal
/// map on generators, computed as the cokernel of the relation lattice via
/// Smith normal form.
struct GrothendieckResult {
  AbelianGroup group;
  /// Image coordinates of each generator: first the torsion coordinates
  /// (mod group.torsion[i]), then group.rank free coordinates.
  std::vector<std::vector<Int>> generator_images;

  std::vector<Int> class_of(const std::vector<Int>& generator_combination) const;
  std::vector<Int> zero_class() const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> negate(const std::vector<Int>& a) const;
  bool is_zero(const std::vector<Int>& a) const;

  /// Internal: the change of basis of the SNF used for class_of.
  IntMatrix basis_change;
  std::vector<Int> all_factors;  // diagonal incl. 1s, padded with 0s to n
};

GrothendieckResult grothendieck_group(const MonoidPresentation& pres);

}  // namespace strand
