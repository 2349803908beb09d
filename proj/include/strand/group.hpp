#pragma once

#include <memory>
#include <string>
#include <vector>

namespace strand {

/// A finite group given by an explicit multiplication table.  Elements are
/// referred to by index; index 0 need not be the identity (it is located at
/// construction).  Validation is by exhaustion, so carriers are expected to
/// be small (the subgroup enumerator enforces a bound).
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::string> element_ids,
              std::vector<std::vector<int>> mul_table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  /// Direct product, elements named "a|b".
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(ids_.size()); }
  const std::string& element_id(int g) const { return ids_[g]; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return mul_[g][h]; }
  int inv(int g) const { return inv_[g]; }

  bool is_abelian() const;
  /// True when `subset` (element indices) is closed under mul and inverse
  /// and contains the identity.
  bool is_subgroup(const std::vector<int>& subset) const;

 private:
  std::string name_;
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_ = -1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// All subgroups of G, each as a sorted list of element indices.  Includes
/// the trivial and full subgroups; result is sorted by size then elements.
/// Throws when |G| exceeds `order_bound`.
std::vector<std::vector<int>> subgroups(const FiniteGroup& g, int order_bound = 24);

/// A finite pointed set with G-action.  The basepoint is a distinguished
/// element fixed by every group element.
class PointedGSet {
 public:
  PointedGSet(GroupPtr group, std::vector<std::string> element_ids, int basepoint,
              std::vector<std::vector<int>> action_table);

  /// Trivial action of `group` on {basepoint, x_1, ..., x_n}.
  static PointedGSet discrete(GroupPtr group, const std::vector<std::string>& nonbase_ids);
  /// Wedge sum: basepoints identified, actions side by side.
  static PointedGSet wedge(const PointedGSet& x, const PointedGSet& y);
  /// Smash product: pairs of non-basepoints plus a basepoint, diagonal action.
  static PointedGSet smash(const PointedGSet& x, const PointedGSet& y);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(ids_.size()); }
  int basepoint() const { return basepoint_; }
  const std::string& element_id(int x) const { return ids_[x]; }
  int act(int g, int x) const { return action_[g][x]; }

 private:
  GroupPtr group_;
  std::vector<std::string> ids_;
  int basepoint_;
  std::vector<std::vector<int>> action_;
};

/// Wedge sum together with the inclusion index maps of both factors.
struct WedgeParts {
  PointedGSet sum;
  std::vector<int> from_x, from_y;  // factor index -> wedge index (basepoints to basepoint)
};
WedgeParts wedge_with_maps(const PointedGSet& x, const PointedGSet& y);

/// Smash product together with the pair index map.
struct SmashParts {
  PointedGSet prod;
  std::vector<std::vector<int>> pair_index;  // [x][y] -> product index (0 when either is base)
};
SmashParts smash_with_maps(const PointedGSet& x, const PointedGSet& y);

/// Left cosets of H in G plus a disjoint basepoint, G acting by translation.
/// `subgroup` must pass FiniteGroup::is_subgroup.  The returned set lists the
/// basepoint first, then cosets in order of their smallest representative.
PointedGSet coset_gset(GroupPtr group, const std::vector<int>& subgroup);

/// Indices of the cosets of the returned coset_gset in the same order,
/// given as sorted element lists.
std::vector<std::vector<int>> coset_partition(const FiniteGroup& g,
                                              const std::vector<int>& subgroup);

}  // namespace strand
