#pragma once

#include <memory>
#include <vector>

#include "strand/group.hpp"
#include "strand/qmatrix.hpp"

namespace strand {

/// An exact orthogonal representation: one rational matrix per group
/// element.  Construction verifies Q^T Q = I, the homomorphism law and
/// triviality of the identity, all by exhaustion.
class OrthogonalRep {
 public:
  OrthogonalRep(GroupPtr group, std::vector<QMatrix> matrices);

  const GroupPtr& group() const { return group_; }
  size_t dim() const { return dim_; }
  const QMatrix& matrix(int g) const { return matrices_[g]; }

 private:
  GroupPtr group_;
  size_t dim_;
  std::vector<QMatrix> matrices_;
};

/// Finite stage of the G-universe: k copies of the regular representation.
/// Stage k embeds in stage k+1 by zero padding.
struct UniverseStage {
  GroupPtr group;
  int copies = 0;
  OrthogonalRep rep;

  size_t dim() const { return rep.dim(); }
};

using StagePtr = std::shared_ptr<const UniverseStage>;

/// Build the stage with k >= 1 copies of the regular representation of G.
/// Coordinates are indexed copy-major: coordinate (i, h) is i * |G| + h, and
/// g sends basis vector e_(i,h) to e_(i,gh).
StagePtr regular_rep(GroupPtr group, int copies);

/// matrices(g) . v, exact.  Throws on dimension mismatch.
QVec act_vector(const OrthogonalRep& rep, int g, const QVec& v);

/// Reduced basis (rows, in RREF) of {v : matrices(h) v = v for all h in H}.
/// Throws when H is not a subgroup.
QMatrix fixed_subspace(const OrthogonalRep& rep, const std::vector<int>& subgroup);

/// Zero-pad v from a smaller stage into `target` coordinates.
QVec pad_vector(const QVec& v, size_t target_dim);

}  // namespace strand
