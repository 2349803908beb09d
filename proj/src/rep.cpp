#include "strand/rep.hpp"

#include <stdexcept>

namespace strand {

OrthogonalRep::OrthogonalRep(GroupPtr group, std::vector<QMatrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  const int n = group_->order();
  if (static_cast<int>(matrices_.size()) != n)
    throw std::invalid_argument("one matrix per group element required");
  dim_ = matrices_.empty() ? 0 : matrices_[0].rows();
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("representation matrices must be square of equal size");
    if (!m.is_orthogonal()) throw std::invalid_argument("representation matrix not orthogonal");
  }
  if (!matrices_[group_->identity()].is_identity())
    throw std::invalid_argument("identity element must act as the identity matrix");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (matrices_[g] * matrices_[h] != matrices_[group_->mul(g, h)])
        throw std::invalid_argument("matrices violate the homomorphism law");
}

StagePtr regular_rep(GroupPtr group, int copies) {
  if (copies < 1) throw std::invalid_argument("stage needs at least one copy");
  const int n = group->order();
  const size_t dim = static_cast<size_t>(copies) * n;
  std::vector<QMatrix> mats;
  mats.reserve(n);
  for (int g = 0; g < n; ++g) {
    QMatrix m(dim, dim);
    for (int copy = 0; copy < copies; ++copy)
      for (int h = 0; h < n; ++h) m.at(copy * n + group->mul(g, h), copy * n + h) = 1;
    mats.push_back(std::move(m));
  }
  OrthogonalRep rep(group, std::move(mats));
  return std::make_shared<UniverseStage>(UniverseStage{std::move(group), copies, std::move(rep)});
}

QVec act_vector(const OrthogonalRep& rep, int g, const QVec& v) {
  if (v.size() != rep.dim()) throw std::invalid_argument("vector dimension mismatch");
  return rep.matrix(g).apply(v);
}

QMatrix fixed_subspace(const OrthogonalRep& rep, const std::vector<int>& subgroup) {
  if (!rep.group()->is_subgroup(subgroup)) throw std::invalid_argument("not a subgroup");
  QMatrix stacked;
  for (int h : subgroup) {
    if (h == rep.group()->identity()) continue;
    QMatrix diff = rep.matrix(h);
    for (size_t i = 0; i < diff.rows(); ++i) diff.at(i, i) -= 1;
    stacked = stacked.vstack(diff);
  }
  if (stacked.rows() == 0) return QMatrix::identity(rep.dim());
  return stacked.nullspace();
}

QVec pad_vector(const QVec& v, size_t target_dim) {
  if (v.size() > target_dim) throw std::invalid_argument("cannot pad downward");
  QVec out = v;
  out.resize(target_dim, Rat(0));
  return out;
}

}  // namespace strand
