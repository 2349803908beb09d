#include "strand/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace strand {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_ids,
                         std::vector<std::vector<int>> mul_table)
    : name_(std::move(name)), ids_(std::move(element_ids)), mul_(std::move(mul_table)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group carrier is empty");
  if (static_cast<int>(mul_.size()) != n)
    throw std::invalid_argument("multiplication table has wrong row count");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table has wrong column count");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = mul_[e][g] == g && mul_[g][e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("no two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::invalid_argument("multiplication table is not associative");
  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (mul_[g][h] == identity_ && mul_[h][g] == identity_) {
        inv_[g] = h;
        break;
      }
    if (inv_[g] < 0) throw std::invalid_argument("element without inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("1", {"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> ids(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    ids[i] = "g" + std::to_string(i);
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return FiniteGroup("Z/" + std::to_string(n), std::move(ids), std::move(mul));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::string> ids(na * nb);
  std::vector<std::vector<int>> mul(na * nb, std::vector<int>(na * nb));
  auto idx = [nb](int x, int y) { return x * nb + y; };
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      ids[idx(x, y)] = a.element_id(x) + "|" + b.element_id(y);
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) mul[idx(x, y)][idx(u, v)] = idx(a.mul(x, u), b.mul(y, v));
    }
  return FiniteGroup(a.name() + "x" + b.name(), std::move(ids), std::move(mul));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& subset) const {
  std::set<int> s(subset.begin(), subset.end());
  if (!s.count(identity_)) return false;
  for (int a : s) {
    if (a < 0 || a >= order()) return false;
    if (!s.count(inv_[a])) return false;
    for (int b : s)
      if (!s.count(mul_[a][b])) return false;
  }
  return true;
}

namespace {

GroupPtr merge_action_groups(const PointedGSet& x, const PointedGSet& y) {
  if (x.group()->order() == 1) return y.group();
  if (y.group()->order() == 1) return x.group();
  if (x.group() != y.group())
    throw std::invalid_argument("factors carry different nontrivial groups");
  return x.group();
}

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::set<int> out(seed.begin(), seed.end());
  out.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(out.begin(), out.end());
    for (int a : cur) {
      if (out.insert(g.inv(a)).second) grew = true;
      for (int b : cur)
        if (out.insert(g.mul(a, b)).second) grew = true;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<std::vector<int>> subgroups(const FiniteGroup& g, int order_bound) {
  if (g.order() > order_bound)
    throw std::invalid_argument("group order exceeds subgroup enumeration bound");
  std::set<std::vector<int>> found;
  found.insert(closure(g, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    auto current = found;
    for (const auto& sub : current) {
      std::set<int> have(sub.begin(), sub.end());
      for (int x = 0; x < g.order(); ++x) {
        if (have.count(x)) continue;
        auto bigger = sub;
        bigger.push_back(x);
        if (found.insert(closure(g, bigger)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

PointedGSet::PointedGSet(GroupPtr group, std::vector<std::string> element_ids, int basepoint,
                         std::vector<std::vector<int>> action_table)
    : group_(std::move(group)), ids_(std::move(element_ids)), basepoint_(basepoint),
      action_(std::move(action_table)) {
  const int n = size();
  const int go = group_->order();
  if (basepoint_ < 0 || basepoint_ >= n) throw std::invalid_argument("basepoint out of range");
  if (static_cast<int>(action_.size()) != go)
    throw std::invalid_argument("action table has wrong group dimension");
  for (const auto& row : action_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("action table has wrong set dimension");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("action entry out of range");
  }
  for (int g = 0; g < go; ++g) {
    if (action_[g][basepoint_] != basepoint_)
      throw std::invalid_argument("action does not fix the basepoint");
    for (int x = 0; x < n; ++x) {
      if (action_[group_->identity()][x] != x)
        throw std::invalid_argument("identity does not act trivially");
      for (int h = 0; h < go; ++h)
        if (action_[g][action_[h][x]] != action_[group_->mul(g, h)][x])
          throw std::invalid_argument("action table violates the action law");
    }
  }
}

PointedGSet PointedGSet::discrete(GroupPtr group, const std::vector<std::string>& nonbase_ids) {
  std::vector<std::string> ids = {"*"};
  ids.insert(ids.end(), nonbase_ids.begin(), nonbase_ids.end());
  std::vector<std::vector<int>> action(group->order());
  for (auto& row : action) {
    row.resize(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) row[i] = static_cast<int>(i);
  }
  return PointedGSet(std::move(group), std::move(ids), 0, std::move(action));
}

PointedGSet PointedGSet::wedge(const PointedGSet& x, const PointedGSet& y) {
  return wedge_with_maps(x, y).sum;
}

PointedGSet PointedGSet::smash(const PointedGSet& x, const PointedGSet& y) {
  return smash_with_maps(x, y).prod;
}

WedgeParts wedge_with_maps(const PointedGSet& x, const PointedGSet& y) {
  GroupPtr group = merge_action_groups(x, y);
  std::vector<std::string> ids = {"*"};
  std::vector<int> xmap(x.size(), 0), ymap(y.size(), 0);
  for (int i = 0; i < x.size(); ++i)
    if (i != x.basepoint()) {
      xmap[i] = static_cast<int>(ids.size());
      ids.push_back("L:" + x.element_id(i));
    }
  for (int i = 0; i < y.size(); ++i)
    if (i != y.basepoint()) {
      ymap[i] = static_cast<int>(ids.size());
      ids.push_back("R:" + y.element_id(i));
    }
  std::vector<std::vector<int>> action(group->order(), std::vector<int>(ids.size(), 0));
  for (int g = 0; g < group->order(); ++g) {
    for (int i = 0; i < x.size(); ++i)
      if (i != x.basepoint())
        action[g][xmap[i]] = xmap[x.group()->order() > 1 ? x.act(g, i) : i];
    for (int i = 0; i < y.size(); ++i)
      if (i != y.basepoint())
        action[g][ymap[i]] = ymap[y.group()->order() > 1 ? y.act(g, i) : i];
  }
  return {PointedGSet(group, std::move(ids), 0, std::move(action)), std::move(xmap),
          std::move(ymap)};
}

SmashParts smash_with_maps(const PointedGSet& x, const PointedGSet& y) {
  GroupPtr group = merge_action_groups(x, y);
  std::vector<std::string> ids = {"*"};
  std::vector<std::vector<int>> pair_idx(x.size(), std::vector<int>(y.size(), 0));
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j)
      if (i != x.basepoint() && j != y.basepoint()) {
        pair_idx[i][j] = static_cast<int>(ids.size());
        ids.push_back(x.element_id(i) + "^" + y.element_id(j));
      }
  std::vector<std::vector<int>> action(group->order(), std::vector<int>(ids.size(), 0));
  for (int g = 0; g < group->order(); ++g)
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < y.size(); ++j)
        if (pair_idx[i][j])
          action[g][pair_idx[i][j]] =
              pair_idx[x.group()->order() > 1 ? x.act(g, i) : i]
                      [y.group()->order() > 1 ? y.act(g, j) : j];
  return {PointedGSet(group, std::move(ids), 0, std::move(action)), std::move(pair_idx)};
}

std::vector<std::vector<int>> coset_partition(const FiniteGroup& g,
                                              const std::vector<int>& subgroup) {
  if (!g.is_subgroup(subgroup)) throw std::invalid_argument("not a subgroup");
  std::vector<int> coset_of(g.order(), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int h : subgroup) coset.push_back(g.mul(x, h));
    std::sort(coset.begin(), coset.end());
    for (int y : coset) coset_of[y] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

PointedGSet coset_gset(GroupPtr group, const std::vector<int>& subgroup) {
  auto cosets = coset_partition(*group, subgroup);
  std::vector<int> coset_of(group->order());
  for (size_t c = 0; c < cosets.size(); ++c)
    for (int y : cosets[c]) coset_of[y] = static_cast<int>(c);
  std::vector<std::string> ids = {"*"};
  for (const auto& coset : cosets) ids.push_back(group->element_id(coset[0]) + "H");
  std::vector<std::vector<int>> action(group->order(), std::vector<int>(ids.size(), 0));
  for (int g = 0; g < group->order(); ++g)
    for (size_t c = 0; c < cosets.size(); ++c)
      action[g][c + 1] = coset_of[group->mul(g, cosets[c][0])] + 1;
  return PointedGSet(std::move(group), std::move(ids), 0, std::move(action));
}

}  // namespace strand
