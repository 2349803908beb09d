#include "strand/monoid.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strand {

namespace {

GroupPtr trivial_group_instance() {
  static const GroupPtr g = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  return g;
}

std::string tuple_to_string(std::span<const Elem> tuple) {
  std::string out = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += tuple[i].to_string();
  }
  return out + ")";
}

}  // namespace

GroupPtr PartialMonoid::group() const { return trivial_group_instance(); }
Elem PartialMonoid::act(int, const Elem& e) const { return e; }

std::vector<Int> AmbientAbelian::reduce(std::vector<Int> coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw std::invalid_argument("coordinate dimension mismatch");
  for (size_t i = 0; i < moduli.size(); ++i) {
    Int& c = coords[free_rank + i];
    c %= moduli[i];
    if (c < 0) c += moduli[i];
  }
  return coords;
}

std::vector<Int> AmbientAbelian::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

std::vector<std::vector<Int>> AmbientAbelian::enumerate() const {
  if (free_rank != 0) throw std::invalid_argument("cannot enumerate a group with free part");
  std::vector<std::vector<Int>> out = {{}};
  for (Int m : moduli) {
    std::vector<std::vector<Int>> next;
    for (const auto& prefix : out)
      for (Int v = 0; v < m; ++v) {
        auto row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group subset

namespace {

class GroupSubsetPM final : public PartialMonoid {
 public:
  GroupSubsetPM(AmbientAbelian ambient, std::vector<std::vector<Int>> subset, GroupPtr group,
                std::vector<std::vector<int>> action)
      : ambient_(std::move(ambient)), group_(group ? std::move(group) : trivial_group_instance()),
        action_(std::move(action)) {
    for (auto& coords : subset) elements_.push_back(ambient_.reduce(std::move(coords)));
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!index_of(ambient_.zero_coords()))
      throw std::invalid_argument("subset must contain the unit");
    if (!action_.empty()) {
      if (static_cast<int>(action_.size()) != group_->order())
        throw std::invalid_argument("action table has wrong group dimension");
      for (const auto& row : action_) {
        if (row.size() != elements_.size())
          throw std::invalid_argument("action table has wrong subset dimension");
        for (int v : row)
          if (v < 0 || v >= static_cast<int>(elements_.size()))
            throw std::invalid_argument("action entry out of range");
      }
    }
  }

  std::string kind() const override { return "group_subset"; }
  Elem zero() const override { return Elem::zvec(ambient_.zero_coords()); }

  bool contains(const Elem& e) const override {
    return e.kind() == Elem::Kind::zvec && index_of(e.as_zvec()).has_value();
  }

  SumOutcome sum(std::span<const Elem> tuple) const override {
    auto total = ambient_.zero_coords();
    for (const auto& e : tuple) {
      if (!contains(e))
        throw std::invalid_argument("element not in carrier: " + e.to_string());
      total = ambient_.add(total, e.as_zvec());
    }
    if (!index_of(total)) return SumOutcome::undefined();
    return SumOutcome::defined(Elem::zvec(std::move(total)));
  }

  std::optional<std::vector<Elem>> carrier() const override {
    std::vector<Elem> out;
    for (const auto& c : elements_) out.push_back(Elem::zvec(c));
    return out;
  }

  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<size_t> d(0, elements_.size() - 1);
    return Elem::zvec(elements_[d(rng)]);
  }

  GroupPtr group() const override { return group_; }

  Elem act(int g, const Elem& e) const override {
    if (action_.empty()) return e;
    auto idx = index_of(e.as_zvec());
    if (!idx) throw std::invalid_argument("element not in carrier");
    return Elem::zvec(elements_[action_[g][*idx]]);
  }

 private:
  std::optional<size_t> index_of(const std::vector<Int>& coords) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), coords);
    if (it == elements_.end() || *it != coords) return std::nullopt;
    return static_cast<size_t>(it - elements_.begin());
  }

  AmbientAbelian ambient_;
  std::vector<std::vector<Int>> elements_;
  GroupPtr group_;
  std::vector<std::vector<int>> action_;
};

}  // namespace

MonoidPtr make_group_subset(AmbientAbelian ambient, std::vector<std::vector<Int>> subset,
                            GroupPtr group, std::vector<std::vector<int>> action_on_subset) {
  return std::make_shared<GroupSubsetPM>(std::move(ambient), std::move(subset), std::move(group),
                                         std::move(action_on_subset));
}

MonoidPtr make_full_group(std::vector<Int> moduli) {
  AmbientAbelian ambient{0, std::move(moduli)};
  auto all = ambient.enumerate();
  return make_group_subset(std::move(ambient), std::move(all));
}

MonoidPtr make_integer_range(long top) {
  if (top < 0) throw std::invalid_argument("range top must be nonnegative");
  std::vector<std::vector<Int>> subset;
  for (long v = 0; v <= top; ++v) subset.push_back({Int(v)});
  return make_group_subset(AmbientAbelian{1, {}}, std::move(subset));
}

// ---------------------------------------------------------------------------
// Pointed set with folding sums

namespace {

class PointedSetPM final : public PartialMonoid {
 public:
  explicit PointedSetPM(PointedGSet x) : x_(std::move(x)) {}

  std::string kind() const override { return "pointed_set"; }
  Elem zero() const override { return Elem::idx(x_.basepoint()); }

  bool contains(const Elem& e) const override {
    return e.kind() == Elem::Kind::idx && e.as_idx() >= 0 && e.as_idx() < x_.size();
  }

  SumOutcome sum(std::span<const Elem> tuple) const override {
    std::optional<Elem> nonbase;
    for (const auto& e : tuple) {
      if (!contains(e)) throw std::invalid_argument("element not in carrier");
      if (e.as_idx() == x_.basepoint()) continue;
      if (nonbase) return SumOutcome::undefined();
      nonbase = e;
    }
    return SumOutcome::defined(nonbase ? *nonbase : zero());
  }

  std::optional<std::vector<Elem>> carrier() const override {
    std::vector<Elem> out;
    for (int i = 0; i < x_.size(); ++i) out.push_back(Elem::idx(i));
    return out;
  }

  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> d(0, x_.size() - 1);
    return Elem::idx(d(rng));
  }

  GroupPtr group() const override { return x_.group(); }
  Elem act(int g, const Elem& e) const override { return Elem::idx(x_.act(g, e.as_idx())); }

 private:
  PointedGSet x_;
};

}  // namespace

MonoidPtr make_pointed_set(PointedGSet x) { return std::make_shared<PointedSetPM>(std::move(x)); }

// ---------------------------------------------------------------------------
// Grassmannian of Q^n

namespace {

class GrassmannPM final : public PartialMonoid {
 public:
  explicit GrassmannPM(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  }

  std::string kind() const override { return "grassmann"; }
  Elem zero() const override { return Elem::subspace(QMatrix(0, n_)); }

  bool contains(const Elem& e) const override {
    if (e.kind() != Elem::Kind::subspace) return false;
    const QMatrix& m = e.as_subspace();
    if (m.cols() != static_cast<size_t>(n_)) return false;
    QMatrix red = m;
    red.rref();
    return red == m;
  }

  SumOutcome sum(std::span<const Elem> tuple) const override {
    for (const auto& e : tuple)
      if (!contains(e)) throw std::invalid_argument("element is not an RREF subspace basis");
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j)
        if (!orthogonal(tuple[i].as_subspace(), tuple[j].as_subspace()))
          return SumOutcome::undefined();
    QMatrix stacked(0, n_);
    for (const auto& e : tuple) stacked = stacked.vstack(e.as_subspace());
    stacked.rref();
    return SumOutcome::defined(Elem::subspace(std::move(stacked)));
  }

  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> dim(0, n_);
    std::uniform_int_distribution<int> entry(-2, 2);
    int k = dim(rng);
    QMatrix m(k, n_);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n_; ++c) m.at(r, c) = entry(rng);
    m.rref();
    return Elem::subspace(std::move(m));
  }

 private:
  static bool orthogonal(const QMatrix& a, const QMatrix& b) {
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < b.rows(); ++j)
        if (qvec_dot(a.row(i), b.row(j)) != 0) return false;
    return true;
  }

  int n_;
};

}  // namespace

MonoidPtr make_grassmann(int ambient_dim) { return std::make_shared<GrassmannPM>(ambient_dim); }

// ---------------------------------------------------------------------------
// Interval monoid

namespace {

class IntervalPM final : public PartialMonoid {
 public:
  explicit IntervalPM(IntervalSampler sampler) : sampler_(sampler) {}

  std::string kind() const override { return "interval"; }
  Elem zero() const override { return Elem::ivset(IntervalSet()); }
  bool contains(const Elem& e) const override { return e.kind() == Elem::Kind::ivset; }

  SumOutcome sum(std::span<const Elem> tuple) const override {
    std::vector<IntervalSet> sets;
    sets.reserve(tuple.size());
    for (const auto& e : tuple) {
      if (!contains(e)) throw std::invalid_argument("element is not an interval set");
      sets.push_back(e.as_ivset());
    }
    auto u = union_partial(std::span<const IntervalSet>(sets));
    if (!u) return SumOutcome::undefined();
    return SumOutcome::defined(Elem::ivset(std::move(*u)));
  }

  Elem sample(std::mt19937_64& rng) const override { return Elem::ivset(sampler_(rng)); }

 private:
  IntervalSampler sampler_;
};

}  // namespace

MonoidPtr make_interval_monoid(IntervalSampler sampler) {
  return std::make_shared<IntervalPM>(sampler);
}

// ---------------------------------------------------------------------------
// Smash product

namespace {

struct ElemVecLess {
  bool operator()(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = a[i].compare(b[i]);
      if (c) return c < 0;
    }
    return false;
  }
};

GroupPtr merge_groups(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (a->order() == 1) return b;
  if (b->order() == 1) return a;
  if (a != b) throw std::invalid_argument(std::string(what) + " carry different groups");
  return a;
}

class SmashPM final : public PartialMonoid {
 public:
  SmashPM(MonoidPtr m, MonoidPtr n, long budget)
      : m_(std::move(m)), n_(std::move(n)), budget_(budget),
        group_(merge_groups(m_->group(), n_->group(), "smash factors")) {}

  std::string kind() const override { return "smash"; }
  Elem zero() const override { return Elem::smash_base(); }

  bool contains(const Elem& e) const override {
    if (e.kind() != Elem::Kind::smash) return false;
    if (e.is_base_pair()) return true;
    return m_->contains(e.smash_first()) && !m_->is_zero(e.smash_first()) &&
           n_->contains(e.smash_second()) && !n_->is_zero(e.smash_second());
  }

  SumOutcome sum(std::span<const Elem> tuple) const override {
    std::vector<Elem> state;
    for (const auto& e : tuple) {
      if (!contains(e)) throw std::invalid_argument("element not in smash carrier");
      if (!e.is_base_pair()) state.push_back(e);
    }
    std::sort(state.begin(), state.end());
    return search(std::move(state), budget_, nullptr);
  }

  /// Breadth-first exploration of the rewriting graph.  When `all_values`
  /// is given, the whole graph is walked and every fully reduced value is
  /// recorded; otherwise the search stops at the first reduced state.
  SumOutcome search(std::vector<Elem> start, long budget, std::vector<Elem>* all_values) const {
    std::set<std::vector<Elem>, ElemVecLess> seen;
    std::deque<std::vector<Elem>> queue;
    seen.insert(start);
    queue.push_back(std::move(start));
    long searched = 0;
    bool found = false;
    while (!queue.empty()) {
      if (++searched > budget) return SumOutcome::budget_exceeded();
      auto state = std::move(queue.front());
      queue.pop_front();
      if (state.size() <= 1) {
        Elem value = state.empty() ? zero() : state[0];
        if (!all_values) return SumOutcome::defined(std::move(value));
        if (std::find(all_values->begin(), all_values->end(), value) == all_values->end())
          all_values->push_back(value);
        found = true;
        continue;
      }
      auto expand = [&](bool by_second) {
        // Group positions on the shared coordinate of the schema.
        std::map<Elem, std::vector<size_t>> groups;
        for (size_t i = 0; i < state.size(); ++i)
          groups[by_second ? state[i].smash_second() : state[i].smash_first()].push_back(i);
        for (const auto& [shared, positions] : groups) {
          if (positions.size() < 2) continue;
          const size_t g = positions.size();
          for (size_t mask = 1; mask < (size_t(1) << g); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<Elem> parts;
            std::vector<bool> remove(state.size(), false);
            for (size_t b = 0; b < g; ++b)
              if (mask & (size_t(1) << b)) {
                const Elem& p = state[positions[b]];
                parts.push_back(by_second ? p.smash_first() : p.smash_second());
                remove[positions[b]] = true;
              }
            SumOutcome inner = (by_second ? m_ : n_)->sum(parts);
            if (inner.status == SumOutcome::Status::budget_exceeded)
              throw std::runtime_error("inner sum exceeded its search budget");
            if (!inner.is_defined()) continue;
            std::vector<Elem> next;
            for (size_t i = 0; i < state.size(); ++i)
              if (!remove[i]) next.push_back(state[i]);
            const bool contracted_away = (by_second ? m_ : n_)->is_zero(*inner.value);
            if (!contracted_away)
              next.push_back(by_second ? Elem::smash_pair(*inner.value, shared)
                                       : Elem::smash_pair(shared, *inner.value));
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second) queue.push_back(std::move(next));
          }
        }
      };
      expand(true);
      expand(false);
    }
    if (all_values && found) return SumOutcome::defined(all_values->front());
    return SumOutcome::undefined();
  }

  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 3);
    if (coin(rng) == 0) return zero();
    for (int tries = 0; tries < 32; ++tries) {
      Elem a = m_->sample(rng);
      Elem b = n_->sample(rng);
      if (!m_->is_zero(a) && !n_->is_zero(b)) return Elem::smash_pair(a, b);
    }
    return zero();
  }

  std::optional<std::vector<Elem>> carrier() const override {
    auto cm = m_->carrier();
    auto cn = n_->carrier();
    if (!cm || !cn) return std::nullopt;
    std::vector<Elem> out = {zero()};
    for (const auto& a : *cm)
      for (const auto& b : *cn)
        if (!m_->is_zero(a) && !n_->is_zero(b)) out.push_back(Elem::smash_pair(a, b));
    return out;
  }

  GroupPtr group() const override { return group_; }

  Elem act(int g, const Elem& e) const override {
    if (e.is_base_pair()) return e;
    Elem a = m_->group()->order() > 1 ? m_->act(g, e.smash_first()) : e.smash_first();
    Elem b = n_->group()->order() > 1 ? n_->act(g, e.smash_second()) : e.smash_second();
    return Elem::smash_pair(std::move(a), std::move(b));
  }

 private:
  MonoidPtr m_, n_;
  long budget_;
  GroupPtr group_;
};

}  // namespace

MonoidPtr make_smash(MonoidPtr m, MonoidPtr n, long search_budget) {
  return std::make_shared<SmashPM>(std::move(m), std::move(n), search_budget);
}

std::vector<Elem> smash_all_reduced_values(const PartialMonoid& smash,
                                           std::span<const Elem> tuple, long budget) {
  const auto* pm = dynamic_cast<const SmashPM*>(&smash);
  if (!pm) throw std::invalid_argument("not a smash product monoid");
  std::vector<Elem> state;
  for (const auto& e : tuple)
    if (!e.is_base_pair()) state.push_back(e);
  std::sort(state.begin(), state.end());
  std::vector<Elem> values;
  auto outcome = pm->search(std::move(state), budget, &values);
  if (outcome.status == SumOutcome::Status::budget_exceeded)
    throw std::runtime_error("confluence exploration exceeded its budget");
  return values;
}

Elem homotopy_inversion(const Elem& e) {
  if (e.kind() != Elem::Kind::smash) throw std::invalid_argument("expected a smash element");
  if (e.is_base_pair()) return e;
  if (e.smash_first().kind() != Elem::Kind::ivset)
    throw std::invalid_argument("expected an interval-labeled element");
  return Elem::smash_pair(Elem::ivset(tau(e.smash_first().as_ivset())), e.smash_second());
}

// ---------------------------------------------------------------------------
// Wedge label X ^ M

namespace {

class WedgeLabelPM final : public PartialMonoid {
 public:
  WedgeLabelPM(PointedGSet x, MonoidPtr m)
      : x_(std::move(x)), m_(std::move(m)),
        group_(merge_groups(x_.group(), m_->group(), "wedge-label factors")) {}

  std::string kind() const override { return "wedge_label"; }
  Elem zero() const override { return Elem::wedge_base(); }

  bool contains(const Elem& e) const override {
    if (e.kind() != Elem::Kind::wedge) return false;
    if (e.is_base_pair()) return true;
    return e.wedge_x() >= 0 && e.wedge_x() < x_.size() && e.wedge_x() != x_.basepoint() &&
           m_->contains(e.wedge_label()) && !m_->is_zero(e.wedge_label());
  }

  // Group the entries by wedge point and sum each group in M.  A group
  // whose labels cancel to zero drops out (the distributivity relations of
  // the underlying smash with the folding monoid), so the tuple is summable
  // iff every group is M-summable and at most one group survives.  Requiring
  // a single common x instead would break partition coherence as soon as M
  // has cancellation.
  SumOutcome sum(std::span<const Elem> tuple) const override {
    std::map<int, std::vector<Elem>> groups;
    for (const auto& e : tuple) {
      if (!contains(e)) throw std::invalid_argument("element not in wedge-label carrier");
      if (e.is_base_pair()) continue;
      groups[e.wedge_x()].push_back(e.wedge_label());
    }
    std::optional<Elem> survivor;
    std::optional<int> survivor_x;
    for (auto& [x, labels] : groups) {
      SumOutcome inner = m_->sum(labels);
      if (!inner.is_defined()) return inner;
      if (m_->is_zero(*inner.value)) continue;
      if (survivor) return SumOutcome::undefined();
      survivor = std::move(*inner.value);
      survivor_x = x;
    }
    if (!survivor) return SumOutcome::defined(zero());
    return SumOutcome::defined(Elem::wedge_pair(*survivor_x, std::move(*survivor)));
  }

  std::optional<std::vector<Elem>> carrier() const override {
    auto cm = m_->carrier();
    if (!cm) return std::nullopt;
    std::vector<Elem> out = {zero()};
    for (int x = 0; x < x_.size(); ++x) {
      if (x == x_.basepoint()) continue;
      for (const auto& a : *cm)
        if (!m_->is_zero(a)) out.push_back(Elem::wedge_pair(x, a));
    }
    return out;
  }

  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 3);
    if (coin(rng) == 0 || x_.size() <= 1) return zero();
    std::uniform_int_distribution<int> xs(0, x_.size() - 1);
    for (int tries = 0; tries < 32; ++tries) {
      int x = xs(rng);
      Elem a = m_->sample(rng);
      if (x != x_.basepoint() && !m_->is_zero(a)) return Elem::wedge_pair(x, a);
    }
    return zero();
  }

  GroupPtr group() const override { return group_; }

  Elem act(int g, const Elem& e) const override {
    if (e.is_base_pair()) return e;
    int x = x_.group()->order() > 1 ? x_.act(g, e.wedge_x()) : e.wedge_x();
    Elem label =
        m_->group()->order() > 1 ? m_->act(g, e.wedge_label()) : e.wedge_label();
    return Elem::wedge_pair(x, std::move(label));
  }

 private:
  PointedGSet x_;
  MonoidPtr m_;
  GroupPtr group_;
};

}  // namespace

MonoidPtr make_wedge_label(PointedGSet x, MonoidPtr m) {
  return std::make_shared<WedgeLabelPM>(std::move(x), std::move(m));
}

// ---------------------------------------------------------------------------
// Explicit finite carriers: total tables and literal summability lists

namespace {

class TotalPM final : public PartialMonoid {
 public:
  TotalPM(std::vector<std::string> names, int zero, std::vector<std::vector<int>> table,
          GroupPtr group, std::vector<std::vector<int>> action)
      : names_(std::move(names)), zero_(zero), table_(std::move(table)),
        group_(group ? std::move(group) : trivial_group_instance()), action_(std::move(action)) {
    const int n = static_cast<int>(names_.size());
    if (zero_ < 0 || zero_ >= n) throw std::invalid_argument("unit index out of range");
    if (static_cast<int>(table_.size()) != n) throw std::invalid_argument("bad table size");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bad table size");
      for (int v : row)
        if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }
    for (int a = 0; a < n; ++a) {
      if (table_[zero_][a] != a || table_[a][zero_] != a)
        throw std::invalid_argument("unit law fails in the table");
      for (int b = 0; b < n; ++b) {
        if (table_[a][b] != table_[b][a]) throw std::invalid_argument("table not commutative");
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("table not associative");
      }
    }
  }

  std::string kind() const override { return "total"; }
  Elem zero() const override { return Elem::idx(zero_); }
  bool contains(const Elem& e) const override {
    return e.kind() == Elem::Kind::idx && e.as_idx() >= 0 &&
           e.as_idx() < static_cast<int>(names_.size());
  }
  SumOutcome sum(std::span<const Elem> tuple) const override {
    int acc = zero_;
    for (const auto& e : tuple) {
      if (!contains(e)) throw std::invalid_argument("element not in carrier");
      acc = table_[acc][e.as_idx()];
    }
    return SumOutcome::defined(Elem::idx(acc));
  }
  std::optional<std::vector<Elem>> carrier() const override {
    std::vector<Elem> out;
    for (size_t i = 0; i < names_.size(); ++i) out.push_back(Elem::idx(static_cast<int>(i)));
    return out;
  }
  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> d(0, static_cast<int>(names_.size()) - 1);
    return Elem::idx(d(rng));
  }
  GroupPtr group() const override { return group_; }
  Elem act(int g, const Elem& e) const override {
    if (action_.empty()) return e;
    return Elem::idx(action_[g][e.as_idx()]);
  }

 private:
  std::vector<std::string> names_;
  int zero_;
  std::vector<std::vector<int>> table_;
  GroupPtr group_;
  std::vector<std::vector<int>> action_;
};

class ExplicitPM final : public PartialMonoid {
 public:
  ExplicitPM(std::vector<std::string> names, int zero,
             std::vector<std::pair<std::vector<int>, int>> sums)
      : names_(std::move(names)), zero_(zero) {
    const int n = static_cast<int>(names_.size());
    if (zero_ < 0 || zero_ >= n) throw std::invalid_argument("unit index out of range");
    for (auto& [tuple, value] : sums) {
      for (int v : tuple)
        if (v < 0 || v >= n) throw std::invalid_argument("tuple entry out of range");
      if (value < 0 || value >= n) throw std::invalid_argument("sum value out of range");
      std::sort(tuple.begin(), tuple.end());
      table_[tuple] = value;
    }
  }

  std::string kind() const override { return "explicit"; }
  Elem zero() const override { return Elem::idx(zero_); }
  bool contains(const Elem& e) const override {
    return e.kind() == Elem::Kind::idx && e.as_idx() >= 0 &&
           e.as_idx() < static_cast<int>(names_.size());
  }
  // Literal multiset lookup: tuples with zeros are distinct keys, so a
  // table can (incoherently) declare (1,1,0) summable while (1,1) is not.
  SumOutcome sum(std::span<const Elem> tuple) const override {
    std::vector<int> idx;
    for (const auto& e : tuple) {
      if (!contains(e)) throw std::invalid_argument("element not in carrier");
      idx.push_back(e.as_idx());
    }
    if (idx.empty()) return SumOutcome::defined(zero());
    if (idx.size() == 1) return SumOutcome::defined(Elem::idx(idx[0]));
    std::sort(idx.begin(), idx.end());
    auto it = table_.find(idx);
    if (it == table_.end()) return SumOutcome::undefined();
    return SumOutcome::defined(Elem::idx(it->second));
  }
  std::optional<std::vector<Elem>> carrier() const override {
    std::vector<Elem> out;
    for (size_t i = 0; i < names_.size(); ++i) out.push_back(Elem::idx(static_cast<int>(i)));
    return out;
  }
  Elem sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> d(0, static_cast<int>(names_.size()) - 1);
    return Elem::idx(d(rng));
  }

 private:
  std::vector<std::string> names_;
  int zero_;
  std::map<std::vector<int>, int> table_;
};

}  // namespace

MonoidPtr make_total_monoid(std::vector<std::string> names, int zero,
                            std::vector<std::vector<int>> table, GroupPtr group,
                            std::vector<std::vector<int>> action) {
  return std::make_shared<TotalPM>(std::move(names), zero, std::move(table), std::move(group),
                                   std::move(action));
}

MonoidPtr make_explicit_monoid(std::vector<std::string> names, int zero,
                               std::vector<std::pair<std::vector<int>, int>> sums) {
  return std::make_shared<ExplicitPM>(std::move(names), zero, std::move(sums));
}

// ---------------------------------------------------------------------------
// Axiom and equivariance checkers

namespace {

void add_violation(CheckReport& rep, std::string what, std::string detail) {
  if (rep.violations.size() < 32) rep.violations.push_back({std::move(what), std::move(detail)});
}

/// All sub-tuple outcomes of `tuple`, indexed by bitmask in index order.
std::vector<SumOutcome> mask_sums(const PartialMonoid& m, const std::vector<Elem>& tuple) {
  const size_t n = tuple.size();
  std::vector<SumOutcome> out(size_t(1) << n);
  for (size_t mask = 0; mask < out.size(); ++mask) {
    std::vector<Elem> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) sub.push_back(tuple[i]);
    out[mask] = m.sum(sub);
  }
  return out;
}

void check_partition(const PartialMonoid& m, const std::vector<Elem>& tuple,
                     const std::vector<SumOutcome>& msums, const std::vector<int>& assignment,
                     int blocks, CheckReport& rep) {
  const size_t n = tuple.size();
  std::vector<size_t> block_mask(blocks, 0);
  for (size_t i = 0; i < n; ++i) block_mask[assignment[i]] |= size_t(1) << i;
  std::vector<Elem> block_sums;
  for (int b = 0; b < blocks; ++b) {
    const SumOutcome& o = msums[block_mask[b]];
    if (o.status == SumOutcome::Status::budget_exceeded) {
      rep.budget_hit = true;
      return;
    }
    if (!o.is_defined()) return;  // hypothesis of coherence fails; nothing to check
    block_sums.push_back(*o.value);
  }
  const SumOutcome& full = msums.back();
  SumOutcome grouped = m.sum(block_sums);
  if (full.status == SumOutcome::Status::budget_exceeded ||
      grouped.status == SumOutcome::Status::budget_exceeded) {
    rep.budget_hit = true;
    return;
  }
  ++rep.cases;
  std::ostringstream desc;
  desc << tuple_to_string(tuple) << " with blocks";
  for (int b = 0; b < blocks; ++b) desc << " {" << block_mask[b] << "}";
  if (full.is_defined() != grouped.is_defined()) {
    add_violation(rep, "partition coherence: summability mismatch", desc.str());
    return;
  }
  if (full.is_defined() && !(*full.value == *grouped.value))
    add_violation(rep, "partition coherence: sums differ",
                  desc.str() + " -> " + full.value->to_string() + " vs " +
                      grouped.value->to_string());
}

void check_tuple(const PartialMonoid& m, const std::vector<Elem>& tuple, bool all_partitions,
                 int sampled_partitions, std::mt19937_64& rng, CheckReport& rep) {
  const int n = static_cast<int>(tuple.size());
  auto msums = mask_sums(m, tuple);
  if (all_partitions) {
    for (int blocks = 1; blocks <= n + 1; ++blocks) {
      std::vector<int> assignment(n, 0);
      while (true) {
        check_partition(m, tuple, msums, assignment, blocks, rep);
        int i = 0;
        while (i < n && ++assignment[i] == blocks) assignment[i++] = 0;
        if (i == n) break;
      }
    }
  } else {
    std::uniform_int_distribution<int> blocks_dist(1, n + 1);
    for (int s = 0; s < sampled_partitions; ++s) {
      int blocks = blocks_dist(rng);
      std::uniform_int_distribution<int> pick(0, blocks - 1);
      std::vector<int> assignment(n);
      for (int i = 0; i < n; ++i) assignment[i] = pick(rng);
      check_partition(m, tuple, msums, assignment, blocks, rep);
    }
  }
}

std::vector<Elem> random_tuple(const PartialMonoid& m, int arity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<Elem> tuple;
  for (int i = 0; i < arity; ++i)
    tuple.push_back(coin(rng) == 0 ? m.zero() : m.sample(rng));
  return tuple;
}

}  // namespace

CheckReport check_axioms(const PartialMonoid& m, int max_arity, long budget, uint64_t seed) {
  if (max_arity < 2) throw std::invalid_argument("max_arity must be at least 2");
  CheckReport rep;
  std::mt19937_64 rng(seed);

  SumOutcome empty = m.sum({});
  ++rep.cases;
  if (!empty.is_defined() || !(*empty.value == m.zero()))
    add_violation(rep, "empty sum is not the basepoint", "");
  if (!m.contains(m.zero())) add_violation(rep, "basepoint not in carrier", "");

  auto carrier = m.carrier();
  long exhaustive_cost = 0;
  if (carrier) {
    long c = static_cast<long>(carrier->size());
    long power = c;
    exhaustive_cost = c;
    for (int a = 2; a <= max_arity; ++a) {
      if (power > budget / (c > 0 ? c : 1)) {
        exhaustive_cost = budget + 1;
        break;
      }
      power *= c;
      exhaustive_cost += power;
    }
  }
  rep.exhaustive = carrier && exhaustive_cost <= budget;

  // Unit law on singletons.
  auto check_singleton = [&](const Elem& e) {
    std::vector<Elem> t = {e};
    SumOutcome o = m.sum(t);
    ++rep.cases;
    if (!o.is_defined() || !(*o.value == e))
      add_violation(rep, "singleton does not sum to itself", e.to_string());
  };
  if (rep.exhaustive) {
    for (const auto& e : *carrier) check_singleton(e);
  } else {
    for (int i = 0; i < 64; ++i) check_singleton(m.sample(rng));
  }

  if (rep.exhaustive) {
    for (int arity = 2; arity <= max_arity; ++arity) {
      std::vector<size_t> pick(arity, 0);
      while (true) {
        std::vector<Elem> tuple;
        for (int i = 0; i < arity; ++i) tuple.push_back((*carrier)[pick[i]]);
        check_tuple(m, tuple, true, 0, rng, rep);
        int i = 0;
        while (i < arity && ++pick[i] == carrier->size()) pick[i++] = 0;
        if (i == arity) break;
      }
    }
  } else {
    for (long trial = 0; trial < budget; ++trial) {
      int arity = 2 + static_cast<int>(trial % (max_arity - 1));
      auto tuple = random_tuple(m, arity, rng);
      check_tuple(m, tuple, false, 24, rng, rep);
    }
  }
  return rep;
}

CheckReport check_equivariance(const PartialMonoid& m, int max_arity, long budget,
                               uint64_t seed) {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  GroupPtr g = m.group();
  rep.exhaustive = false;

  for (int a = 0; a < g->order(); ++a) {
    ++rep.cases;
    if (!(m.act(a, m.zero()) == m.zero()))
      add_violation(rep, "action moves the basepoint", g->element_id(a));
  }

  auto elements_for_law = [&]() {
    if (auto c = m.carrier(); c && c->size() <= 64) return *c;
    std::vector<Elem> out;
    for (int i = 0; i < 16; ++i) out.push_back(m.sample(rng));
    return out;
  }();
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      for (const auto& e : elements_for_law) {
        ++rep.cases;
        if (!(m.act(a, m.act(b, e)) == m.act(g->mul(a, b), e)))
          add_violation(rep, "action law fails",
                        g->element_id(a) + "," + g->element_id(b) + " on " + e.to_string());
        if (!m.contains(m.act(a, e)))
          add_violation(rep, "action leaves the carrier", e.to_string());
      }

  auto check_one = [&](const std::vector<Elem>& tuple) {
    SumOutcome base = m.sum(tuple);
    for (int a = 0; a < g->order(); ++a) {
      std::vector<Elem> moved;
      for (const auto& e : tuple) moved.push_back(m.act(a, e));
      SumOutcome acted = m.sum(moved);
      ++rep.cases;
      if (base.status == SumOutcome::Status::budget_exceeded ||
          acted.status == SumOutcome::Status::budget_exceeded) {
        rep.budget_hit = true;
        continue;
      }
      if (base.is_defined() != acted.is_defined()) {
        add_violation(rep, "action changes summability",
                      g->element_id(a) + " on " + tuple_to_string(tuple));
        continue;
      }
      if (base.is_defined() && !(m.act(a, *base.value) == *acted.value))
        add_violation(rep, "action does not commute with sum",
                      g->element_id(a) + " on " + tuple_to_string(tuple));
    }
  };

  auto carrier = m.carrier();
  long c = carrier ? static_cast<long>(carrier->size()) : 0;
  bool exhaustive = carrier && c > 0;
  if (exhaustive) {
    long cost = 0, power = 1;
    for (int arity = 1; arity <= max_arity && exhaustive; ++arity) {
      power *= c;
      cost += power;
      if (cost > budget) exhaustive = false;
    }
    rep.exhaustive = exhaustive;
  }
  if (rep.exhaustive) {
    for (int arity = 1; arity <= max_arity; ++arity) {
      std::vector<size_t> pick(arity, 0);
      while (true) {
        std::vector<Elem> tuple;
        for (int i = 0; i < arity; ++i) tuple.push_back((*carrier)[pick[i]]);
        check_one(tuple);
        int i = 0;
        while (i < arity && ++pick[i] == carrier->size()) pick[i++] = 0;
        if (i == arity) break;
      }
    }
  } else {
    for (long trial = 0; trial < budget; ++trial)
      check_one(random_tuple(m, 1 + static_cast<int>(trial % max_arity), rng));
  }
  return rep;
}

}  // namespace strand
