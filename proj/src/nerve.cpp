#include "strand/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace strand {

FiniteMonoid::FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<int>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty monoid");
  if (static_cast<int>(mul_.size()) != n) throw std::invalid_argument("table has wrong size");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table has wrong size");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] != mul_[b][a]) throw std::invalid_argument("monoid is not commutative");
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::invalid_argument("monoid is not associative");
    }
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("monoid has no identity");
}

FiniteMonoid FiniteMonoid::cyclic(int n) {
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteMonoid(std::move(names), std::move(mul));
}

FiniteMonoid finite_monoid_from_pm(const PartialMonoid& m) {
  auto carrier = m.carrier();
  if (!carrier) throw std::invalid_argument("totalization requires a finite carrier");
  std::vector<Elem> elems = *carrier;
  std::sort(elems.begin(), elems.end());
  auto index_of = [&](const Elem& e) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
  };
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(e.to_string());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<Elem> t = {elems[a], elems[b]};
      SumOutcome o = m.sum(t);
      if (!o.is_defined())
        throw std::invalid_argument("partial monoid is not total; bar construction undefined");
      mul[a][b] = index_of(*o.value);
    }
  return FiniteMonoid(std::move(names), std::move(mul));
}

namespace {

/// Shared small-category homology kernel.  Edges are the non-identity
/// morphisms; triangles are nondegenerate composable pairs (f, g) with
/// composite index gf, or -1 when the composite is an identity.
struct CategoryComplex {
  long objects = 0;
  std::vector<std::pair<long, long>> edges;  // (source, target)
  struct Triangle {
    long f, g, gf;
  };
  std::vector<Triangle> triangles;

  HomologyReport homology() const {
    HomologyReport rep;
    rep.objects = objects;
    rep.morphisms = static_cast<long>(edges.size());
    rep.two_simplices = static_cast<long>(triangles.size());

    // Connected components of the object graph give H0 (free).
    std::vector<long> parent(objects);
    for (long i = 0; i < objects; ++i) parent[i] = i;
    auto find = [&](long x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [s, t] : edges) {
      long a = find(s), b = find(t);
      if (a != b) parent[a] = b;
    }
    std::set<long> roots;
    for (long i = 0; i < objects; ++i) roots.insert(find(i));
    rep.h0.rank = static_cast<int>(roots.size());

    // Spanning forest: the restriction of a 1-cycle to non-tree edges is an
    // isomorphism from the cycle lattice, so H1 is the cokernel of the
    // projected triangle boundaries.
    std::vector<long> tree_of_object(objects, -1);
    std::vector<bool> in_tree(edges.size(), false);
    {
      std::map<long, std::vector<std::pair<long, long>>> incident;  // object -> (edge, other)
      for (size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back({static_cast<long>(e), edges[e].second});
        incident[edges[e].second].push_back({static_cast<long>(e), edges[e].first});
      }
      std::vector<bool> visited(objects, false);
      for (long root = 0; root < objects; ++root) {
        if (visited[root]) continue;
        std::vector<long> stack = {root};
        visited[root] = true;
        while (!stack.empty()) {
          long v = stack.back();
          stack.pop_back();
          for (const auto& [e, w] : incident[v])
            if (!visited[w]) {
              visited[w] = true;
              in_tree[e] = true;
              stack.push_back(w);
            }
        }
      }
    }
    std::vector<long> nontree_index(edges.size(), -1);
    long nontree = 0;
    for (size_t e = 0; e < edges.size(); ++e)
      if (!in_tree[e]) nontree_index[e] = nontree++;

    std::set<std::vector<std::pair<long, int>>> unique_cols;
    for (const auto& tri : triangles) {
      std::map<long, int> col;
      auto bump = [&](long edge, int by) {
        if (edge >= 0 && nontree_index[edge] >= 0) col[nontree_index[edge]] += by;
      };
      bump(tri.f, 1);
      bump(tri.g, 1);
      bump(tri.gf, -1);
      std::vector<std::pair<long, int>> packed;
      for (const auto& [k, v] : col)
        if (v != 0) packed.push_back({k, v});
      if (!packed.empty()) unique_cols.insert(std::move(packed));
    }
    IntMatrix rel(nontree, unique_cols.size());
    size_t c = 0;
    for (const auto& col : unique_cols) {
      for (const auto& [r, v] : col) rel.at(r, c) = v;
      ++c;
    }
    rep.h1 = cokernel(rel);
    return rep;
  }
};

}  // namespace

HomologyReport nerve_q_homology(const PartialMonoid& m, int p_bound, long budget) {
  auto carrier_opt = m.carrier();
  if (!carrier_opt) throw std::invalid_argument("nerve requires a finite carrier");
  if (p_bound < 1 || p_bound > 4) throw std::invalid_argument("p bound must be in [1,4]");
  std::vector<Elem> carrier = *carrier_opt;
  if (carrier.size() > 5) throw std::invalid_argument("carrier too large for nerve enumeration");
  std::sort(carrier.begin(), carrier.end());
  const int nelem = static_cast<int>(carrier.size());

  // Objects: tuples over the carrier of length <= p_bound, by index vector.
  std::map<std::vector<int>, long> object_id;
  std::vector<std::vector<int>> objects;
  {
    std::vector<int> tuple;
    auto add = [&](auto&& self, int remaining) -> void {
      if (object_id.emplace(tuple, static_cast<long>(objects.size())).second)
        objects.push_back(tuple);
      if (remaining == 0) return;
      for (int i = 0; i < nelem; ++i) {
        tuple.push_back(i);
        self(self, remaining - 1);
        tuple.pop_back();
      }
    };
    add(add, p_bound);
  }

  struct Morphism {
    long src, dst;
    std::vector<int> theta;
  };
  std::vector<Morphism> morphisms;
  std::map<std::tuple<long, long, std::vector<int>>, long> morphism_id;
  auto block_sum = [&](const std::vector<int>& tuple, const std::vector<int>& theta,
                       int target) -> std::optional<int> {
    std::vector<Elem> parts;
    for (size_t i = 0; i < theta.size(); ++i)
      if (theta[i] == target) parts.push_back(carrier[tuple[i]]);
    SumOutcome o = m.sum(parts);
    if (!o.is_defined()) return std::nullopt;
    auto it = std::lower_bound(carrier.begin(), carrier.end(), *o.value);
    return static_cast<int>(it - carrier.begin());
  };
  for (long src = 0; src < static_cast<long>(objects.size()); ++src) {
    const auto& a = objects[src];
    const int p = static_cast<int>(a.size());
    for (int q = 0; q <= p_bound; ++q) {
      if (q == 0 && p > 0) continue;  // no map onto the empty index set
      std::vector<int> theta(p, 0);
      while (true) {
        std::vector<int> b(q);
        bool ok = true;
        for (int j = 0; j < q && ok; ++j) {
          auto s = block_sum(a, theta, j);
          if (!s) ok = false;
          else b[j] = *s;
        }
        if (ok) {
          long dst = object_id.at(b);
          morphism_id.emplace(std::make_tuple(src, dst, theta),
                              static_cast<long>(morphisms.size()));
          morphisms.push_back({src, dst, theta});
          if (static_cast<long>(morphisms.size()) > budget)
            throw std::runtime_error("nerve enumeration exceeded its budget");
        }
        int i = 0;
        while (i < p && ++theta[i] == q) theta[i++] = 0;
        if (i == p || p == 0) break;
      }
    }
  }

  auto is_identity = [&](const Morphism& f) {
    if (f.src != f.dst) return false;
    for (size_t i = 0; i < f.theta.size(); ++i)
      if (f.theta[i] != static_cast<int>(i)) return false;
    return objects[f.src].size() == f.theta.size();
  };

  CategoryComplex cx;
  cx.objects = static_cast<long>(objects.size());
  std::vector<long> edge_of_morphism(morphisms.size(), -1);
  for (size_t i = 0; i < morphisms.size(); ++i) {
    if (is_identity(morphisms[i])) continue;
    edge_of_morphism[i] = static_cast<long>(cx.edges.size());
    cx.edges.push_back({morphisms[i].src, morphisms[i].dst});
  }
  // Composable nondegenerate pairs indexed through the morphism table.
  std::map<long, std::vector<long>> by_source;
  for (size_t i = 0; i < morphisms.size(); ++i)
    if (edge_of_morphism[i] >= 0) by_source[morphisms[i].src].push_back(static_cast<long>(i));
  for (size_t f = 0; f < morphisms.size(); ++f) {
    if (edge_of_morphism[f] < 0) continue;
    for (long g : by_source[morphisms[f].dst]) {
      const auto& mf = morphisms[f];
      const auto& mg = morphisms[g];
      std::vector<int> composite(mf.theta.size());
      for (size_t i = 0; i < mf.theta.size(); ++i) composite[i] = mg.theta[mf.theta[i]];
      auto it = morphism_id.find(std::make_tuple(mf.src, mg.dst, composite));
      if (it == morphism_id.end())
        throw std::logic_error("composite morphism missing; partition coherence violated");
      cx.triangles.push_back({edge_of_morphism[f], edge_of_morphism[g],
                              edge_of_morphism[it->second]});
      if (static_cast<long>(cx.triangles.size()) > budget)
        throw std::runtime_error("nerve enumeration exceeded its budget");
    }
  }
  HomologyReport rep = cx.homology();
  rep.p_bound = p_bound;
  return rep;
}

HomologyReport bar_homology_two_sided(const FiniteMonoid& a, const FiniteMonoid& a_prime,
                                      const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != a.size())
    throw std::invalid_argument("f must be defined on all of A");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (f[a.mul(x, y)] != a_prime.mul(f[x], f[y]))
        throw std::invalid_argument("f is not a monoid map");
  if (f[a.identity()] != a_prime.identity())
    throw std::invalid_argument("f does not preserve the identity");

  CategoryComplex cx;
  cx.objects = a_prime.size();
  // morphism (d, d'): d' -> f(d) d'; identity iff d is the unit.
  std::vector<std::vector<long>> edge_idx(a.size(), std::vector<long>(a_prime.size(), -1));
  for (int d = 0; d < a.size(); ++d) {
    if (d == a.identity()) continue;
    for (int dp = 0; dp < a_prime.size(); ++dp) {
      edge_idx[d][dp] = static_cast<long>(cx.edges.size());
      cx.edges.push_back({dp, a_prime.mul(f[d], dp)});
    }
  }
  for (int d1 = 0; d1 < a.size(); ++d1) {
    if (d1 == a.identity()) continue;
    for (int d2 = 0; d2 < a.size(); ++d2) {
      if (d2 == a.identity()) continue;
      for (int dp = 0; dp < a_prime.size(); ++dp) {
        int mid = a_prime.mul(f[d1], dp);
        int d21 = a.mul(d2, d1);
        long composite = d21 == a.identity() ? -1 : edge_idx[d21][dp];
        cx.triangles.push_back({edge_idx[d1][dp], edge_idx[d2][mid], composite});
      }
    }
  }
  return cx.homology();
}

HomologyReport bar_homology_one_object(const FiniteMonoid& a) {
  CategoryComplex cx;
  cx.objects = 1;
  std::vector<long> edge_idx(a.size(), -1);
  for (int d = 0; d < a.size(); ++d) {
    if (d == a.identity()) continue;
    edge_idx[d] = static_cast<long>(cx.edges.size());
    cx.edges.push_back({0, 0});
  }
  for (int d1 = 0; d1 < a.size(); ++d1) {
    if (d1 == a.identity()) continue;
    for (int d2 = 0; d2 < a.size(); ++d2) {
      if (d2 == a.identity()) continue;
      int d21 = a.mul(d2, d1);
      cx.triangles.push_back({edge_idx[d1], edge_idx[d2],
                              d21 == a.identity() ? -1 : edge_idx[d21]});
    }
  }
  return cx.homology();
}

}  // namespace strand
