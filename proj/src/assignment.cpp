#include "strand/assignment.hpp"

#include <stdexcept>

namespace strand {

namespace {

/// Square cost matrix with forbidden entries: rows are left items then
/// right slots, columns are right items then left slots.  Every left item
/// can always take its own slot and slots pair off at zero cost, so a
/// perfect matching exists.
std::vector<std::vector<std::optional<Rat>>> expand(const MatchingProblem& p) {
  const size_t n = p.left_unmatched.size();
  const size_t m = p.right_unmatched.size();
  std::vector<std::vector<std::optional<Rat>>> cost(n + m,
                                                    std::vector<std::optional<Rat>>(m + n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) cost[i][j] = p.pair_cost[i][j];
  for (size_t i = 0; i < n; ++i) cost[i][m + i] = p.left_unmatched[i];
  for (size_t j = 0; j < m; ++j) cost[n + j][j] = p.right_unmatched[j];
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) cost[n + j][m + i] = Rat(0);
  return cost;
}

MatchReport collect(const MatchingProblem& p, const std::vector<int>& right_of_left) {
  const int n = static_cast<int>(p.left_unmatched.size());
  const int m = static_cast<int>(p.right_unmatched.size());
  MatchReport rep;
  std::vector<bool> right_used(m, false);
  for (int i = 0; i < n; ++i) {
    int j = right_of_left[i];
    if (j >= 0 && j < m) {
      rep.edges.push_back({i, j, *p.pair_cost[i][j]});
      right_used[j] = true;
    } else {
      rep.edges.push_back({i, -1, p.left_unmatched[i]});
    }
  }
  for (int j = 0; j < m; ++j)
    if (!right_used[j]) rep.edges.push_back({-1, j, p.right_unmatched[j]});
  for (const auto& e : rep.edges) rep.total += e.cost;
  return rep;
}

}  // namespace

MatchReport solve_matching(const MatchingProblem& p) {
  auto cost = expand(p);
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  // Potential-based shortest augmenting paths (Jonker-Volgenant style),
  // exact over the rationals.  1-based helper arrays; column 0 is virtual.
  std::vector<Rat> u(n + 1, Rat(0)), v(n + 1, Rat(0));
  std::vector<int> match(n + 1, 0);  // match[j] = row assigned to column j
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<std::optional<Rat>> minv(n + 1);
    std::vector<int> way(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = match[j0], j1 = -1;
      std::optional<Rat> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const auto& c = cost[i0 - 1][j - 1];
        if (c) {
          Rat cur = *c - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta) throw std::logic_error("matching has no feasible augmentation");
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    // Augment along the recorded path.
    while (j0 != 0) {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    }
  }
  const int nl = static_cast<int>(p.left_unmatched.size());
  const int mr = static_cast<int>(p.right_unmatched.size());
  std::vector<int> right_of_left(nl, -1);
  for (int j = 1; j <= n; ++j) {
    int i = match[j] - 1;
    if (i >= 0 && i < nl && j - 1 < mr) right_of_left[i] = j - 1;
  }
  return collect(p, right_of_left);
}

MatchReport solve_matching_bruteforce(const MatchingProblem& p) {
  const int n = static_cast<int>(p.left_unmatched.size());
  const int m = static_cast<int>(p.right_unmatched.size());
  std::vector<int> current(n, -1), best(n, -1);
  std::vector<bool> right_used(m, false);
  std::optional<Rat> best_total;
  Rat base = 0;
  for (int j = 0; j < m; ++j) base += p.right_unmatched[j];

  // recurse over left items; `acc` counts pair costs, left-unmatched costs,
  // and subtracts the right-unmatched default for every matched right item.
  auto recurse = [&](auto&& self, int i, Rat acc) -> void {
    if (i == n) {
      Rat total = acc + base;
      if (!best_total || total < *best_total) {
        best_total = total;
        best = current;
      }
      return;
    }
    self(self, i + 1, acc + p.left_unmatched[i]);
    for (int j = 0; j < m; ++j) {
      if (right_used[j] || !p.pair_cost[i][j]) continue;
      right_used[j] = true;
      current[i] = j;
      self(self, i + 1, acc + *p.pair_cost[i][j] - p.right_unmatched[j]);
      current[i] = -1;
      right_used[j] = false;
    }
  };
  recurse(recurse, 0, Rat(0));
  return collect(p, best);
}

}  // namespace strand
