#pragma once

#include <optional>
#include <vector>

#include "strand/rational.hpp"

namespace strand {

/// Min-cost matching between two finite families where every item may also
/// stay unmatched at an individual cost.  Forbidden pairs are nullopt.
struct MatchingProblem {
  std::vector<std::vector<std::optional<Rat>>> pair_cost;  // [left][right]
  std::vector<Rat> left_unmatched;
  std::vector<Rat> right_unmatched;
};

struct MatchReport {
  struct Edge {
    int left = -1;   // -1: right item unmatched
    int right = -1;  // -1: left item unmatched
    Rat cost;
  };
  std::vector<Edge> edges;
  Rat total = 0;
};

/// Exact optimum by potential-based successive shortest augmentation on the
/// square slot-expanded matrix.
MatchReport solve_matching(const MatchingProblem& p);

/// Exact optimum by exhaustive search; exponential, for cross-checking the
/// solver on small instances.
MatchReport solve_matching_bruteforce(const MatchingProblem& p);

}  // namespace strand
