#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "strand/elem.hpp"
#include "strand/group.hpp"

namespace strand {

/// Outcome of a partial sum.  `undefined` is a value of the theory (the
/// tuple is not summable); `budget_exceeded` means the rewriting search of a
/// smash product gave up and is reported distinctly.
struct SumOutcome {
  enum class Status { defined, undefined, budget_exceeded };
  Status status = Status::undefined;
  std::optional<Elem> value;

  static SumOutcome defined(Elem e) { return {Status::defined, std::move(e)}; }
  static SumOutcome undefined() { return {Status::undefined, std::nullopt}; }
  static SumOutcome budget_exceeded() { return {Status::budget_exceeded, std::nullopt}; }
  bool is_defined() const { return status == Status::defined; }
};

/// A partial abelian monoid with G-action: basepoint, n-ary partial sums,
/// and an action commuting with them.  n-ary summability is primitive;
/// the axioms (unit laws and partition coherence) are validated by
/// check_axioms rather than assumed.
class PartialMonoid {
 public:
  virtual ~PartialMonoid() = default;

  virtual std::string kind() const = 0;
  virtual Elem zero() const = 0;
  virtual bool contains(const Elem& e) const = 0;

  /// Partial sum.  Throws std::invalid_argument when an entry is not a
  /// carrier element; returns undefined when the tuple is not summable.
  virtual SumOutcome sum(std::span<const Elem> tuple) const = 0;

  bool summable(std::span<const Elem> tuple) const { return sum(tuple).is_defined(); }
  bool is_zero(const Elem& e) const { return e == zero(); }

  /// Full element list when the carrier is finite, nullopt otherwise.
  virtual std::optional<std::vector<Elem>> carrier() const { return std::nullopt; }

  virtual Elem sample(std::mt19937_64& rng) const = 0;

  /// Acting group; trivial by default.
  virtual GroupPtr group() const;
  virtual Elem act(int g, const Elem& e) const;
};

using MonoidPtr = std::shared_ptr<const PartialMonoid>;

/// Finitely generated abelian ambient group Z^free_rank x prod Z/moduli[i].
/// Elements are coordinate vectors with torsion coordinates reduced to
/// [0, m).
struct AmbientAbelian {
  int free_rank = 0;
  std::vector<Int> moduli;

  int dim() const { return free_rank + static_cast<int>(moduli.size()); }
  std::vector<Int> reduce(std::vector<Int> coords) const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> zero_coords() const { return std::vector<Int>(dim(), Int(0)); }
  /// All elements; only valid when free_rank == 0.
  std::vector<std::vector<Int>> enumerate() const;
};

/// A finite subset of an abelian group containing 0, with the induced
/// partial sums: a tuple is summable iff all entries and the total lie in
/// the subset.  An optional action permutes the subset.
MonoidPtr make_group_subset(AmbientAbelian ambient, std::vector<std::vector<Int>> subset,
                            GroupPtr group = nullptr,
                            std::vector<std::vector<int>> action_on_subset = {});
/// The whole finite group prod Z/moduli[i] as a group-subset monoid.
MonoidPtr make_full_group(std::vector<Int> moduli);
/// The range {0, 1, ..., top} inside the integers.
MonoidPtr make_integer_range(long top);

/// A pointed G-set with folding sums: summable iff at most one entry is
/// away from the basepoint.
MonoidPtr make_pointed_set(PointedGSet x);

/// Finite-dimensional subspaces of Q^n; summable iff pairwise orthogonal,
/// with the inner direct sum.  Elements are RREF basis matrices.
MonoidPtr make_grassmann(int ambient_dim);

/// The interval monoid: canonical interval sets under superimposition.
MonoidPtr make_interval_monoid(IntervalSampler sampler = {});

/// Smash product M ^ N, summability decided by the bounded breadth-first
/// distributivity-rewriting search.
MonoidPtr make_smash(MonoidPtr m, MonoidPtr n, long search_budget = 4096);

/// X ^ M for a pointed G-set X: nonzero tuples are summable iff they share
/// one x and their labels (with zeros inserted for basepoint entries) are
/// M-summable.
MonoidPtr make_wedge_label(PointedGSet x, MonoidPtr m);

/// A finite commutative monoid with every tuple summable (folding an
/// associative commutative total table).  Covers monoids that embed in no
/// group, like an absorbing element.
MonoidPtr make_total_monoid(std::vector<std::string> names, int zero,
                            std::vector<std::vector<int>> table,
                            GroupPtr group = nullptr,
                            std::vector<std::vector<int>> action = {});

/// A finite partial monoid with summability given by an explicit list of
/// multisets (entries of zero are transparent).  No coherence is assumed;
/// this is the vehicle for deliberately corrupted tables fed to
/// check_axioms.
MonoidPtr make_explicit_monoid(std::vector<std::string> names, int zero,
                               std::vector<std::pair<std::vector<int>, int>> sums);

/// All values reachable by complete reduction of the tuple in a smash
/// product (used to test confluence of the rewriting).  Requires the monoid
/// returned by make_smash.
std::vector<Elem> smash_all_reduced_values(const PartialMonoid& smash,
                                           std::span<const Elem> tuple, long budget = 65536);

/// (tau ^ 1) on elements of an interval-labeled smash product:
/// (P, a) -> (tau P, a), basepoint to basepoint.
Elem homotopy_inversion(const Elem& e);

struct Violation {
  std::string what;
  std::string detail;
};

struct CheckReport {
  long cases = 0;
  bool exhaustive = false;
  bool budget_hit = false;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Verify Definition-style axioms: the empty sum is the basepoint,
/// singletons sum to themselves, and partition coherence in both directions
/// over ordered partitions (empty blocks allowed) of tuples up to
/// max_arity.  Exhaustive when the carrier is finite and small enough for
/// `budget` tuples; otherwise randomized with the given seed.
CheckReport check_axioms(const PartialMonoid& m, int max_arity, long budget,
                         uint64_t seed = 0);

/// Verify that the action fixes the basepoint, preserves summability and
/// commutes with sums.
CheckReport check_equivariance(const PartialMonoid& m, int max_arity, long budget,
                               uint64_t seed = 0);

}  // namespace strand
