#pragma once

#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strand/rational.hpp"

namespace strand {

/// Raised when a family of intervals that must be pairwise disjoint is not.
struct overlap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bounded nonempty interval with independent endpoint closedness flags.
/// Invariant: lo < hi, or lo == hi with both ends closed (a degenerate
/// point, representable but never produced by the operations below).
struct Interval {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = true;

  Interval() = default;
  Interval(Rat lo_, Rat hi_, bool lo_closed_, bool hi_closed_);

  static Interval closed(const Rat& a, const Rat& b) { return {a, b, true, true}; }
  static Interval open(const Rat& a, const Rat& b) { return {a, b, false, false}; }

  bool contains(const Rat& x) const;
  Rat length() const { return hi - lo; }
  bool is_degenerate() const { return lo == hi; }
  bool both_closed() const { return lo_closed && hi_closed; }
  bool both_open() const { return !lo_closed && !hi_closed; }

  /// Image under the reversal: negate and flip both closedness flags.
  /// Degenerate points have an empty image.
  std::optional<Interval> reversed() const;

  bool operator==(const Interval& rhs) const = default;
  std::string to_string() const;
};

/// True when the two intervals share at least one point.
bool intervals_overlap(const Interval& a, const Interval& b);

/// Canonical finite union of pairwise disjoint bounded intervals: sorted by
/// lo, and no two adjacent components form a connected union (touching ends
/// with exactly one closed flag are always merged).  Adjacent components may
/// still touch with both ends open; the excluded point keeps them apart.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Sort, merge connected touching pairs, throw overlap_error when two
  /// inputs share a point.
  static IntervalSet normalize(std::vector<Interval> raw);
  /// Like normalize, but a shared single point between adjacent pieces is
  /// absorbed into their union instead of raising.  Interior overlaps still
  /// throw.  Used by operations (reversal, vanishing) whose raw output can
  /// legitimately cover a point twice.
  static IntervalSet merge_point_overlaps(std::vector<Interval> raw);

  const std::vector<Interval>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  size_t size() const { return components_.size(); }

  bool contains(const Rat& x) const;
  bool operator==(const IntervalSet& rhs) const = default;
  std::string to_string() const;

 private:
  enum class OverlapPolicy { reject, merge_point };
  static IntervalSet canonicalize(std::vector<Interval> raw, OverlapPolicy policy);
  std::vector<Interval> components_;
};

/// True when the two sets share at least one point.
bool sets_overlap(const IntervalSet& a, const IntervalSet& b);

/// Partial sum by superimposition: defined iff the sets are pairwise
/// disjoint, in which case connected unions concatenate.
std::optional<IntervalSet> union_partial(std::span<const IntervalSet> tuple);
std::optional<IntervalSet> union_partial(const IntervalSet& a, const IntervalSet& b);

/// The reversal involution: componentwise negation with flipped endpoint
/// flags, re-canonicalized.  An involution on every set with no two
/// components touching at an excluded point; on such "pinhole" sets the
/// doubly covered point is absorbed, which loses the pinhole.
IntervalSet tau(const IntervalSet& p);

/// Order-preserving bijection onto (0,1): alpha(s) = (1 + s/(1+|s|)) / 2.
Rat alpha(const Rat& s);
/// Straight-line interpolation (1-t) s + t alpha(s); the identity at t = 0.
Rat alpha_t(const Rat& s, const Rat& t);

/// Image under s -> slope * s + offset.  Requires slope > 0.
IntervalSet pushforward_affine(const IntervalSet& p, const Rat& slope, const Rat& offset);
/// Image under alpha_t for t in [0,1].
IntervalSet pushforward_alpha(const IntervalSet& p, const Rat& t);

/// h_t(P) = (image of P under alpha_t, reversal of that image).
std::pair<IntervalSet, IntervalSet> h_t(const IntervalSet& p, const Rat& t);

/// The collapse homotopy from (image of P in (0,1)) u (its mirror) down to
/// the empty set, evaluated at time u in [0,1].  Each component <a,b> of
/// the (0,1)-image contributes, together with its mirror:
///   u <= a : the translated pair (J - u) u (mirror + u);
///   a < u < b : one interval <u-b, b-u>, right end closed iff J's right
///               end is closed, left end with the complementary flag;
///   u >= b : nothing.
IntervalSet vanish_path(const IntervalSet& p, const Rat& u);

/// (components with both ends closed, the remaining components).
std::pair<IntervalSet, IntervalSet> split_closed(const IntervalSet& p);

/// Total length, ignoring endpoint flags.
Rat measure(const IntervalSet& p);

/// Lebesgue measure of the symmetric difference, by endpoint sweep.  A
/// pseudo-metric: blind to endpoint flags.
Rat symdiff_distance(const IntervalSet& a, const IntervalSet& b);

/// Signed component count: #(both ends closed) - #(both ends open).
/// Constant along isotopy, concatenation and half-open vanishing, and
/// negated by the reversal; this is the pi_0 class of the set.
Int chi(const IntervalSet& p);

struct IntervalSampler {
  int max_components = 3;
  int grid = 24;        // endpoints are multiples of 1/grid
  int span = 6;         // endpoints range over [-span, span]
  IntervalSet operator()(std::mt19937_64& rng) const;
};

}  // namespace strand
