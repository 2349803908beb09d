#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "strand/interval.hpp"
#include "strand/qmatrix.hpp"
#include "strand/rational.hpp"

namespace strand {

/// Universal value type for partial monoid elements.  Immutable; children
/// of composite values are shared.  Canonical-form obligations (reduced
/// coordinates, RREF bases, no zero halves inside pairs) rest with the
/// monoid that constructs the value, so equality is structural.
class Elem {
 public:
  enum class Kind { zvec, idx, subspace, ivset, smash, wedge };

  static Elem zvec(std::vector<Int> coords);
  static Elem idx(int i);
  static Elem subspace(QMatrix rref_rows);
  static Elem ivset(IntervalSet s);
  static Elem smash_base();
  static Elem smash_pair(Elem first, Elem second);
  static Elem wedge_base();
  static Elem wedge_pair(int x, Elem label);

  Kind kind() const { return kind_; }

  const std::vector<Int>& as_zvec() const;
  int as_idx() const;
  const QMatrix& as_subspace() const;
  const IntervalSet& as_ivset() const;

  bool is_base_pair() const;          // smash or wedge basepoint
  const Elem& smash_first() const;    // non-base smash only
  const Elem& smash_second() const;
  int wedge_x() const;                // non-base wedge only
  const Elem& wedge_label() const;

  /// Three-way structural comparison defining a total order.
  int compare(const Elem& rhs) const;
  bool operator==(const Elem& rhs) const { return compare(rhs) == 0; }
  bool operator<(const Elem& rhs) const { return compare(rhs) < 0; }

  std::string to_string() const;

 private:
  struct SmashNode {
    bool base = true;
    std::shared_ptr<const Elem> first, second;
  };
  struct WedgeNode {
    bool base = true;
    int x = 0;
    std::shared_ptr<const Elem> label;
  };
  using Payload = std::variant<std::vector<Int>, int, QMatrix, IntervalSet, SmashNode, WedgeNode>;

  Elem(Kind kind, Payload payload) : kind_(kind), payload_(std::move(payload)) {}

  Kind kind_;
  Payload payload_;
};

}  // namespace strand
