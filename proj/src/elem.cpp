#include "strand/elem.hpp"

#include <stdexcept>

namespace strand {

Elem Elem::zvec(std::vector<Int> coords) { return Elem(Kind::zvec, std::move(coords)); }
Elem Elem::idx(int i) { return Elem(Kind::idx, i); }
Elem Elem::subspace(QMatrix rref_rows) { return Elem(Kind::subspace, std::move(rref_rows)); }
Elem Elem::ivset(IntervalSet s) { return Elem(Kind::ivset, std::move(s)); }

Elem Elem::smash_base() { return Elem(Kind::smash, SmashNode{}); }

Elem Elem::smash_pair(Elem first, Elem second) {
  SmashNode node;
  node.base = false;
  node.first = std::make_shared<const Elem>(std::move(first));
  node.second = std::make_shared<const Elem>(std::move(second));
  return Elem(Kind::smash, std::move(node));
}

Elem Elem::wedge_base() { return Elem(Kind::wedge, WedgeNode{}); }

Elem Elem::wedge_pair(int x, Elem label) {
  WedgeNode node;
  node.base = false;
  node.x = x;
  node.label = std::make_shared<const Elem>(std::move(label));
  return Elem(Kind::wedge, std::move(node));
}

const std::vector<Int>& Elem::as_zvec() const { return std::get<std::vector<Int>>(payload_); }
int Elem::as_idx() const { return std::get<int>(payload_); }
const QMatrix& Elem::as_subspace() const { return std::get<QMatrix>(payload_); }
const IntervalSet& Elem::as_ivset() const { return std::get<IntervalSet>(payload_); }

bool Elem::is_base_pair() const {
  if (kind_ == Kind::smash) return std::get<SmashNode>(payload_).base;
  if (kind_ == Kind::wedge) return std::get<WedgeNode>(payload_).base;
  throw std::logic_error("is_base_pair on a non-pair element");
}

const Elem& Elem::smash_first() const { return *std::get<SmashNode>(payload_).first; }
const Elem& Elem::smash_second() const { return *std::get<SmashNode>(payload_).second; }
int Elem::wedge_x() const { return std::get<WedgeNode>(payload_).x; }
const Elem& Elem::wedge_label() const { return *std::get<WedgeNode>(payload_).label; }

namespace {

template <typename T>
int cmp(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp_interval(const Interval& a, const Interval& b) {
  if (int c = cmp(a.lo, b.lo)) return c;
  if (int c = cmp(a.hi, b.hi)) return c;
  if (int c = cmp(a.lo_closed, b.lo_closed)) return c;
  return cmp(a.hi_closed, b.hi_closed);
}

int cmp_ivset(const IntervalSet& a, const IntervalSet& b) {
  if (int c = cmp(a.size(), b.size())) return c;
  for (size_t i = 0; i < a.size(); ++i)
    if (int c = cmp_interval(a.components()[i], b.components()[i])) return c;
  return 0;
}

int cmp_matrix(const QMatrix& a, const QMatrix& b) {
  if (int c = cmp(a.rows(), b.rows())) return c;
  if (int c = cmp(a.cols(), b.cols())) return c;
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t col = 0; col < a.cols(); ++col)
      if (int c = cmp(a.at(r, col), b.at(r, col))) return c;
  return 0;
}

}  // namespace

int Elem::compare(const Elem& rhs) const {
  if (int c = cmp(static_cast<int>(kind_), static_cast<int>(rhs.kind_))) return c;
  switch (kind_) {
    case Kind::zvec: {
      const auto& a = as_zvec();
      const auto& b = rhs.as_zvec();
      if (int c = cmp(a.size(), b.size())) return c;
      for (size_t i = 0; i < a.size(); ++i)
        if (int c = cmp(a[i], b[i])) return c;
      return 0;
    }
    case Kind::idx:
      return cmp(as_idx(), rhs.as_idx());
    case Kind::subspace:
      return cmp_matrix(as_subspace(), rhs.as_subspace());
    case Kind::ivset:
      return cmp_ivset(as_ivset(), rhs.as_ivset());
    case Kind::smash: {
      const auto& a = std::get<SmashNode>(payload_);
      const auto& b = std::get<SmashNode>(rhs.payload_);
      if (int c = cmp(!a.base, !b.base)) return c;
      if (a.base) return 0;
      if (int c = a.first->compare(*b.first)) return c;
      return a.second->compare(*b.second);
    }
    case Kind::wedge: {
      const auto& a = std::get<WedgeNode>(payload_);
      const auto& b = std::get<WedgeNode>(rhs.payload_);
      if (int c = cmp(!a.base, !b.base)) return c;
      if (a.base) return 0;
      if (int c = cmp(a.x, b.x)) return c;
      return a.label->compare(*b.label);
    }
  }
  return 0;
}

std::string Elem::to_string() const {
  switch (kind_) {
    case Kind::zvec: {
      std::string out = "(";
      const auto& v = as_zvec();
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
      }
      return out + ")";
    }
    case Kind::idx:
      return "#" + std::to_string(as_idx());
    case Kind::subspace: {
      const auto& m = as_subspace();
      std::string out = "span{";
      for (size_t r = 0; r < m.rows(); ++r) {
        if (r) out += "; ";
        out += format_qvec(m.row(r));
      }
      return out + "}";
    }
    case Kind::ivset:
      return as_ivset().to_string();
    case Kind::smash:
      if (is_base_pair()) return "*";
      return smash_first().to_string() + "^" + smash_second().to_string();
    case Kind::wedge:
      if (is_base_pair()) return "*";
      return "[" + std::to_string(wedge_x()) + "]^" + wedge_label().to_string();
  }
  return "?";
}

}  // namespace strand
