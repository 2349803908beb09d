#include "strand/interval.hpp"

#include <algorithm>

namespace strand {

Interval::Interval(Rat lo_, Rat hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
    throw std::invalid_argument("empty interval: " + to_string());
}

bool Interval::contains(const Rat& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

std::optional<Interval> Interval::reversed() const {
  if (is_degenerate()) return std::nullopt;
  return Interval(-hi, -lo, !hi_closed, !lo_closed);
}

std::string Interval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + format_rat(lo) + "," + format_rat(hi) +
         (hi_closed ? "]" : ")");
}

bool intervals_overlap(const Interval& a, const Interval& b) {
  Rat max_lo = std::max(a.lo, b.lo);
  Rat min_hi = std::min(a.hi, b.hi);
  if (max_lo < min_hi) return true;
  if (max_lo > min_hi) return false;
  return a.contains(max_lo) && b.contains(max_lo);
}

IntervalSet IntervalSet::canonicalize(std::vector<Interval> raw, OverlapPolicy policy) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  IntervalSet out;
  for (const Interval& next : raw) {
    if (out.components_.empty()) {
      out.components_.push_back(next);
      continue;
    }
    Interval& cur = out.components_.back();
    if (next.lo > cur.hi) {
      out.components_.push_back(next);
      continue;
    }
    if (next.lo < cur.hi)
      throw overlap_error("intervals overlap: " + cur.to_string() + " and " + next.to_string());
    // Touching at a single coordinate cur.hi == next.lo.
    bool shared = cur.hi_closed && next.lo_closed;
    if (shared && policy == OverlapPolicy::reject)
      throw overlap_error("intervals overlap: " + cur.to_string() + " and " + next.to_string());
    if (!shared && cur.hi_closed == next.lo_closed) {
      // Both ends open: the union is disconnected at the touching point.
      out.components_.push_back(next);
      continue;
    }
    cur = Interval(cur.lo, next.hi, cur.lo_closed, next.hi_closed);
  }
  return out;
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  return canonicalize(std::move(raw), OverlapPolicy::reject);
}

IntervalSet IntervalSet::merge_point_overlaps(std::vector<Interval> raw) {
  return canonicalize(std::move(raw), OverlapPolicy::merge_point);
}

bool IntervalSet::contains(const Rat& x) const {
  for (const auto& c : components_)
    if (c.contains(x)) return true;
  return false;
}

std::string IntervalSet::to_string() const {
  if (components_.empty()) return "{}";
  std::string out = "{";
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += " u ";
    out += components_[i].to_string();
  }
  return out + "}";
}

bool sets_overlap(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : a.components())
    for (const auto& y : b.components())
      if (intervals_overlap(x, y)) return true;
  return false;
}

std::optional<IntervalSet> union_partial(std::span<const IntervalSet> tuple) {
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      if (sets_overlap(tuple[i], tuple[j])) return std::nullopt;
  std::vector<Interval> all;
  for (const auto& p : tuple)
    all.insert(all.end(), p.components().begin(), p.components().end());
  return IntervalSet::normalize(std::move(all));
}

std::optional<IntervalSet> union_partial(const IntervalSet& a, const IntervalSet& b) {
  std::vector<IntervalSet> t = {a, b};
  return union_partial(std::span<const IntervalSet>(t));
}

IntervalSet tau(const IntervalSet& p) {
  std::vector<Interval> out;
  for (const auto& c : p.components())
    if (auto r = c.reversed()) out.push_back(*r);
  return IntervalSet::merge_point_overlaps(std::move(out));
}

Rat alpha(const Rat& s) { return (1 + s / (1 + rat_abs(s))) / 2; }

Rat alpha_t(const Rat& s, const Rat& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("time outside [0,1]");
  return (1 - t) * s + t * alpha(s);
}

namespace {

template <typename Map>
IntervalSet pushforward(const IntervalSet& p, Map&& f) {
  std::vector<Interval> out;
  out.reserve(p.size());
  for (const auto& c : p.components())
    out.emplace_back(f(c.lo), f(c.hi), c.lo_closed, c.hi_closed);
  // A strictly increasing map preserves ordering, disjointness and flags, so
  // this cannot throw.
  return IntervalSet::normalize(std::move(out));
}

}  // namespace

IntervalSet pushforward_affine(const IntervalSet& p, const Rat& slope, const Rat& offset) {
  if (slope <= 0) throw std::invalid_argument("affine pushforward requires positive slope");
  return pushforward(p, [&](const Rat& s) { return slope * s + offset; });
}

IntervalSet pushforward_alpha(const IntervalSet& p, const Rat& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("time outside [0,1]");
  return pushforward(p, [&](const Rat& s) { return alpha_t(s, t); });
}

std::pair<IntervalSet, IntervalSet> h_t(const IntervalSet& p, const Rat& t) {
  IntervalSet image = pushforward_alpha(p, t);
  IntervalSet mirror = tau(image);
  return {std::move(image), std::move(mirror)};
}

IntervalSet vanish_path(const IntervalSet& p, const Rat& u) {
  if (u < 0 || u > 1) throw std::invalid_argument("time outside [0,1]");
  IntervalSet q = pushforward_alpha(p, Rat(1));
  std::vector<Interval> pieces;
  for (const auto& j : q.components()) {
    if (u <= j.lo) {
      pieces.emplace_back(j.lo - u, j.hi - u, j.lo_closed, j.hi_closed);
      if (auto m = j.reversed()) pieces.emplace_back(m->lo + u, m->hi + u, m->lo_closed, m->hi_closed);
    } else if (u < j.hi) {
      pieces.emplace_back(u - j.hi, j.hi - u, !j.hi_closed, j.hi_closed);
    }
  }
  return IntervalSet::merge_point_overlaps(std::move(pieces));
}

std::pair<IntervalSet, IntervalSet> split_closed(const IntervalSet& p) {
  std::vector<Interval> plus, minus;
  for (const auto& c : p.components()) (c.both_closed() ? plus : minus).push_back(c);
  return {IntervalSet::normalize(std::move(plus)), IntervalSet::normalize(std::move(minus))};
}

Rat measure(const IntervalSet& p) {
  Rat total = 0;
  for (const auto& c : p.components()) total += c.length();
  return total;
}

Rat symdiff_distance(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Rat> cuts;
  for (const auto& c : a.components()) {
    cuts.push_back(c.lo);
    cuts.push_back(c.hi);
  }
  for (const auto& c : b.components()) {
    cuts.push_back(c.lo);
    cuts.push_back(c.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Rat total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rat mid = (cuts[i] + cuts[i + 1]) / 2;
    if (a.contains(mid) != b.contains(mid)) total += cuts[i + 1] - cuts[i];
  }
  return total;
}

Int chi(const IntervalSet& p) {
  Int total = 0;
  for (const auto& c : p.components()) {
    if (c.both_closed()) total += 1;
    else if (c.both_open()) total -= 1;
  }
  return total;
}

IntervalSet IntervalSampler::operator()(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> count_dist(0, max_components);
  int k = count_dist(rng);
  if (k == 0) return IntervalSet();
  // Draw 2k distinct grid points; consecutive pairs become components, so
  // components neither touch nor overlap and no pinholes appear.
  std::uniform_int_distribution<int> tick(-span * grid, span * grid);
  std::vector<int> ticks;
  while (static_cast<int>(ticks.size()) < 2 * k) {
    int t = tick(rng);
    if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
  }
  std::sort(ticks.begin(), ticks.end());
  std::uniform_int_distribution<int> flag(0, 1);
  std::vector<Interval> parts;
  for (int i = 0; i < k; ++i)
    parts.emplace_back(Rat(ticks[2 * i], grid), Rat(ticks[2 * i + 1], grid), flag(rng) != 0,
                       flag(rng) != 0);
  return IntervalSet::normalize(std::move(parts));
}

}  // namespace strand
