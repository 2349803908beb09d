#include "strand/strings.hpp"

#include <algorithm>
#include <map>

namespace strand {

namespace {

const Elem& require_string_label(const Elem& label) {
  if (label.kind() != Elem::Kind::smash || label.is_base_pair() ||
      label.smash_first().kind() != Elem::Kind::ivset)
    throw std::invalid_argument("expected an interval-labeled particle");
  return label;
}

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return compare_qvec(a, b) < 0; }
};

}  // namespace

std::vector<StringRecord> flatten(const StringConfig& sc) {
  std::vector<StringRecord> out;
  for (const auto& p : sc.particles()) {
    require_string_label(p.label);
    for (const auto& piece : p.label.smash_first().as_ivset().components())
      out.push_back({p.point, piece, p.label.smash_second()});
  }
  return out;
}

StringConfig unflatten(StagePtr stage, MonoidPtr smash_monoid,
                       const std::vector<StringRecord>& records) {
  std::map<QVec, std::pair<std::vector<Interval>, std::optional<Elem>>, QVecLess> groups;
  for (const auto& r : records) {
    auto& slot = groups[r.point];
    slot.first.push_back(r.piece);
    if (slot.second && !(*slot.second == r.label))
      throw std::invalid_argument("strings over one point carry different labels");
    slot.second = r.label;
  }
  std::vector<Particle> particles;
  for (auto& [point, slot] : groups) {
    IntervalSet set = IntervalSet::normalize(std::move(slot.first));
    particles.push_back({point, Elem::smash_pair(Elem::ivset(std::move(set)), *slot.second)});
  }
  return make_config(std::move(stage), std::move(smash_monoid), std::move(particles));
}

bool is_plus(const StringConfig& sc) {
  for (const auto& p : sc.particles()) {
    require_string_label(p.label);
    for (const auto& piece : p.label.smash_first().as_ivset().components())
      if (!piece.both_closed()) return false;
  }
  return true;
}

StringConfig rho(const StringConfig& sc) {
  if (!is_plus(sc))
    throw std::domain_error("config carries a non-closed interval component");
  return sc;
}

LabeledConfig lambda(const StringConfig& sc, const IsometryGadget& gadget,
                     MonoidPtr label_monoid_out) {
  if (!is_plus(sc))
    throw std::domain_error("config carries a non-closed interval component");
  std::vector<Particle> out;
  for (const auto& r : flatten(sc)) {
    Rat mid = (r.piece.lo + r.piece.hi) / 2;
    out.push_back({gadget_embed(gadget, r.point, gadget_e(gadget, mid)), r.label});
  }
  return make_config(gadget.stage_out, std::move(label_monoid_out), std::move(out));
}

StringConfig gamma(const LabeledConfig& x, MonoidPtr smash_monoid_out) {
  std::vector<Particle> out;
  for (const auto& p : x.particles())
    out.push_back({p.point, Elem::smash_pair(Elem::ivset(IntervalSet::normalize(
                                                 {Interval::closed(-1, 1)})),
                                             p.label)});
  return make_config(x.stage(), std::move(smash_monoid_out), std::move(out));
}

StringConfig tau_inv(const StringConfig& sc) {
  std::vector<Particle> out;
  for (const auto& p : sc.particles()) {
    require_string_label(p.label);
    out.push_back({p.point, homotopy_inversion(p.label)});
  }
  return make_config(sc.stage(), sc.label_monoid(), std::move(out));
}

LabeledConfig PathSpec::eval(const Rat& t) const {
  if (t < 0 || t > 1) throw std::invalid_argument("time outside [0,1]");
  return eval_(t);
}

PathSpec make_gamma_lambda_path(const StringConfig& sc, const IsometryGadget& gadget,
                                MonoidPtr label_monoid) {
  LabeledConfig e0 = gamma(lambda(sc, gadget, label_monoid), sc.label_monoid());
  LabeledConfig e1 = pad_config(sc, gadget.stage_out);
  PathSpec spec(PathSpec::Kind::gamma_lambda, std::move(e0), std::move(e1));
  auto records = flatten(sc);
  StagePtr stage_out = gadget.stage_out;
  MonoidPtr monoid = sc.label_monoid();
  spec.eval_ = [records, gadget, stage_out, monoid](const Rat& t) {
    std::vector<StringRecord> moved;
    moved.reserve(records.size());
    if (t <= Rat(1, 2)) {
      Rat s = 2 * t;
      for (const auto& r : records) {
        Rat mid = (r.piece.lo + r.piece.hi) / 2;
        QVec pos = gadget_embed(gadget, r.point, gadget_e(gadget, (1 - s) * mid));
        // I_s(J) = [s a - (1-s), s b + (1-s)]
        Interval piece(s * r.piece.lo - (1 - s), s * r.piece.hi + (1 - s), true, true);
        moved.push_back({std::move(pos), std::move(piece), r.label});
      }
    } else {
      Rat s = 2 * t - 1;
      for (const auto& r : records)
        moved.push_back({isometry_path(gadget, s, r.point), r.piece, r.label});
    }
    return unflatten(stage_out, monoid, moved);
  };
  return spec;
}

PathSpec make_lambda_gamma_path(const LabeledConfig& x, const IsometryGadget& gadget) {
  MonoidPtr smash_monoid = make_smash(make_interval_monoid(), x.label_monoid());
  LabeledConfig e0 = lambda(gamma(x, smash_monoid), gadget, x.label_monoid());
  LabeledConfig e1 = pad_config(x, gadget.stage_out);
  PathSpec spec(PathSpec::Kind::lambda_gamma, std::move(e0), std::move(e1));
  LabeledConfig base = x;
  spec.eval_ = [base, gadget](const Rat& t) {
    std::vector<Particle> out;
    for (const auto& p : base.particles())
      out.push_back({isometry_path(gadget, t, p.point), p.label});
    return make_config(gadget.stage_out, base.label_monoid(), std::move(out));
  };
  return spec;
}

namespace {

LabeledConfig apply_labelwise(const StringConfig& sc,
                              const std::function<IntervalSet(const IntervalSet&)>& f) {
  std::vector<Particle> out;
  for (const auto& p : sc.particles()) {
    require_string_label(p.label);
    IntervalSet moved = f(p.label.smash_first().as_ivset());
    if (moved.empty()) continue;
    out.push_back({p.point, Elem::smash_pair(Elem::ivset(std::move(moved)),
                                             p.label.smash_second())});
  }
  return make_config(sc.stage(), sc.label_monoid(), std::move(out));
}

}  // namespace

PathSpec make_h_t_path(const StringConfig& sc) {
  LabeledConfig e1 =
      apply_labelwise(sc, [](const IntervalSet& p) { return pushforward_alpha(p, 1); });
  PathSpec spec(PathSpec::Kind::h_t, sc, std::move(e1));
  StringConfig base = sc;
  spec.eval_ = [base](const Rat& t) {
    return apply_labelwise(base, [&](const IntervalSet& p) { return pushforward_alpha(p, t); });
  };
  return spec;
}

PathSpec make_vanish_path_spec(const StringConfig& sc) {
  LabeledConfig e0 = apply_labelwise(sc, [](const IntervalSet& p) {
    auto pair = h_t(p, 1);
    auto merged = union_partial(pair.first, pair.second);
    if (!merged) throw std::logic_error("mirror pair is not disjoint");
    return *merged;
  });
  LabeledConfig e1 = empty_config(sc.stage(), sc.label_monoid());
  PathSpec spec(PathSpec::Kind::vanish, std::move(e0), std::move(e1));
  StringConfig base = sc;
  spec.eval_ = [base](const Rat& t) {
    return apply_labelwise(base, [&](const IntervalSet& p) { return vanish_path(p, t); });
  };
  return spec;
}

PathSpec make_linear_isotopy(StagePtr stage, MonoidPtr monoid,
                             std::vector<PathSpec::Track> tracks) {
  auto at = [stage, monoid, tracks](const Rat& t) {
    std::vector<Particle> out;
    for (const auto& track : tracks) {
      QVec pos(track.from.size());
      for (size_t i = 0; i < pos.size(); ++i)
        pos[i] = (1 - t) * track.from[i] + t * track.to[i];
      out.push_back({std::move(pos), track.label});
    }
    return make_config(stage, monoid, std::move(out));
  };
  LabeledConfig e0 = at(0);
  LabeledConfig e1 = at(1);
  PathSpec spec(PathSpec::Kind::linear_isotopy, std::move(e0), std::move(e1));
  spec.eval_ = at;
  return spec;
}

PathSpec grouplike_certificate(const StringConfig& x, const IsometryGadget& gadget) {
  LabeledConfig e0 = hopf_mul(x, tau_inv(x), gadget);
  LabeledConfig e1 = empty_config(gadget.stage_out, x.label_monoid());
  PathSpec spec(PathSpec::Kind::inverse_certificate, std::move(e0), std::move(e1));
  StringConfig base = x;
  spec.eval_ = [base, gadget](const Rat& t) -> LabeledConfig {
    const MonoidPtr& monoid = base.label_monoid();
    std::vector<Particle> out;
    auto emit_pair = [&](const QVec& v, const IntervalSet& first_set,
                         const IntervalSet& second_set, const Elem& label, const Rat& slot1,
                         const Rat& slot2) {
      out.push_back({gadget_embed(gadget, gadget_e(gadget, slot1), v),
                     Elem::smash_pair(Elem::ivset(first_set), label)});
      out.push_back({gadget_embed(gadget, gadget_e(gadget, slot2), v),
                     Elem::smash_pair(Elem::ivset(second_set), label)});
    };
    for (const auto& p : base.particles()) {
      require_string_label(p.label);
      const IntervalSet& ival = p.label.smash_first().as_ivset();
      const Elem& m = p.label.smash_second();
      if (t <= Rat(1, 3)) {
        // Stage A: both labels ride the invertibility homotopy in place.
        auto pair = h_t(ival, 3 * t);
        emit_pair(p.point, pair.first, pair.second, m, Rat(1), Rat(2));
      } else if (t < Rat(2, 3)) {
        // Stage B: slide the mirror pair together along the e direction.
        Rat s = 3 * t - 1;
        auto pair = h_t(ival, 1);
        emit_pair(p.point, pair.first, pair.second, m, 1 + s / 2, 2 - s / 2);
      } else {
        // Stage B end superimposes the labels; stage C vanishes them.
        Rat u = 3 * t - 2;
        IntervalSet collapsed = vanish_path(ival, u);
        if (collapsed.empty()) continue;
        out.push_back({gadget_embed(gadget, gadget_e(gadget, Rat(3, 2)), p.point),
                       Elem::smash_pair(Elem::ivset(std::move(collapsed)), m)});
      }
    }
    return make_config(gadget.stage_out, monoid, std::move(out));
  };
  return spec;
}

namespace {

std::vector<StringRecord> flatten_for_metric(const LabeledConfig& c) {
  std::vector<StringRecord> out;
  for (const auto& p : c.particles()) {
    if (p.label.kind() == Elem::Kind::smash && !p.label.is_base_pair() &&
        p.label.smash_first().kind() == Elem::Kind::ivset) {
      for (const auto& piece : p.label.smash_first().as_ivset().components())
        out.push_back({p.point, piece, p.label.smash_second()});
    } else {
      out.push_back({p.point, Interval::closed(-1, 1), p.label});
    }
  }
  return out;
}

}  // namespace

std::pair<Rat, MatchReport> config_distance(const LabeledConfig& a, const LabeledConfig& b) {
  if (a.stage()->dim() != b.stage()->dim()) throw std::invalid_argument("stage mismatch");
  auto left = flatten_for_metric(a);
  auto right = flatten_for_metric(b);
  MatchingProblem prob;
  prob.pair_cost.assign(left.size(), std::vector<std::optional<Rat>>(right.size()));
  for (size_t i = 0; i < left.size(); ++i)
    for (size_t j = 0; j < right.size(); ++j) {
      if (!(left[i].label == right[j].label)) continue;
      Rat cost = qvec_l1_dist(left[i].point, right[j].point) +
                 symdiff_distance(IntervalSet::normalize({left[i].piece}),
                                  IntervalSet::normalize({right[j].piece}));
      prob.pair_cost[i][j] = cost;
    }
  for (const auto& r : left) prob.left_unmatched.push_back(r.piece.length());
  for (const auto& r : right) prob.right_unmatched.push_back(r.piece.length());
  MatchReport rep = std::max(left.size(), right.size()) <= 6 ? solve_matching_bruteforce(prob)
                                                             : solve_matching(prob);
  Rat total = rep.total;
  return {total, std::move(rep)};
}

CertifyReport certify_continuity(const PathSpec& spec, int samples, const Rat& bound) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  CertifyReport rep;
  rep.samples = samples;
  rep.bound = bound;
  std::vector<LabeledConfig> configs;
  try {
    for (int i = 0; i <= samples; ++i) configs.push_back(spec.eval(Rat(i, samples)));
  } catch (const duplicate_point_error&) {
    rep.collision = true;
    return rep;
  }
  rep.endpoint0_exact = configs.front() == spec.endpoint0();
  rep.endpoint1_exact = configs.back() == spec.endpoint1();
  Rat short_length(1, samples);
  for (int i = 0; i <= samples; ++i) {
    for (const auto& p : configs[i].particles()) {
      if (p.label.kind() != Elem::Kind::smash || p.label.is_base_pair() ||
          p.label.smash_first().kind() != Elem::Kind::ivset)
        continue;
      for (const auto& piece : p.label.smash_first().as_ivset().components())
        if (piece.length() < short_length && piece.both_closed()) rep.audit_ok = false;
    }
    if (i == samples) break;
    Rat d = config_distance(configs[i], configs[i + 1]).first;
    Rat ratio = d * samples;
    if (ratio > rep.max_step_ratio) rep.max_step_ratio = ratio;
  }
  rep.lipschitz_ok = rep.max_step_ratio <= bound;
  return rep;
}

std::pair<StringConfig, StringConfig> c3_pair(const StringConfig& t, const WedgeParts& parts,
                                              MonoidPtr left_monoid, MonoidPtr right_monoid) {
  std::vector<int> back_left(parts.sum.size(), -1), back_right(parts.sum.size(), -1);
  for (size_t i = 0; i < parts.from_x.size(); ++i)
    if (parts.from_x[i]) back_left[parts.from_x[i]] = static_cast<int>(i);
  for (size_t j = 0; j < parts.from_y.size(); ++j)
    if (parts.from_y[j]) back_right[parts.from_y[j]] = static_cast<int>(j);
  std::vector<Particle> left, right;
  for (const auto& p : t.particles()) {
    require_string_label(p.label);
    const Elem& inner = p.label.smash_second();
    if (inner.kind() != Elem::Kind::wedge || inner.is_base_pair())
      throw std::invalid_argument("c3 expects wedge-indexed labels");
    int w = inner.wedge_x();
    if (back_left[w] >= 0)
      left.push_back({p.point, Elem::smash_pair(p.label.smash_first(),
                                                Elem::wedge_pair(back_left[w],
                                                                 inner.wedge_label()))});
    else
      right.push_back({p.point, Elem::smash_pair(p.label.smash_first(),
                                                 Elem::wedge_pair(back_right[w],
                                                                  inner.wedge_label()))});
  }
  return {make_config(t.stage(), std::move(left_monoid), std::move(left)),
          make_config(t.stage(), std::move(right_monoid), std::move(right))};
}

namespace {

StringConfig relabel_into_wedge(const StringConfig& c, const std::vector<int>& inclusion,
                                MonoidPtr wedge_monoid) {
  std::vector<Particle> out;
  for (const auto& p : c.particles()) {
    require_string_label(p.label);
    const Elem& inner = p.label.smash_second();
    if (inner.kind() != Elem::Kind::wedge || inner.is_base_pair())
      throw std::invalid_argument("expected wedge-indexed labels");
    out.push_back({p.point, Elem::smash_pair(p.label.smash_first(),
                                             Elem::wedge_pair(inclusion[inner.wedge_x()],
                                                              inner.wedge_label()))});
  }
  return make_config(c.stage(), std::move(wedge_monoid), std::move(out));
}

}  // namespace

StringConfig c3_merge(const StringConfig& u, const StringConfig& v, const WedgeParts& parts,
                      const IsometryGadget& gadget, MonoidPtr wedge_monoid) {
  StringConfig iu = relabel_into_wedge(u, parts.from_x, wedge_monoid);
  StringConfig iv = relabel_into_wedge(v, parts.from_y, wedge_monoid);
  return hopf_mul(iu, iv, gadget);
}

QVec coset_vector(const UniverseStage& stage, const std::vector<int>& coset) {
  QVec out(stage.dim(), Rat(0));
  for (int member : coset) out[member] = 1;  // first copy of the regular rep
  return out;
}

StringConfig c4_rho(const std::vector<StringConfig>& f,
                    const std::vector<std::vector<int>>& cosets,
                    const SmashParts& coset_smash_x, const IsometryGadget& gadget,
                    MonoidPtr out_monoid) {
  if (f.size() != cosets.size())
    throw std::invalid_argument("one config per coset required");
  std::vector<Particle> out;
  for (size_t c = 0; c < f.size(); ++c) {
    if (f[c].stage()->dim() != gadget.dim_in()) throw std::invalid_argument("stage mismatch");
    QVec anchor = coset_vector(*gadget.stage_in, cosets[c]);
    for (const auto& p : f[c].particles()) {
      require_string_label(p.label);
      const Elem& inner = p.label.smash_second();
      if (inner.kind() != Elem::Kind::wedge || inner.is_base_pair())
        throw std::invalid_argument("c4 expects wedge-indexed labels");
      int q = coset_smash_x.pair_index[static_cast<int>(c) + 1][inner.wedge_x()];
      out.push_back({gadget_embed(gadget, anchor, p.point),
                     Elem::smash_pair(p.label.smash_first(),
                                      Elem::wedge_pair(q, inner.wedge_label()))});
    }
  }
  return make_config(gadget.stage_out, std::move(out_monoid), std::move(out));
}

std::vector<Elem> c4_eval(const StringConfig& assembled, int coset_index,
                          const SmashParts& coset_smash_x) {
  // invert the pair index for the requested coset
  std::map<int, int> back;
  const auto& row = coset_smash_x.pair_index[coset_index + 1];
  for (size_t x = 0; x < row.size(); ++x)
    if (row[x]) back[row[x]] = static_cast<int>(x);
  std::vector<Elem> labels;
  for (const auto& p : assembled.particles()) {
    const Elem& inner = p.label.smash_second();
    auto it = back.find(inner.wedge_x());
    if (it == back.end()) continue;
    labels.push_back(Elem::smash_pair(p.label.smash_first(),
                                      Elem::wedge_pair(it->second, inner.wedge_label())));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace strand
