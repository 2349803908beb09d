#include "strand/config.hpp"

#include <algorithm>

namespace strand {

int compare_qvec(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

std::string LabeledConfig::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < particles_.size(); ++i) {
    if (i) out += ", ";
    out += format_qvec(particles_[i].point) + ":" + particles_[i].label.to_string();
  }
  return out + "}";
}

LabeledConfig make_config(StagePtr stage, MonoidPtr labels, std::vector<Particle> raw) {
  LabeledConfig c(std::move(stage), std::move(labels));
  for (auto& p : raw) {
    if (p.point.size() != c.stage_->dim())
      throw std::invalid_argument("particle dimension does not match the stage");
    if (!c.labels_->contains(p.label))
      throw std::invalid_argument("label not in the monoid carrier: " + p.label.to_string());
    if (c.labels_->is_zero(p.label)) continue;
    c.particles_.push_back(std::move(p));
  }
  std::sort(c.particles_.begin(), c.particles_.end(), [](const Particle& a, const Particle& b) {
    return compare_qvec(a.point, b.point) < 0;
  });
  for (size_t i = 0; i + 1 < c.particles_.size(); ++i)
    if (c.particles_[i].point == c.particles_[i + 1].point)
      throw duplicate_point_error("two particles share the point " +
                                  format_qvec(c.particles_[i].point));
  return c;
}

LabeledConfig empty_config(StagePtr stage, MonoidPtr labels) {
  return LabeledConfig(std::move(stage), std::move(labels));
}

std::optional<LabeledConfig> config_partial_sum(std::span<const LabeledConfig> tuple) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple needs a stage; use empty_config");
  const StagePtr& stage = tuple[0].stage();
  const MonoidPtr& monoid = tuple[0].label_monoid();
  for (const auto& c : tuple) {
    if (c.stage()->dim() != stage->dim()) throw std::invalid_argument("stage mismatch");
    if (c.label_monoid() != monoid) throw std::invalid_argument("label monoid mismatch");
  }
  struct QVecLess {
    bool operator()(const QVec& a, const QVec& b) const { return compare_qvec(a, b) < 0; }
  };
  std::map<QVec, std::vector<Elem>, QVecLess> at_point;
  for (const auto& c : tuple)
    for (const auto& p : c.particles()) at_point[p.point].push_back(p.label);
  std::vector<Particle> out;
  for (auto& [point, labels] : at_point) {
    SumOutcome o = monoid->sum(labels);
    if (o.status == SumOutcome::Status::budget_exceeded)
      throw std::runtime_error("label sum exceeded its search budget");
    if (!o.is_defined()) return std::nullopt;
    if (!monoid->is_zero(*o.value)) out.push_back({point, std::move(*o.value)});
  }
  return make_config(stage, monoid, std::move(out));
}

std::optional<LabeledConfig> config_partial_sum(const LabeledConfig& a, const LabeledConfig& b) {
  std::vector<LabeledConfig> t = {a, b};
  return config_partial_sum(std::span<const LabeledConfig>(t));
}

LabeledConfig g_act(const LabeledConfig& c, int g) {
  std::vector<Particle> moved;
  moved.reserve(c.size());
  for (const auto& p : c.particles())
    moved.push_back({act_vector(c.stage()->rep, g, p.point), c.label_monoid()->act(g, p.label)});
  return make_config(c.stage(), c.label_monoid(), std::move(moved));
}

bool is_fixed(const LabeledConfig& c, const std::vector<int>& subgroup) {
  if (!c.stage()->group->is_subgroup(subgroup)) throw std::invalid_argument("not a subgroup");
  for (int h : subgroup)
    if (!(g_act(c, h) == c)) return false;
  return true;
}

LabeledConfig pad_config(const LabeledConfig& c, StagePtr target) {
  std::vector<Particle> out;
  out.reserve(c.size());
  for (const auto& p : c.particles()) out.push_back({pad_vector(p.point, target->dim()), p.label});
  return make_config(std::move(target), c.label_monoid(), std::move(out));
}

IsometryGadget make_gadget(StagePtr stage_in) {
  StagePtr out = regular_rep(stage_in->group, 2 * stage_in->copies);
  QVec e(stage_in->dim(), Rat(0));
  for (int h = 0; h < stage_in->group->order(); ++h) e[h] = 1;  // first copy, all ones
  return IsometryGadget{std::move(stage_in), std::move(out), std::move(e)};
}

QVec gadget_embed(const IsometryGadget& g, const QVec& v, const QVec& w) {
  if (v.size() != g.dim_in() || w.size() != g.dim_in())
    throw std::invalid_argument("gadget embed dimension mismatch");
  QVec out(g.dim_out(), Rat(0));
  for (size_t i = 0; i < g.dim_in(); ++i) {
    out[i] = -w[i];
    out[i + g.dim_in()] = v[i];
  }
  return out;
}

QVec gadget_e(const IsometryGadget& g, const Rat& s) { return qvec_scale(s, g.e_dir); }

namespace {

std::pair<Rat, Rat> rational_cos_sin(const Rat& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("time outside [0,1]");
  Rat s = 1 - t;
  Rat den = 1 + s * s;
  return {(1 - s * s) / den, 2 * s / den};
}

}  // namespace

QMatrix isometry_path_matrix(const IsometryGadget& g, const Rat& t) {
  auto [c, s] = rational_cos_sin(t);
  const size_t d = g.dim_in();
  QMatrix m(2 * d, 2 * d);
  for (size_t i = 0; i < d; ++i) {
    m.at(i, i) = c;
    m.at(i, i + d) = -s;
    m.at(i + d, i) = s;
    m.at(i + d, i + d) = c;
  }
  return m;
}

QVec isometry_path(const IsometryGadget& g, const Rat& t, const QVec& v) {
  if (v.size() != g.dim_in()) throw std::invalid_argument("isometry path dimension mismatch");
  auto [c, s] = rational_cos_sin(t);
  QVec out(g.dim_out(), Rat(0));
  for (size_t i = 0; i < g.dim_in(); ++i) {
    out[i] = c * v[i];
    out[i + g.dim_in()] = s * v[i];
  }
  return out;
}

LabeledConfig delta_map(const LabeledConfig& c, int p, MonoidPtr label_monoid_out) {
  std::vector<Particle> out;
  for (const auto& particle : c.particles()) {
    const Elem& label = particle.label;
    if (label.kind() != Elem::Kind::wedge)
      throw std::invalid_argument("delta expects wedge-shaped labels");
    if (label.is_base_pair() || label.wedge_x() != p) continue;
    out.push_back({particle.point, label.wedge_label()});
  }
  return make_config(c.stage(), std::move(label_monoid_out), std::move(out));
}

LabeledConfig psi(const PointedGSet& p,
                  const std::vector<std::pair<int, LabeledConfig>>& assignment,
                  const IsometryGadget& gadget, MonoidPtr wedge_monoid_out) {
  // 1-based numbering of the non-basepoint elements of P in index order.
  std::vector<int> numbering(p.size(), 0);
  int next = 1;
  for (int i = 0; i < p.size(); ++i)
    if (i != p.basepoint()) numbering[i] = next++;
  std::vector<Particle> out;
  for (const auto& [point_of_p, config] : assignment) {
    if (point_of_p == p.basepoint())
      throw std::invalid_argument("assignment may not use the basepoint of P");
    if (config.stage()->dim() != gadget.dim_in())
      throw std::invalid_argument("assignment stage does not match the gadget");
    QVec anchor = gadget_e(gadget, Rat(numbering[point_of_p]));
    for (const auto& particle : config.particles())
      out.push_back({gadget_embed(gadget, anchor, particle.point),
                     Elem::wedge_pair(point_of_p, particle.label)});
  }
  return make_config(gadget.stage_out, std::move(wedge_monoid_out), std::move(out));
}

LabeledConfig hopf_mul(const LabeledConfig& x, const LabeledConfig& y,
                       const IsometryGadget& gadget) {
  if (x.stage()->dim() != gadget.dim_in() || y.stage()->dim() != gadget.dim_in())
    throw std::invalid_argument("hopf factors must live on the gadget input stage");
  std::vector<Particle> out;
  auto place = [&](const LabeledConfig& c, int slot) {
    QVec anchor = gadget_e(gadget, Rat(slot));
    for (const auto& particle : c.particles())
      out.push_back({gadget_embed(gadget, anchor, particle.point), particle.label});
  };
  place(x, 1);
  place(y, 2);
  return make_config(gadget.stage_out, x.label_monoid(), std::move(out));
}

}  // namespace strand
