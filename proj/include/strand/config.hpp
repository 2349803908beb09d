#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "strand/monoid.hpp"
#include "strand/rep.hpp"

namespace strand {

struct duplicate_point_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Particle {
  QVec point;
  Elem label;

  bool operator==(const Particle& rhs) const {
    return point == rhs.point && label == rhs.label;
  }
};

/// Finite set of distinct points of a universe stage carrying nonzero
/// labels.  Particles are kept sorted by position, so equality is plain
/// component comparison.
class LabeledConfig {
 public:
  LabeledConfig(StagePtr stage, MonoidPtr labels) : stage_(std::move(stage)), labels_(std::move(labels)) {}

  const StagePtr& stage() const { return stage_; }
  const MonoidPtr& label_monoid() const { return labels_; }
  const std::vector<Particle>& particles() const { return particles_; }
  size_t size() const { return particles_.size(); }
  bool empty() const { return particles_.empty(); }

  bool operator==(const LabeledConfig& rhs) const {
    return stage_->dim() == rhs.stage_->dim() && particles_ == rhs.particles_;
  }

  std::string to_string() const;

  friend LabeledConfig make_config(StagePtr stage, MonoidPtr labels, std::vector<Particle> raw);

 private:
  StagePtr stage_;
  MonoidPtr labels_;
  std::vector<Particle> particles_;
};

/// Normalize a raw particle list: zero-labeled particles are erased, points
/// must be distinct (duplicate_point_error otherwise) and labels must lie
/// in the carrier.
LabeledConfig make_config(StagePtr stage, MonoidPtr labels, std::vector<Particle> raw);

LabeledConfig empty_config(StagePtr stage, MonoidPtr labels);

/// Pointwise partial sum: labels over a shared point are summed in M;
/// undefined when any such label tuple is not summable.  All configs must
/// live on the same stage and monoid.
std::optional<LabeledConfig> config_partial_sum(std::span<const LabeledConfig> tuple);
std::optional<LabeledConfig> config_partial_sum(const LabeledConfig& a, const LabeledConfig& b);

/// g(c, a) = (g c, g a g^{-1}).
LabeledConfig g_act(const LabeledConfig& c, int g);

/// True when the config is fixed by every element of the subgroup.
bool is_fixed(const LabeledConfig& c, const std::vector<int>& subgroup);

/// Zero-pad all points into a larger stage.
LabeledConfig pad_config(const LabeledConfig& c, StagePtr target);

/// The chosen stage-doubling gadget: a G-linear isometric embedding
///   l(v, w) = (-w, v)   (block notation: first k copies, last k copies)
/// of stage k x stage k into stage 2k, a rational direction e spanning a
/// line in the fixed subspace (all-ones vector of the first copy), and the
/// rational rotation family l_t with l_1 = padding and l_0 = l(., 0).
struct IsometryGadget {
  StagePtr stage_in;
  StagePtr stage_out;
  QVec e_dir;  // in stage_in coordinates; spans a fixed line, |e_dir|^2 = |G|

  size_t dim_in() const { return stage_in->dim(); }
  size_t dim_out() const { return stage_out->dim(); }
};

IsometryGadget make_gadget(StagePtr stage_in);

/// l(v, w) for stage_in vectors v, w.
QVec gadget_embed(const IsometryGadget& g, const QVec& v, const QVec& w);
/// e(s) = s * e_dir.
QVec gadget_e(const IsometryGadget& g, const Rat& s);

/// The rotation family on stage_out at rational t in [0,1]: cos/sin are
/// realized as ((1-s^2)/(1+s^2), 2s/(1+s^2)) with s = 1 - t, so every
/// sample is an exact isometry; endpoints are l_0 = l(., 0) and l_1 = id.
QMatrix isometry_path_matrix(const IsometryGadget& g, const Rat& t);
/// l_t applied to a stage_in vector (padded into stage_out first).
QVec isometry_path(const IsometryGadget& g, const Rat& t, const QVec& v);

/// Keep the particles whose label has wedge coordinate p, projecting labels
/// to the label factor; the basepoint coordinate yields the empty config.
LabeledConfig delta_map(const LabeledConfig& c, int p, MonoidPtr label_monoid_out);

/// Reassembly: an assignment p -> config over M (p ranging over non-base
/// points of P) becomes one config over P ^ M on the doubled stage, the
/// p-th part embedded along l(n_p e, .) with n_p the 1-based index of p.
LabeledConfig psi(const PointedGSet& p, const std::vector<std::pair<int, LabeledConfig>>& assignment,
                  const IsometryGadget& gadget, MonoidPtr wedge_monoid_out);

/// Hopf multiplication: psi on the two-point assignment followed by the
/// fold of labels; supports are separated by the gadget, so no sums are
/// needed.  Output lives on the doubled stage.
LabeledConfig hopf_mul(const LabeledConfig& x, const LabeledConfig& y,
                       const IsometryGadget& gadget);

int compare_qvec(const QVec& a, const QVec& b);

}  // namespace strand
