#pragma once

#include <functional>

#include "strand/assignment.hpp"
#include "strand/config.hpp"

namespace strand {

/// A string config is a labeled config whose labels are pairs
/// (nonempty interval set, nonzero M-element), i.e. elements of a smash of
/// the interval monoid with a label monoid.
using StringConfig = LabeledConfig;

struct StringRecord {
  QVec point;
  Interval piece;
  Elem label;  // the M part
};

/// One record per interval component of each particle; records over the
/// same point carry the same label and disjoint pieces.
std::vector<StringRecord> flatten(const StringConfig& sc);

/// Regroup flattened records by point.  Records over one point must carry
/// one label; their pieces are normalized together.
StringConfig unflatten(StagePtr stage, MonoidPtr smash_monoid,
                       const std::vector<StringRecord>& records);

/// True when every interval component of every label is closed on both
/// ends.
bool is_plus(const StringConfig& sc);

/// Identity injection from the all-closed part; throws std::domain_error on
/// a config that is not all-closed (the membership certificate).
StringConfig rho(const StringConfig& sc);

/// Collapse each string to the labeled particle at l(v, e(midpoint)).
/// Requires is_plus; output lives on the doubled stage over the plain label
/// monoid.
LabeledConfig lambda(const StringConfig& sc, const IsometryGadget& gadget,
                     MonoidPtr label_monoid_out);

/// Thicken each particle to the string {v} x [-1,1].
StringConfig gamma(const LabeledConfig& x, MonoidPtr smash_monoid_out);

/// Labelwise (tau ^ 1).
StringConfig tau_inv(const StringConfig& sc);

/// Evaluable homotopy from a fixed catalog.  Every kind has an exact
/// formula at rational times and exact declared endpoints that are computed
/// compositionally, independently of the interpolation formula.
class PathSpec {
 public:
  enum class Kind { gamma_lambda, lambda_gamma, h_t, vanish, inverse_certificate, linear_isotopy };

  struct Track {
    QVec from, to;
    Elem label;
  };

  Kind kind() const { return kind_; }
  const LabeledConfig& endpoint0() const { return endpoint0_; }
  const LabeledConfig& endpoint1() const { return endpoint1_; }

  /// Evaluate at t in [0,1].  May throw duplicate_point_error for a
  /// colliding linear isotopy.
  LabeledConfig eval(const Rat& t) const;

  friend PathSpec make_gamma_lambda_path(const StringConfig& sc, const IsometryGadget& gadget,
                                         MonoidPtr label_monoid);
  friend PathSpec make_lambda_gamma_path(const LabeledConfig& x, const IsometryGadget& gadget);
  friend PathSpec make_h_t_path(const StringConfig& sc);
  friend PathSpec make_vanish_path_spec(const StringConfig& sc);
  friend PathSpec make_linear_isotopy(StagePtr stage, MonoidPtr monoid,
                                      std::vector<Track> tracks);
  friend PathSpec grouplike_certificate(const StringConfig& x, const IsometryGadget& gadget);

 private:
  PathSpec(Kind kind, LabeledConfig e0, LabeledConfig e1)
      : kind_(kind), endpoint0_(std::move(e0)), endpoint1_(std::move(e1)) {}

  Kind kind_;
  LabeledConfig endpoint0_, endpoint1_;
  std::function<LabeledConfig(const Rat&)> eval_;
};

/// (gamma lambda)_t: strings shrink onto midpoints for t <= 1/2 and ride
/// the isometry family home for t >= 1/2; endpoints gamma(lambda(sc)) and
/// sc padded to the doubled stage.
PathSpec make_gamma_lambda_path(const StringConfig& sc, const IsometryGadget& gadget,
                                MonoidPtr label_monoid);

/// (lambda gamma)_t: particles ride the isometry family; endpoints
/// lambda(gamma(x)) and x padded.
PathSpec make_lambda_gamma_path(const LabeledConfig& x, const IsometryGadget& gadget);

/// Labelwise interval deformation into (0,1) (the first coordinate of the
/// invertibility homotopy); endpoints sc and the shrunk config.
PathSpec make_h_t_path(const StringConfig& sc);

/// Labelwise collapse to the empty config; endpoint0 is the merged mirror
/// pair, endpoint1 the empty config.
PathSpec make_vanish_path_spec(const StringConfig& sc);

/// Straight-line motion of explicit tracks; evaluation throws on particle
/// collision.
PathSpec make_linear_isotopy(StagePtr stage, MonoidPtr monoid,
                             std::vector<PathSpec::Track> tracks);

/// Certificate that hopf_mul(x, tau_inv(x)) deforms to the empty config:
/// stage A shrinks both factors' interval labels into (0,1) and its mirror,
/// stage B slides each mirror pair together and superimposes the labels,
/// stage C vanishes the merged labels.  Exact at both ends.
PathSpec grouplike_certificate(const StringConfig& x, const IsometryGadget& gadget);

/// Distance between two configs on a common stage: a min-cost matching of
/// flattened strings, pair cost |v - v'|_1 + symdiff(J, J') when the M
/// labels agree (forbidden otherwise), unmatched cost = piece length.
/// Configs over plain labels are treated as carrying [-1,1] strings.
/// Exhaustive below 7 strings, assignment solver beyond.
std::pair<Rat, MatchReport> config_distance(const LabeledConfig& a, const LabeledConfig& b);

struct CertifyReport {
  bool endpoint0_exact = false;
  bool endpoint1_exact = false;
  Rat max_step_ratio = 0;  // max over grid steps of d(F(t_i), F(t_{i+1})) / (1/N)
  bool lipschitz_ok = false;
  bool audit_ok = true;  // short interval components must be non-closed
  bool collision = false;
  long samples = 0;
  Rat bound = 0;

  bool pass() const {
    return endpoint0_exact && endpoint1_exact && lipschitz_ok && audit_ok && !collision;
  }
};

/// Sample the path on the uniform grid with N steps: exact endpoint
/// comparison, stepwise distance ratio against the bound L, and the
/// vanishing-legality audit (a component of length < 1/N at a sample must
/// be non-closed on at least one end).
CertifyReport certify_continuity(const PathSpec& spec, int samples, const Rat& bound);

/// Projections to the two wedge summands: particles labeled in the other
/// summand are erased, surviving labels are re-indexed into the factor.
std::pair<StringConfig, StringConfig> c3_pair(const StringConfig& t, const WedgeParts& parts,
                                              MonoidPtr left_monoid, MonoidPtr right_monoid);

/// Hopf product of the two inclusions; output over the wedge on the
/// doubled stage.
StringConfig c3_merge(const StringConfig& u, const StringConfig& v, const WedgeParts& parts,
                      const IsometryGadget& gadget, MonoidPtr wedge_monoid);

/// Assemble a coset-indexed family of configs over X ^ M into one config
/// over (G/H+ ^ X) ^ M: the c-th member is embedded along l(coset_vec(c), .)
/// and its labels are tagged with the coset.
StringConfig c4_rho(const std::vector<StringConfig>& f, const std::vector<std::vector<int>>& cosets,
                    const SmashParts& coset_smash_x, const IsometryGadget& gadget,
                    MonoidPtr out_monoid);

/// Evaluate the canonical pairing of a c4_rho image at one coset: the label
/// multiset of that coset's part, rewritten over X ^ M.
std::vector<Elem> c4_eval(const StringConfig& assembled, int coset_index,
                          const SmashParts& coset_smash_x);

/// The equivariant embedding G/H -> V sending a coset to the sum of its
/// members' basis vectors in the first copy.
QVec coset_vector(const UniverseStage& stage, const std::vector<int>& coset);

}  // namespace strand
