#pragma once

#include "strand/presentation.hpp"
#include "strand/strings.hpp"

namespace strand {

/// Class of a string config in the completed group: each string contributes
/// the image of its label weighted by the signed component count of its
/// interval set (+1 closed, -1 open, 0 half-open), so the mirror of a
/// config represents the inverse class.
std::vector<Int> string_class(const GrothendieckResult& k, const MonoidPresentation& pres,
                              const StringConfig& sc);

struct Pi0CheckReport {
  bool inverse_ok = true;      // [x] + [tau x] = 0
  bool hopf_ok = true;         // [hopf(x,y)] = [x] + [y]
  bool certificate_ok = true;  // class constant along the inverse certificate
  bool plus_in_monoid_image = true;  // all-closed configs need no negatives
  long corpus_size = 0;
  std::vector<std::string> failures;

  bool pass() const { return inverse_ok && hopf_ok && certificate_ok && plus_in_monoid_image; }
};

/// The pi0 shadow of the group completion statement on a corpus of string
/// configs over a finite label monoid.
Pi0CheckReport strings_pi0_check(const PartialMonoid& m, const std::vector<StringConfig>& corpus,
                                 const IsometryGadget& gadget, int arity_bound = 4,
                                 int certificate_samples = 16);

}  // namespace strand
