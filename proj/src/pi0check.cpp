#include "strand/pi0check.hpp"

namespace strand {

std::vector<Int> string_class(const GrothendieckResult& k, const MonoidPresentation& pres,
                              const StringConfig& sc) {
  std::vector<Int> combination(pres.generators.size(), Int(0));
  for (const auto& p : sc.particles()) {
    if (p.label.kind() != Elem::Kind::smash || p.label.is_base_pair() ||
        p.label.smash_first().kind() != Elem::Kind::ivset)
      throw std::invalid_argument("expected an interval-labeled particle");
    Int weight = chi(p.label.smash_first().as_ivset());
    if (weight == 0) continue;
    combination[pres.generator_index(p.label.smash_second())] += weight;
  }
  return k.class_of(combination);
}

Pi0CheckReport strings_pi0_check(const PartialMonoid& m, const std::vector<StringConfig>& corpus,
                                 const IsometryGadget& gadget, int arity_bound,
                                 int certificate_samples) {
  MonoidPresentation pres = pi0_presentation(m, arity_bound);
  GrothendieckResult k = grothendieck_group(pres);
  Pi0CheckReport rep;
  rep.corpus_size = static_cast<long>(corpus.size());

  auto note = [&](const std::string& s) {
    if (rep.failures.size() < 16) rep.failures.push_back(s);
  };

  for (size_t i = 0; i < corpus.size(); ++i) {
    const StringConfig& x = corpus[i];
    auto cx = string_class(k, pres, x);
    auto cmirror = string_class(k, pres, tau_inv(x));
    if (!k.is_zero(k.add(cx, cmirror))) {
      rep.inverse_ok = false;
      note("inverse class of corpus item " + std::to_string(i));
    }
    if (is_plus(x)) {
      // classes of all-closed configs are plain sums of generator images
      std::vector<Int> expect = k.zero_class();
      for (const auto& p : x.particles()) {
        Int weight = chi(p.label.smash_first().as_ivset());
        const auto& image = k.generator_images[pres.generator_index(p.label.smash_second())];
        for (Int w = 0; w < weight; ++w) expect = k.add(expect, image);
      }
      if (!(expect == cx)) {
        rep.plus_in_monoid_image = false;
        note("plus class mismatch at corpus item " + std::to_string(i));
      }
    }
    PathSpec cert = grouplike_certificate(x, gadget);
    auto base_class = string_class(k, pres, cert.eval(0));
    if (!k.is_zero(base_class)) {
      rep.certificate_ok = false;
      note("certificate start class nonzero at item " + std::to_string(i));
    }
    for (int s = 0; s <= certificate_samples; ++s) {
      auto c = string_class(k, pres, cert.eval(Rat(s, certificate_samples)));
      if (!(c == base_class)) {
        rep.certificate_ok = false;
        note("certificate class drifts at item " + std::to_string(i));
        break;
      }
    }
  }

  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = 0; j < corpus.size(); ++j) {
      auto ci = string_class(k, pres, corpus[i]);
      auto cj = string_class(k, pres, corpus[j]);
      auto cprod = string_class(k, pres, hopf_mul(corpus[i], corpus[j], gadget));
      if (!(cprod == k.add(ci, cj))) {
        rep.hopf_ok = false;
        note("hopf additivity fails at pair " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  return rep;
}

}  // namespace strand
