#include "strand/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace strand {

int MonoidPresentation::generator_index(const Elem& e) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), e);
  if (it == generators.end() || !(*it == e))
    throw std::invalid_argument("not a generator: " + e.to_string());
  return static_cast<int>(it - generators.begin());
}

MonoidPresentation pi0_presentation(const PartialMonoid& m, int arity_bound) {
  if (arity_bound < 2) throw std::invalid_argument("arity bound must be at least 2");
  auto carrier = m.carrier();
  if (!carrier) throw std::invalid_argument("presentation requires a finite carrier");

  MonoidPresentation pres;
  pres.arity_bound = arity_bound;
  for (const auto& e : *carrier)
    if (!m.is_zero(e)) pres.generators.push_back(e);
  std::sort(pres.generators.begin(), pres.generators.end());
  const int n = static_cast<int>(pres.generators.size());

  std::set<std::vector<Int>> seen;
  // Multisets suffice: summability is permutation invariant by partition
  // coherence, which check_axioms validates separately.
  std::vector<int> pick;
  auto emit = [&]() {
    std::vector<Elem> tuple;
    for (int i : pick) tuple.push_back(pres.generators[i]);
    SumOutcome o = m.sum(tuple);
    if (o.status == SumOutcome::Status::budget_exceeded)
      throw std::runtime_error("presentation scan exceeded a smash search budget");
    if (!o.is_defined()) return;
    std::vector<Int> rel(n, Int(0));
    for (int i : pick) rel[i] += 1;
    if (!m.is_zero(*o.value)) rel[pres.generator_index(*o.value)] -= 1;
    bool zero = std::all_of(rel.begin(), rel.end(), [](const Int& x) { return x == 0; });
    if (!zero && seen.insert(rel).second) pres.relations.push_back(rel);
  };
  auto recurse = [&](auto&& self, int first, int remaining) -> void {
    if (remaining == 0) {
      if (pick.size() >= 2) emit();
      return;
    }
    for (int i = first; i < n; ++i) {
      pick.push_back(i);
      self(self, i, remaining - 1);
      pick.pop_back();
    }
  };
  for (int arity = 2; arity <= arity_bound; ++arity) recurse(recurse, 0, arity);
  return pres;
}

GrothendieckResult grothendieck_group(const MonoidPresentation& pres) {
  const size_t n = pres.generators.size();
  IntMatrix a(n, pres.relations.size());  // columns are relation vectors
  for (size_t c = 0; c < pres.relations.size(); ++c)
    for (size_t r = 0; r < n; ++r) a.at(r, c) = pres.relations[c][r];
  SmithResult s = smith_normal_form(a);

  GrothendieckResult out;
  out.basis_change = s.u;
  out.all_factors.assign(n, Int(0));
  auto diag = s.diagonal();
  for (size_t i = 0; i < diag.size(); ++i) out.all_factors[i] = diag[i];
  for (const Int& d : out.all_factors) {
    if (d >= 2) out.group.torsion.push_back(d);
    if (d == 0) ++out.group.rank;
  }
  for (size_t j = 0; j < n; ++j) {
    std::vector<Int> gen(n, Int(0));
    gen[j] = 1;
    out.generator_images.push_back(out.class_of(gen));
  }
  return out;
}

std::vector<Int> GrothendieckResult::class_of(const std::vector<Int>& combination) const {
  const size_t n = all_factors.size();
  if (combination.size() != n) throw std::invalid_argument("combination dimension mismatch");
  std::vector<Int> raw(n, Int(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) raw[i] += basis_change.at(i, j) * combination[j];
  std::vector<Int> coords;
  for (size_t i = 0; i < n; ++i) {
    if (all_factors[i] == 1) continue;  // killed coordinate
    if (all_factors[i] == 0) {
      coords.push_back(raw[i]);  // free coordinate
    } else {
      Int c = raw[i] % all_factors[i];
      if (c < 0) c += all_factors[i];
      coords.push_back(c);
    }
  }
  return coords;
}

std::vector<Int> GrothendieckResult::zero_class() const {
  return std::vector<Int>(group.torsion.size() + group.rank, Int(0));
}

namespace {

std::vector<Int> moduli_of(const GrothendieckResult& g) {
  // coordinate order produced by class_of: factors != 1 in diagonal order
  std::vector<Int> out;
  for (const Int& d : g.all_factors)
    if (d != 1) out.push_back(d);
  return out;
}

}  // namespace

std::vector<Int> GrothendieckResult::add(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const {
  auto mods = moduli_of(*this);
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
    if (mods[i] != 0) {
      out[i] %= mods[i];
      if (out[i] < 0) out[i] += mods[i];
    }
  }
  return out;
}

std::vector<Int> GrothendieckResult::negate(const std::vector<Int>& a) const {
  auto mods = moduli_of(*this);
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = -a[i];
    if (mods[i] != 0) {
      out[i] %= mods[i];
      if (out[i] < 0) out[i] += mods[i];
    }
  }
  return out;
}

bool GrothendieckResult::is_zero(const std::vector<Int>& a) const {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

}  // namespace strand
