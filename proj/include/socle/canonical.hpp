#pragma once

#include <random>
#include <string>
#include <vector>

#include "socle/local_cohomology.hpp"

namespace socle {

/// ω_R = Ext_S^{n-d}(R, S(-n)), presented minimally over R.
template <class K>
ModulePresentation<K> canonicalModule(const RingPresentation<K>& r) {
  const int d = r.dimension();
  if (d < 0) throw DomainError("the zero ring has no canonical module");
  auto omega = extDual(r.nvars() - d, ModulePresentation<K>::ofRing(r));
  return prune(omega.overRing(r.relations()));
}

/// A homogeneous ideal ω ⊆ R with ω(a) ≅ ω_R.
template <class K>
struct CanonicalData {
  ModulePresentation<K> module;     // ω_R
  std::vector<Polynomial<K>> ideal;  // generators of ω in S (taken modulo the relations)
  int shift = 0;                     // a
  Degree aInvariant = 0;             // a(R) = end H^d_m(R)
  int attempts = 0;                  // homomorphisms tried before an injective one
  bool variablesAreNonZeroDivisors = false;
};

namespace detail {

template <class K>
bool isInjective(const ModulePresentation<K>& omega, int shift, const ModulePresentation<K>& r,
                 const std::vector<TermVec<K>>& images) {
  std::vector<int> twists = omega.generatorTwists();
  for (auto& t : twists) t += shift;
  ModulePresentation<K> shifted(omega.ring(), twists, omega.relations(), omega.base());
  auto ki = moduleKernelImage(shifted, r, images);
  return isZeroModule(ki.kernel.module);
}

}  // namespace detail

/// Searches Hom_R(ω_R, R) for an injective homogeneous map: each minimal generator
/// in increasing degree first, then seeded random combinations within a degree.
template <class K>
CanonicalData<K> canonicalIdeal(const RingPresentation<K>& r, int randomBudget = 32,
                                std::uint32_t seed = 0x5eed) {
  const auto& ring = r.polyRing();
  const K& k = ring->field();
  CanonicalData<K> out;
  out.module = canonicalModule(r);
  const auto& b = out.module.generatorTwists();
  out.aInvariant = -*std::min_element(b.begin(), b.end());
  auto rMod = ModulePresentation<K>::ofRing(r);
  auto hom = moduleHom(out.module, rMod);
  const int p0 = out.module.rank();

  std::map<int, std::vector<int>> byDegree;
  TermOrder homOrd = ring->moduleOrder(hom.ambientTwists);
  for (std::size_t g = 0; g < hom.generators.size(); ++g)
    byDegree[hom.module.generatorTwists()[g]].push_back(static_cast<int>(g));

  auto imagesOf = [&](const TermVec<K>& phi) {
    std::vector<TermVec<K>> imgs(p0);
    for (int i = 0; i < p0; ++i) imgs[i] = poly::resort(ring->termOrder(), poly::component(phi, i));
    return imgs;
  };
  auto accept = [&](const TermVec<K>& phi, int delta) {
    ++out.attempts;
    auto imgs = imagesOf(phi);
    if (!detail::isInjective(out.module, delta, rMod, imgs)) return false;
    out.shift = delta;
    for (auto& v : imgs) {
      auto red = r.relations().isZero() ? v : normalForm(Polynomial<K>(ring, v), r.relations().groebnerBasis()).terms();
      if (!red.empty()) out.ideal.push_back(Polynomial<K>(ring, std::move(red)));
    }
    return true;
  };

  std::mt19937 rng(seed);
  int budget = randomBudget;
  bool found = false;
  for (const auto& [delta, gens] : byDegree) {
    for (int g : gens)
      if ((found = accept(hom.generators[g], delta))) break;
    if (found) break;
    for (int tries = 0; tries < budget && gens.size() > 1; ++tries, --budget) {
      TermVec<K> phi;
      for (int g : gens)
        phi = poly::add(k, homOrd, phi, poly::scale(k, hom.generators[g], k.fromInt(1 + rng() % 1000)));
      if (phi.empty()) continue;
      if ((found = accept(phi, delta))) break;
    }
    if (found) break;
  }
  if (!found)
    throw NoEmbeddingFound("no injective homomorphism from the canonical module into R was found after " +
                           std::to_string(out.attempts) + " attempts");

  Degree beg = kPlusInfinity;
  for (const auto& f : out.ideal) beg = std::min(beg, f.degree());
  if (out.shift != beg + out.aInvariant)
    throw InternalConsistencyError("embedding shift " + std::to_string(out.shift) +
                                   " differs from beg(ω) + a(R) = " + std::to_string(beg + out.aInvariant));
  out.variablesAreNonZeroDivisors = true;
  for (int v = 0; v < r.nvars() && !r.relations().isZero(); ++v) {
    auto colon = idealColon(r.relations(), Ideal<K>(ring, {Polynomial<K>::variable(ring, v)}));
    if (!sameIdeal(colon, r.relations())) out.variablesAreNonZeroDivisors = false;
  }
  return out;
}

/// The ideal (w + a)/a of R as an R-module.
template <class K>
ModulePresentation<K> idealModule(const RingPresentation<K>& r, const std::vector<Polynomial<K>>& gens) {
  std::vector<TermVec<K>> kv, av;
  for (const auto& g : gens) kv.push_back(g.terms());
  for (const auto& g : r.relations().generators()) av.push_back(g.terms());
  return subquotient(r.polyRing(), {0}, std::move(kv), av, r.relations()).module;
}

/// Evidence that R -> Hom_R(w, w) is an isomorphism: Hom is cyclic, generated in degree 0,
/// with the Hilbert function of R on the degrees checked.
struct EndomorphismCertificate {
  bool holds = false;
  std::vector<int> generatorDegrees;
  int checkedUpTo = 0;
  std::string reason;
};

template <class K>
EndomorphismCertificate endomorphismCheck(const RingPresentation<K>& r, const std::vector<Polynomial<K>>& w,
                                          int window = 6) {
  EndomorphismCertificate out;
  auto wm = idealModule(r, w);
  auto hom = moduleHom(wm, wm);
  out.generatorDegrees = minimalGeneratorDegrees(hom.module);
  out.checkedUpTo = window;
  if (out.generatorDegrees != std::vector<int>{0}) {
    out.reason = "Hom(w, w) is not cyclic in degree 0";
    return out;
  }
  auto rMod = ModulePresentation<K>::ofRing(r);
  for (int d = 0; d <= window; ++d)
    if (moduleHilbertFunction(hom.module, d) != moduleHilbertFunction(rMod, d)) {
      out.reason = "Hilbert functions differ in degree " + std::to_string(d);
      return out;
    }
  out.holds = true;
  return out;
}

}  // namespace socle
