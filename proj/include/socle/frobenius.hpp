#pragma once

#include <chrono>
#include <future>
#include <string>
#include <vector>

#include "socle/canonical.hpp"

namespace socle {

/// Generators of (a^[q] : a) / a^[q], which computes Hom_R(F^e_* R, R).
template <class K>
struct FedderReport {
  int e = 0;
  long long q = 1;
  Ideal<K> colon;
  std::vector<int> generatorDegrees;  // D_{ej}, sorted

  int mu() const { return static_cast<int>(generatorDegrees.size()); }
};

inline long long characteristicPower(std::uint64_t p, int e) {
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<long long>(p);
    if (q > 0xFFFF) throw DomainError("Frobenius power q = p^e is too large");
  }
  return q;
}

template <class K>
FedderReport<K> fedderModule(const RingPresentation<K>& r, int e) {
  const auto p = r.field().characteristic();
  if (p == 0) throw DomainError("Fedder modules need positive characteristic");
  if (e < 0) throw DomainError("Frobenius exponent must be non-negative");
  FedderReport<K> out;
  out.e = e;
  out.q = characteristicPower(p, e);
  const auto& ring = r.polyRing();
  const Ideal<K>& a = r.relations();
  Ideal<K> aq = a.isZero() ? a : frobeniusPower(a, static_cast<int>(out.q));
  out.colon = idealColon(aq, a);
  std::vector<TermVec<K>> gens, seed;
  for (const auto& g : out.colon.generators()) gens.push_back(g.terms());
  for (const auto& g : aq.generators()) seed.push_back(g.terms());
  for (const auto& v : minimalGeneratorsModulo(ring->field(), ring->termOrder(), std::move(gens), seed))
    out.generatorDegrees.push_back(ring->termOrder().degree(v.front().m));
  std::sort(out.generatorDegrees.begin(), out.generatorDegrees.end());
  return out;
}

/// α_{ej} = (D_{ej} - n(q-1)) / q: generator degrees of Hom(F^e_* R, R) in the 1/q-grading.
template <class K>
std::vector<Fraction> cartierDegrees(const FedderReport<K>& report, int n) {
  std::vector<Fraction> out;
  for (int d : report.generatorDegrees) out.emplace_back(d - n * (report.q - 1), report.q);
  return out;
}

/// The ideal generated by the q-th powers of the given generators, as an R-module.
template <class K>
ModulePresentation<K> frobeniusIdealModule(const RingPresentation<K>& r, const std::vector<Polynomial<K>>& w,
                                           long long q) {
  std::vector<Polynomial<K>> gens;
  for (const auto& f : w) gens.push_back(frobenius(f, static_cast<int>(q)));
  return idealModule(r, gens);
}

/// beg Soc H^d_m(w^[q]), d = dim R.
template <class K>
Degree canonicalFrobeniusSocle(const RingPresentation<K>& r, const std::vector<Polynomial<K>>& w, int e) {
  const auto p = r.field().characteristic();
  if (p == 0) throw DomainError("Frobenius powers need positive characteristic");
  return socleBegin(r.dimension(), frobeniusIdealModule(r, w, characteristicPower(p, e)));
}

/// beg Soc H^d_m(w^q) for the ordinary power.
template <class K>
Degree canonicalPowerSocle(const RingPresentation<K>& r, const std::vector<Polynomial<K>>& w, int q) {
  Ideal<K> wq = idealPower(Ideal<K>(r.polyRing(), w), q);
  return socleBegin(r.dimension(), idealModule(r, wq.generators()));
}

/// Both sides of beg Soc H^d(w^[q]) = q * (-max_j (α_{ej} - a)).
struct FrobeniusSocleIdentity {
  Degree lhs = 0;
  Degree rhs = 0;
  bool holds = false;
};

template <class K>
FrobeniusSocleIdentity frobeniusSocleIdentity(const RingPresentation<K>& r, const CanonicalData<K>& omega,
                                              const FedderReport<K>& fedder) {
  FrobeniusSocleIdentity out;
  out.lhs = canonicalFrobeniusSocle(r, omega.ideal, fedder.e);
  const int n = r.nvars();
  // q * (-(max α - a)) = -(max D - n(q-1)) + q a, an integer
  const long long maxD = fedder.generatorDegrees.back();
  out.rhs = static_cast<Degree>(-(maxD - n * (fedder.q - 1)) + fedder.q * omega.shift);
  out.holds = out.lhs == out.rhs;
  return out;
}

struct GaugeRecord {
  int e = 0;
  long long q = 1;
  std::vector<int> generatorDegrees;
  std::vector<Fraction> alphas;
  Fraction maxAlpha;
  Degree socleBeginCanonical = 0;
  Degree identityRhs = 0;
  bool identityHolds = false;
  double elapsedMs = 0;
};

struct GaugeScan {
  std::vector<GaugeRecord> records;
  bool consistent = false;
  std::string verdict;
  Fraction socleWitness;  // max_e (-socleBeginCanonical / q)
};

template <class K>
GaugeRecord gaugeRecord(const RingPresentation<K>& r, const CanonicalData<K>& omega, int e) {
  auto start = std::chrono::steady_clock::now();
  auto fedder = fedderModule(r, e);
  GaugeRecord rec;
  rec.e = e;
  rec.q = fedder.q;
  rec.generatorDegrees = fedder.generatorDegrees;
  rec.alphas = cartierDegrees(fedder, r.nvars());
  rec.maxAlpha = *std::max_element(rec.alphas.begin(), rec.alphas.end());
  auto id = frobeniusSocleIdentity(r, omega, fedder);
  rec.socleBeginCanonical = id.lhs;
  rec.identityRhs = id.rhs;
  rec.identityHolds = id.holds;
  rec.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Records for e = 1..eMax (computed concurrently, returned in order of e) and a verdict.
/// A finite scan cannot prove boundedness; the verdict only says whether the data contradict it:
/// the sequence of max α is contradicted when its last value sets a new strict maximum.
template <class K>
GaugeScan gaugeScan(const RingPresentation<K>& r, int eMax, const CanonicalData<K>& omega) {
  if (eMax < 1) throw DomainError("eMax must be at least 1");
  if (r.field().characteristic() == 0) throw DomainError("gauge scans need positive characteristic");
  std::vector<std::future<GaugeRecord>> jobs;
  for (int e = 1; e <= eMax; ++e)
    jobs.push_back(std::async(std::launch::async, [&r, &omega, e] { return gaugeRecord(r, omega, e); }));
  GaugeScan out;
  for (auto& j : jobs) out.records.push_back(j.get());
  Fraction best = out.records.front().maxAlpha;
  for (std::size_t i = 1; i + 1 < out.records.size(); ++i) best = std::max(best, out.records[i].maxAlpha);
  out.consistent = out.records.size() == 1 || out.records.back().maxAlpha <= best;
  bool first = true;
  for (const auto& rec : out.records) {
    if (!isFinite(rec.socleBeginCanonical)) continue;
    Fraction v(-static_cast<long long>(rec.socleBeginCanonical), rec.q);
    if (first || v > out.socleWitness) out.socleWitness = v;
    first = false;
  }
  out.verdict = out.consistent
                    ? "consistent with gauge-bounded (measured on e <= " + std::to_string(eMax) +
                          "; a finite scan cannot establish boundedness)"
                    : "not consistent with gauge-bounded on the scanned range (max alpha still increasing at e = " +
                          std::to_string(eMax) + ")";
  return out;
}

template <class K>
GaugeScan gaugeScan(const RingPresentation<K>& r, int eMax) {
  return gaugeScan(r, eMax, canonicalIdeal(r));
}

}  // namespace socle
