#pragma once

#include <chrono>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socle/frobenius.hpp"

namespace socle::lab {

namespace detail {

class Stopwatch {
 public:
  double elapsedMs() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs f(t) for t = 1..count concurrently and returns the results in order of t.
template <class F>
auto runOrdered(int count, F f) {
  using R = decltype(f(1));
  std::vector<std::future<R>> jobs;
  for (int t = 1; t <= count; ++t) jobs.push_back(std::async(std::launch::async, f, t));
  std::vector<R> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline void keepMax(std::optional<Fraction>& acc, Fraction v) {
  if (!acc || v > *acc) acc = v;
}

}  // namespace detail

/// R/I^t regarded over R.
template <class K>
ModulePresentation<K> quotientByPower(const RingPresentation<K>& r, const Ideal<K>& i, int t) {
  return ModulePresentation<K>::quotient(r.lift(idealPower(i, t)), r.relations());
}

/// Checks end and socle start of H^j_m(M) against the Koszul limit; throws on disagreement.
template <class K>
void verifyWithOracle(const ModulePresentation<K>& m, int j, Degree end, Degree socBeg) {
  KoszulOracle<K> oracle(m);
  auto fail = [&](const std::string& what) {
    throw InternalConsistencyError("duality and Koszul limit disagree for H^" + std::to_string(j) + ": " + what);
  };
  if (!isFinite(end)) {
    for (int l = -3; l <= 3; ++l)
      if (oracle.dimension(j, l).require() != 0) fail("nonzero piece in degree " + std::to_string(l));
    return;
  }
  if (oracle.dimension(j, end).require() == 0) fail("empty top degree");
  if (oracle.dimension(j, end + 1).require() != 0) fail("piece above the end");
  if (oracle.socle(j, socBeg).require() == 0) fail("no socle at its start");
  if (oracle.socle(j, socBeg - 1).require() != 0) fail("socle below its start");
}

struct PowerRow {
  int t = 0;
  int j = 0;
  Degree lcEnd = kMinusInfinity;
  Degree socleBeg = kPlusInfinity;
  bool oracleChecked = false;
  double elapsedMs = 0;
};

struct PowerScan {
  std::vector<PowerRow> rows;
  std::map<int, Fraction> socleWitness;  // c_j = max_t (-socleBeg / t), measured
  std::map<int, Fraction> endSlope;      // max_t (lcEnd / t), measured
};

/// For t = 1..tMax and each j <= dim R/I^t: end and socle start of H^j_m(R/I^t).
template <class K>
PowerScan scanPowers(const RingPresentation<K>& r, const Ideal<K>& ideal, int tMax, bool oracle = false) {
  if (tMax < 1) throw DomainError("tMax must be at least 1");
  auto blocks = detail::runOrdered(tMax, [&](int t) {
    detail::Stopwatch clock;
    auto m = quotientByPower(r, ideal, t);
    auto rep = socleReport(m);
    std::vector<PowerRow> rows;
    for (const auto& e : rep.entries) {
      if (oracle) verifyWithOracle(m, e.j, e.lcEnd, e.socleBeg);
      rows.push_back({t, e.j, e.lcEnd, e.socleBeg, oracle, 0});
    }
    double ms = clock.elapsedMs();
    for (auto& row : rows) row.elapsedMs = ms;
    return rows;
  });
  PowerScan out;
  std::map<int, std::optional<Fraction>> wit, slope;
  for (auto& block : blocks)
    for (auto& row : block) {
      if (isFinite(row.socleBeg)) detail::keepMax(wit[row.j], Fraction(-static_cast<long long>(row.socleBeg), row.t));
      if (isFinite(row.lcEnd)) detail::keepMax(slope[row.j], Fraction(row.lcEnd, row.t));
      out.rows.push_back(row);
    }
  for (auto& [j, v] : wit)
    if (v) out.socleWitness[j] = *v;
  for (auto& [j, v] : slope)
    if (v) out.endSlope[j] = *v;
  return out;
}

struct ExtKEntry {
  int i = 0;
  int j = 0;
  Degree value = kPlusInfinity;
};

struct CriterionRow {
  int t = 0;
  int d = 0;
  std::vector<ExtKEntry> extK;     // i <= d+1, j < d
  std::optional<Fraction> cPrime;  // max of -extKBegin/t over finite entries
  Degree alphaD = kMinusInfinity;
  Degree bound = kMinusInfinity;   // min(-c' t, -alpha_d)
  Degree socleBeg = kPlusInfinity;
  bool pass = false;
  bool vacuous = false;            // d = 0: no lower cohomology enters the bound
  double elapsedMs = 0;
};

/// For each t: the lower bound min(-c' t, -alpha_d) for beg Soc H^d_m(R/I^t) and whether it holds.
template <class K>
std::vector<CriterionRow> criterionCheck(const RingPresentation<K>& r, const Ideal<K>& ideal, int tMax) {
  if (tMax < 1) throw DomainError("tMax must be at least 1");
  return detail::runOrdered(tMax, [&](int t) {
    detail::Stopwatch clock;
    CriterionRow row;
    row.t = t;
    auto m = quotientByPower(r, ideal, t);
    row.d = moduleDimension(m);
    if (row.d < 0) throw DomainError("R/I^t is zero for t = " + std::to_string(t));
    auto res = minimalFreeResolution(m);
    Degree bound = kPlusInfinity;
    for (int j = 0; j < row.d; ++j) {
      auto begins = extKBegins(r, j, res, row.d + 1);
      for (int i = 0; i <= row.d + 1; ++i) {
        row.extK.push_back({i, j, begins[i]});
        if (!isFinite(begins[i])) continue;
        bound = std::min(bound, begins[i]);
        detail::keepMax(row.cPrime, Fraction(-static_cast<long long>(begins[i]), t));
      }
    }
    row.alphaD = alphaMax(r, row.d);
    bound = std::min(bound, negateDegree(row.alphaD));
    row.bound = bound;
    row.socleBeg = socleEntryFromDual(row.d, extDual(r.nvars() - row.d, res, r.polyRing()).generatorTwists()).socleBeg;
    row.pass = row.socleBeg >= row.bound;
    row.vacuous = row.d == 0;
    row.elapsedMs = clock.elapsedMs();
    return row;
  });
}

struct Lemma37Row {
  int t = 0;
  Degree quotientSocle = kPlusInfinity;  // beg Soc H^{d-1}_m(R/I^t)
  Degree idealSocle = kPlusInfinity;     // beg Soc H^d_m(I^t)
  double elapsedMs = 0;

  std::optional<long long> difference() const {
    if (!isFinite(quotientSocle) || !isFinite(idealSocle)) return std::nullopt;
    return static_cast<long long>(quotientSocle) - idealSocle;
  }
};

struct Lemma37Report {
  int d = 0;
  std::vector<Lemma37Row> rows;
  std::optional<Fraction> quotientWitness;  // max_t (-beg/t), measured
  std::optional<Fraction> idealWitness;
  std::string verdict;
};

/// The sequences beg Soc H^{d-1}(R/I^t) and beg Soc H^d(I^t), d = dim R, side by side.
/// Requires H^{d-1}_m(R) of finite length.
template <class K>
Lemma37Report lemma37Check(const RingPresentation<K>& r, const Ideal<K>& ideal, int tMax) {
  if (tMax < 1) throw DomainError("tMax must be at least 1");
  Lemma37Report out;
  out.d = r.dimension();
  if (out.d < 1) throw HypothesisRefused("dim R = " + std::to_string(out.d) + "; the comparison needs dim R >= 1");
  auto dual = extDual(r.nvars() - out.d + 1, ModulePresentation<K>::ofRing(r));
  if (moduleDimension(dual) > 0)
    throw HypothesisRefused("H^" + std::to_string(out.d - 1) +
                            "_m(R) is not finitely generated: its Matlis dual has dimension " +
                            std::to_string(moduleDimension(dual)));
  out.rows = detail::runOrdered(tMax, [&](int t) {
    detail::Stopwatch clock;
    Lemma37Row row;
    row.t = t;
    Ideal<K> it = idealPower(ideal, t);
    row.quotientSocle = socleBegin(out.d - 1, quotientByPower(r, ideal, t));
    row.idealSocle = socleBegin(out.d, idealModule(r, it.generators()));
    row.elapsedMs = clock.elapsedMs();
    return row;
  });
  for (const auto& row : out.rows) {
    if (isFinite(row.quotientSocle))
      detail::keepMax(out.quotientWitness, Fraction(-static_cast<long long>(row.quotientSocle), row.t));
    if (isFinite(row.idealSocle))
      detail::keepMax(out.idealWitness, Fraction(-static_cast<long long>(row.idealSocle), row.t));
  }
  out.verdict = "both sequences bounded below by -c t with the measured constants on t <= " +
                std::to_string(tMax) + " (finite range; not a proof of linearity)";
  return out;
}

}  // namespace socle::lab
