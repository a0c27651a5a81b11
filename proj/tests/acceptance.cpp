// Runs the acceptance checks and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "socle/lab/scan.hpp"
#include "socle/parse.hpp"

using namespace socle;

namespace {

using K = PrimeField;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

RingPtr<K> gf(std::uint32_t p, std::vector<std::string> names) { return makeRing(PrimeField(p), std::move(names)); }

Polynomial<K> P(const RingPtr<K>& r, const std::string& s) { return parsePolynomial(r, s); }

Ideal<K> I(const RingPtr<K>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<K>> v;
  for (auto g : gens) v.push_back(P(r, g));
  return Ideal<K>(r, std::move(v));
}

RingPresentation<K> ring(std::uint32_t p, std::vector<std::string> names, std::initializer_list<const char*> rels) {
  auto s = gf(p, std::move(names));
  std::vector<Polynomial<K>> v;
  for (auto g : rels) v.push_back(P(s, g));
  return RingPresentation<K>(s, std::move(v));
}

RingPresentation<K> twistedCubic(std::uint32_t p) {
  return ring(p, {"a", "b", "c", "d"}, {"a*c-b^2", "a*d-b*c", "b*d-c^2"});
}

RingPresentation<K> polynomialRing(std::uint32_t p, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return RingPresentation<K>(gf(p, names));
}

struct NamedModule {
  std::string name;
  ModulePresentation<K> module;
};

std::vector<NamedModule> corpus() {
  std::vector<NamedModule> out;
  auto s = gf(101, {"x", "y"});
  for (int t = 1; t <= 3; ++t)
    out.push_back({"S/m^" + std::to_string(t), ModulePresentation<K>::quotient(idealPower(I(s, {"x", "y"}), t))});
  out.push_back({"S/(xy)", ModulePresentation<K>::quotient(I(s, {"x*y"}))});
  for (int t = 1; t <= 3; ++t)
    out.push_back({"S/(x^" + std::to_string(t) + ")",
                   ModulePresentation<K>::quotient(Ideal<K>(s, {P(s, "x^" + std::to_string(t))}))});
  out.push_back({"twisted cubic", ModulePresentation<K>::ofRing(twistedCubic(101))});
  for (int n = 2; n <= 3; ++n)
    out.push_back({"S, n=" + std::to_string(n), ModulePresentation<K>::ofRing(polynomialRing(101, n))});
  return out;
}

constexpr int kWindowLo = -6;
constexpr int kWindowHi = 6;

bool inWindow(Degree d) { return d >= kWindowLo && d <= kWindowHi; }

// Max nonzero degree, min socle degree and total socle dimension of H^j from the Koszul limit.
struct OracleScan {
  Degree end = kMinusInfinity;
  Degree socleBeg = kPlusInfinity;
  long long socleDim = 0;
};

OracleScan scanOracle(KoszulOracle<K>& oracle, int j) {
  OracleScan out;
  for (int l = kWindowLo; l <= kWindowHi; ++l) {
    if (oracle.dimension(j, l).require() > 0) out.end = std::max<Degree>(out.end, l);
    long long s = oracle.socle(j, l).require();
    if (s > 0) out.socleBeg = std::min<Degree>(out.socleBeg, l);
    out.socleDim += s;
  }
  return out;
}

Outcome criterionDualityOracle() {
  Outcome o;
  int compared = 0;
  for (const auto& [name, m] : corpus()) {
    auto rep = socleReport(m);
    KoszulOracle<K> oracle(m);
    for (const auto& e : rep.entries) {
      if (isFinite(e.lcEnd) && (!inWindow(e.lcEnd) || !inWindow(e.socleBeg))) {
        o.fail(name + " H^" + std::to_string(e.j) + " outside the oracle window");
        continue;
      }
      auto scan = scanOracle(oracle, e.j);
      if (scan.end != e.lcEnd || scan.socleBeg != e.socleBeg)
        o.fail(name + " H^" + std::to_string(e.j) + ": duality (" + degreeToString(e.lcEnd) + ", " +
               degreeToString(e.socleBeg) + ") vs oracle (" + degreeToString(scan.end) + ", " +
               degreeToString(scan.socleBeg) + ")");
      ++compared;
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " cohomology modules on 10 inputs agree";
  return o;
}

// Socle dimension of (k[x,y]/m^N)_d by direct linear algebra on monomials.
long long bruteForceSocle(const K& k, int N, int d) {
  if (d < 0 || d >= N) return 0;
  const int rows = 2 * (d + 2);
  const int cols = d + 1;
  DenseMatrix<K> mult(k, rows, cols);
  // basis x^a y^(d-a); multiplication by x and by y lands in degree d+1, zero when d+1 >= N
  if (d + 1 < N) {
    for (int a = 0; a <= d; ++a) {
      mult.at(a + 1, a) = k.one();
      mult.at(d + 2 + a, a) = k.one();
    }
  }
  return cols - mult.rank();
}

Outcome criterionTruncation() {
  Outcome o;
  auto s = gf(101, {"x", "y"});
  for (int t = 1; t <= 5; ++t) {
    const int N = 2 * t;
    auto m = ModulePresentation<K>::quotient(idealPower(I(s, {"x", "y"}), N));
    Degree got = socleBegin(0, m);
    Degree brute = kPlusInfinity;
    for (int d = 0; d < N && brute == kPlusInfinity; ++d)
      if (bruteForceSocle(s->field(), N, d) > 0) brute = d;
    if (got != 2 * t - 1 || brute != 2 * t - 1)
      o.fail("t=" + std::to_string(t) + ": duality " + degreeToString(got) + ", brute force " +
             degreeToString(brute));
  }
  if (o.pass) o.detail = "socle starts at 2t-1 for t=1..5";
  return o;
}

Outcome criterionAInvariants() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    Degree e = lcEnd(n, ModulePresentation<K>::ofRing(polynomialRing(101, n)));
    if (e != -n) o.fail("lcEnd(" + std::to_string(n) + ", S) = " + degreeToString(e));
  }
  Degree node = lcEnd(1, ModulePresentation<K>::ofRing(ring(101, {"x", "y"}, {"x*y"})));
  if (node != 0) o.fail("node: " + degreeToString(node));
  Degree cubic = lcEnd(2, ModulePresentation<K>::ofRing(twistedCubic(101)));
  if (cubic != -1) o.fail("twisted cubic: " + degreeToString(cubic));
  if (o.pass) o.detail = "S: -n for n=1..4, node 0, twisted cubic -1";
  return o;
}

// Random homogeneous polynomial of the given degree with 1-2 terms.
Polynomial<K> randomForm(const RingPtr<K>& s, int degree, std::mt19937& rng) {
  const int n = s->nvars();
  std::uniform_int_distribution<int> var(0, n - 1), coef(1, 100), terms(1, 2);
  std::string text;
  int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    if (t > 0) text += "+";
    text += std::to_string(coef(rng));
    for (int e = 0; e < degree; ++e) text += "*" + s->names()[var(rng)];
  }
  return P(s, text);
}

Outcome criterionExtBeginnings() {
  Outcome o;
  std::vector<std::pair<std::string, RingPresentation<K>>> rings = {
      {"k[x,y]", polynomialRing(101, 2)},
      {"k[x,y]/(xy)", ring(101, {"x", "y"}, {"x*y"})},
      {"k[x,y]/(x^2)", ring(101, {"x", "y"}, {"x^2"})},
      {"k[x,y,z]/(xz-y^2)", ring(101, {"x", "y", "z"}, {"x*z-y^2"})},
      {"twisted cubic", twistedCubic(101)}};
  std::vector<Resolution<K>> kRes;
  for (const auto& [name, r] : rings) kRes.push_back(truncatedResolutionOverR(r, residueField(r), 4));
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> pickRing(0, static_cast<int>(rings.size()) - 1), pickShift(-1, 2),
      pickGens(0, 2), pickDeg(1, 2), pickI(0, 3);
  int instances = 0, sharp = 0;
  while (instances < 24) {
    const int ri = pickRing(rng);
    const auto& [rname, r] = rings[ri];
    const auto& s = r.polyRing();
    std::vector<TermVec<K>> rels;
    const int gens = pickGens(rng);
    for (int g = 0; g < gens; ++g) rels.push_back(randomForm(s, pickDeg(rng), rng).terms());
    const int shift = pickShift(rng);
    ModulePresentation<K> m(s, {shift}, rels, r.relations());
    if (moduleDimension(m) < 0) continue;
    const int i = pickI(rng);
    ++instances;
    const Degree alpha = kRes[ri].maxTwist(i);
    if (!isFinite(alpha)) continue;
    const Degree bound = shift - alpha;
    GradedPieces<K> pieces(m);
    for (int l = bound - 4; l < bound; ++l)
      if (extKDirect(kRes[ri], i, pieces, l) > 0)
        o.fail(rname + ", i=" + std::to_string(i) + ": Ext nonzero in degree " + std::to_string(l) + " < " +
               std::to_string(bound));
    if (extKDirect(kRes[ri], i, pieces, bound) > 0) ++sharp;
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " random instances, no violations (" + std::to_string(sharp) +
               " attain the bound)";
  return o;
}

Outcome criterionSocleCounts() {
  Outcome o;
  int compared = 0;
  for (const auto& [name, m] : corpus()) {
    auto rep = socleReport(m);
    KoszulOracle<K> oracle(m);
    for (const auto& e : rep.entries) {
      for (int g : e.dualGeneratorDegrees)
        if (!inWindow(-g)) o.fail(name + ": socle degree outside the oracle window");
      auto scan = scanOracle(oracle, e.j);
      if (scan.socleDim != static_cast<long long>(e.dualGeneratorDegrees.size()))
        o.fail(name + " H^" + std::to_string(e.j) + ": " + std::to_string(e.dualGeneratorDegrees.size()) +
               " dual generators vs socle dimension " + std::to_string(scan.socleDim));
      ++compared;
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " socle dimensions agree";
  return o;
}

Outcome criterionRegularity() {
  Outcome o;
  for (const auto& [name, m] : corpus()) {
    Degree betti = minimalFreeResolution(m).betti.regularity();
    Degree lc = kMinusInfinity;
    for (const auto& e : socleReport(m).entries)
      if (isFinite(e.lcEnd)) lc = std::max<Degree>(lc, e.lcEnd + e.j);
    if (betti != lc) o.fail(name + ": Betti " + degreeToString(betti) + " vs local cohomology " + degreeToString(lc));
  }
  if (o.pass) o.detail = "Betti-table and local-cohomology regularity agree on the corpus";
  return o;
}

Outcome criterionFrobeniusIdentity() {
  Outcome o;
  struct Case {
    std::string name;
    RingPresentation<K> r;
  };
  std::vector<Case> cases = {{"k[x,y] p=2", polynomialRing(2, 2)},
                             {"k[x,y] p=3", polynomialRing(3, 2)},
                             {"k[x,y]/(xy) p=2", ring(2, {"x", "y"}, {"x*y"})},
                             {"twisted cubic p=2", twistedCubic(2)}};
  int checked = 0;
  for (const auto& c : cases) {
    auto omega = canonicalIdeal(c.r);
    for (int e = 1; e <= 2; ++e) {
      auto id = frobeniusSocleIdentity(c.r, omega, fedderModule(c.r, e));
      if (!id.holds)
        o.fail(c.name + " e=" + std::to_string(e) + ": " + degreeToString(id.lhs) + " vs " + degreeToString(id.rhs));
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " exact equalities";
  return o;
}

Outcome criterionCriterion() {
  Outcome o;
  struct Case {
    std::string name;
    RingPresentation<K> r;
    std::vector<const char*> ideal;
  };
  std::vector<Case> cases = {{"k[x,y], m", polynomialRing(101, 2), {"x0", "x1"}},
                             {"k[x,y], (x)", polynomialRing(101, 2), {"x0"}},
                             {"k[x,y], (xy)", polynomialRing(101, 2), {"x0*x1"}},
                             {"k[x,y,z], (x^2,xy)", polynomialRing(101, 3), {"x0^2", "x0*x1"}},
                             {"k[x,y]/(xy), (x)", ring(101, {"x", "y"}, {"x*y"}), {"x"}},
                             {"twisted cubic, (a,b,c)", twistedCubic(101), {"a", "b", "c"}},
                             {"twisted cubic, m", twistedCubic(101), {"a", "b", "c", "d"}}};
  int rows = 0;
  for (const auto& c : cases) {
    std::vector<Polynomial<K>> gens;
    for (auto g : c.ideal) gens.push_back(P(c.r.polyRing(), g));
    for (const auto& row : lab::criterionCheck(c.r, Ideal<K>(c.r.polyRing(), gens), 3)) {
      if (!row.pass)
        o.fail(c.name + " t=" + std::to_string(row.t) + ": socle_beg " + degreeToString(row.socleBeg) + " < bound " +
               degreeToString(row.bound));
      ++rows;
    }
  }
  if (o.pass) o.detail = std::to_string(rows) + " (R, I, t) rows satisfy the bound";
  return o;
}

Outcome criterionTwistedCubicFrobenius() {
  Outcome o;
  auto r = twistedCubic(2);
  auto omega = canonicalIdeal(r);
  auto scan = gaugeScan(r, 3, omega);
  std::ostringstream values;
  for (const auto& rec : scan.records) {
    if (!isFinite(rec.socleBeginCanonical)) {
      o.fail("e=" + std::to_string(rec.e) + ": vanishing top cohomology");
      continue;
    }
    Fraction v(static_cast<long long>(rec.socleBeginCanonical), rec.q);
    values << (rec.e > 1 ? ", " : "") << v.toString();
    if (v < Fraction(0) - scan.socleWitness) o.fail("e=" + std::to_string(rec.e) + " below the reported constant");
  }
  Degree ordinary = canonicalPowerSocle(r, omega.ideal, 2);
  Degree frob = canonicalFrobeniusSocle(r, omega.ideal, 1);
  if (ordinary != frob)
    o.fail("omega^2 vs omega^[2]: " + degreeToString(ordinary) + " vs " + degreeToString(frob));
  if (o.pass)
    o.detail = "socle_beg/q = " + values.str() + ", bounded below by -c with c = " + scan.socleWitness.toString() +
               "; omega^2 and omega^[2] both begin at " + degreeToString(frob);
  return o;
}

std::string runCommand(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

std::string withoutTiming(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

Outcome criterionDeterminism() {
  Outcome o;
  const std::string cmd = std::string("'") + SOCLE_LAB_PATH + "' scan-powers '" + SOCLE_SAMPLES_DIR +
                          "/twisted_cubic_gf2.txt' --ideal P --t-max 4 2>/dev/null";
  int s1 = 0, s2 = 0;
  auto a = runCommand(cmd, s1);
  auto b = runCommand(cmd, s2);
  if (s1 != 0 || s2 != 0) o.fail("scan-powers exited with a nonzero status");
  if (a.empty()) o.fail("empty report");
  if (withoutTiming(a) != withoutTiming(b)) o.fail("reports differ");
  if (o.pass) {
    auto lines = std::count(a.begin(), a.end(), '\n');
    o.detail = "two runs agree on " + std::to_string(lines) + " lines";
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"duality vs Koszul oracle", criterionDualityOracle},
      {"socle of truncations", criterionTruncation},
      {"a-invariants", criterionAInvariants},
      {"beginnings of Ext(k, M)", criterionExtBeginnings},
      {"socle counts", criterionSocleCounts},
      {"regularity two ways", criterionRegularity},
      {"Frobenius socle identity", criterionFrobeniusIdentity},
      {"socle bound for R/I^t", criterionCriterion},
      {"twisted cubic Frobenius powers", criterionTwistedCubicFrobenius},
      {"determinism of scan-powers", criterionDeterminism}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
