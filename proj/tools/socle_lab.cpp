#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "socle/lab/input.hpp"
#include "socle/lab/report.hpp"
#include "socle/lab/scan.hpp"
#include "socle/socle.hpp"

namespace {

using namespace socle;
using namespace socle::lab;

struct Options {
  std::string command;
  std::string input;
  std::string ideal;
  std::string format = "csv";
  std::string out;
  std::string svg;
  int tMax = 3;
  int eMax = 2;
  int trunc = 3;
  bool oracle = false;
};

template <class K>
const Ideal<K>& chooseIdeal(const LabInput<K>& in, const Options& o) {
  if (!o.ideal.empty()) return in.ideal(o.ideal);
  if (in.idealNames.size() == 1) return in.ideal(in.idealNames.front());
  throw DomainError("this command needs --ideal (the input declares " + std::to_string(in.idealNames.size()) +
                    " ideals)");
}

template <class K>
std::string chosenName(const LabInput<K>& in, const Options& o) {
  return o.ideal.empty() && in.idealNames.size() == 1 ? in.idealNames.front() : o.ideal;
}

/// Writes the report to --out (printing the summary) or to stdout.
void emit(const Options& o, const std::string& csv, const Json& json, const std::string& summary,
          const std::string& svg) {
  const std::string report = parseFormat(o.format) == Format::Csv ? csv : json.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << report;
    if (parseFormat(o.format) == Format::Csv && !summary.empty()) std::cerr << summary;
  } else {
    writeFile(o.out, report);
    std::cout << summary;
  }
  if (!o.svg.empty()) writeFile(o.svg, svg);
}

template <class K>
ModulePresentation<K> targetModule(const LabInput<K>& in, const Options& o) {
  if (o.ideal.empty()) return ModulePresentation<K>::ofRing(in.ring);
  return ModulePresentation<K>::quotient(in.ring.lift(in.ideal(o.ideal)), in.ring.relations());
}

template <class K>
int runGb(const LabInput<K>& in, const Options& o) {
  Ideal<K> target = o.ideal.empty() ? in.ring.relations() : in.ring.lift(in.ideal(o.ideal));
  for (const auto& g : target.groebnerBasis().polys) std::cout << g.toString() << "\n";
  return 0;
}

template <class K>
int runResolve(const LabInput<K>& in, const Options& o) {
  auto m = targetModule(in, o);
  auto res = minimalFreeResolution(m);
  std::cout << "Betti table over the polynomial ring:\n" << res.betti.toString();
  std::cout << "projective dimension: " << projectiveDimension(res) << "\n";
  if (!in.ring.isPolynomialRing()) {
    auto kRes = truncatedResolutionOverR(in.ring, residueField(in.ring), o.trunc);
    std::cout << "resolution of k over R, " << kRes.length() << (kRes.complete ? " (complete)" : " steps (truncated)")
              << ":\n";
    for (int i = 0; i <= kRes.length(); ++i)
      std::cout << "  alpha_" << i << " = " << degreeToString(kRes.maxTwist(i)) << ", rank " << kRes.modules[i].rank()
                << "\n";
  }
  return 0;
}

template <class K>
int runSocle(const LabInput<K>& in, const Options& o) {
  auto m = targetModule(in, o);
  auto rep = socleReport(m);
  std::cout << "dim = " << rep.dimension << "\n";
  std::cout << "j,lc_end,socle_beg,socle_dim,oracle\n";
  for (const auto& e : rep.entries) {
    if (o.oracle) verifyWithOracle(m, e.j, e.lcEnd, e.socleBeg);
    std::cout << e.j << "," << degreeToString(e.lcEnd) << "," << degreeToString(e.socleBeg) << ","
              << e.dualGeneratorDegrees.size() << "," << (o.oracle ? "agree" : "off") << "\n";
  }
  std::cout << "depth = " << degreeToString(depth(m)) << "\n";
  std::cout << "regularity = " << degreeToString(regularity(m)) << "\n";
  return 0;
}

template <class K>
int runCanonical(const LabInput<K>& in, const Options&) {
  auto data = canonicalIdeal(in.ring);
  std::cout << "canonical module generator degrees:";
  for (int t : data.module.generatorTwists()) std::cout << " " << t;
  std::cout << "\na(R) = " << degreeToString(data.aInvariant) << "\n";
  std::cout << "canonical ideal:";
  for (const auto& f : data.ideal) std::cout << " " << f.toString();
  std::cout << "\na = " << data.shift << " (so that the ideal twisted by a is the canonical module)\n";
  std::cout << "homomorphisms tried: " << data.attempts << "\n";
  std::cout << "variables are non-zero-divisors: " << (data.variablesAreNonZeroDivisors ? "yes" : "no") << "\n";
  auto cert = endomorphismCheck(in.ring, data.ideal);
  std::cout << "R -> Hom(w, w) isomorphism (degrees <= " << cert.checkedUpTo
            << "): " << (cert.holds ? "yes" : "no, " + cert.reason) << "\n";
  return 0;
}

template <class K>
int runFedder(const LabInput<K>& in, const Options& o) {
  std::cout << "e,q,mu,generator_degrees,alphas\n";
  for (int e = 1; e <= o.eMax; ++e) {
    auto rep = fedderModule(in.ring, e);
    auto alphas = cartierDegrees(rep, in.ring.nvars());
    std::cout << e << "," << rep.q << "," << rep.mu() << ","
              << joined(rep.generatorDegrees, [](int d) { return std::to_string(d); }) << ","
              << joined(alphas, [](const Fraction& f) { return f.toString(); }) << "\n";
  }
  return 0;
}

template <class K>
int runGauge(const LabInput<K>& in, const Options& o, const std::string& kind) {
  auto omega = canonicalIdeal(in.ring);
  auto scan = gaugeScan(in.ring, o.eMax, omega);
  std::string summary = "verdict: " + scan.verdict + "\nmeasured socle witness c = max_e(-socle_beg/q) = " +
                        scan.socleWitness.toString() + "\n";
  emit(o, gaugeCsv(scan), gaugeJson(scan, omega, kind), summary, gaugeSvg(scan));
  return 0;
}

template <class K>
int runScanPowers(const LabInput<K>& in, const Options& o) {
  auto scan = scanPowers(in.ring, chooseIdeal(in, o), o.tMax, o.oracle);
  emit(o, powersCsv(scan), powersJson(scan, chosenName(in, o), o.tMax), powersText(scan), powersSvg(scan));
  return 0;
}

template <class K>
int runCriterion(const LabInput<K>& in, const Options& o) {
  auto rows = criterionCheck(in.ring, chooseIdeal(in, o), o.tMax);
  std::string summary;
  for (const auto& r : rows)
    summary += "t = " + std::to_string(r.t) + ": measured bound " + degreeToString(r.bound) + ", socle_beg " +
               degreeToString(r.socleBeg) + " -> " + (r.pass ? "pass" : "FAIL") +
               (r.vacuous ? " (vacuous: d = 0)" : "") + "\n";
  emit(o, criterionCsv(rows), criterionJson(rows, chosenName(in, o), o.tMax), summary, "");
  return 0;
}

template <class K>
int runLemma37(const LabInput<K>& in, const Options& o) {
  auto rep = lemma37Check(in.ring, chooseIdeal(in, o), o.tMax);
  std::string summary = "measured quotient witness: " + optionalFraction(rep.quotientWitness) +
                        "\nmeasured ideal witness: " + optionalFraction(rep.idealWitness) + "\n" + rep.verdict + "\n";
  emit(o, lemma37Csv(rep), lemma37Json(rep, chosenName(in, o), o.tMax), summary, "");
  return 0;
}

template <class K>
int dispatch(const InputSpec& spec, K field, const Options& o) {
  auto in = materialize(spec, std::move(field));
  const auto& c = o.command;
  if (c == "gb") return runGb(in, o);
  if (c == "resolve") return runResolve(in, o);
  if (c == "socle") return runSocle(in, o);
  if (c == "canonical") return runCanonical(in, o);
  if (c == "scan-powers") return runScanPowers(in, o);
  if (c == "criterion") return runCriterion(in, o);
  if (c == "lemma37") return runLemma37(in, o);
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (c == "fedder") return runFedder(in, o);
    if (c == "gauge" || c == "scan-frobenius") return runGauge(in, o, c);
  } else {
    if (c == "fedder" || c == "gauge" || c == "scan-frobenius")
      throw DomainError("'" + c + "' needs a field of positive characteristic");
  }
  throw DomainError("unknown command '" + c + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"socle-lab: graded local cohomology, canonical ideals and Frobenius experiments"};
  app.require_subcommand(1);
  Options o;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "input file")->required();
    sub->add_option("--ideal", o.ideal, "name of an ideal declared in the input");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--svg", o.svg, "write an SVG chart to this file");
    sub->add_option("--t-max", o.tMax, "largest power t")->check(CLI::PositiveNumber);
    sub->add_option("--e-max", o.eMax, "largest Frobenius exponent e")->check(CLI::PositiveNumber);
    sub->add_option("--trunc", o.trunc, "steps of the resolution of k over R")->check(CLI::NonNegativeNumber);
    sub->add_flag("--oracle", o.oracle, "cross-check local cohomology with the Koszul limit");
    sub->callback([&o, name] { o.command = name; });
  };
  add("gb", "Groebner basis of an ideal plus the relations");
  add("resolve", "minimal free resolution and Betti table");
  add("socle", "end and socle degrees of local cohomology");
  add("canonical", "canonical module and canonical ideal");
  add("fedder", "Fedder modules and Cartier generator degrees");
  add("gauge", "gauge scan over Frobenius exponents");
  add("scan-powers", "local cohomology of R/I^t for t = 1..t-max");
  add("scan-frobenius", "socle degrees of Frobenius powers of the canonical ideal");
  add("criterion", "socle lower bound from Ext(k, H^j) for R/I^t");
  add("lemma37", "compare socles of H^{d-1}(R/I^t) and H^d(I^t)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto spec = parseInputFile(o.input);
    if (spec.characteristic == 0) return dispatch(spec, RationalField(), o);
    return dispatch(spec, PrimeField(static_cast<std::uint32_t>(spec.characteristic)), o);
  } catch (const HypothesisRefused& e) {
    std::cerr << "hypothesis not satisfied: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
