#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "socle/lab/scan.hpp"

namespace socle::lab {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

inline Format parseFormat(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw DomainError("unknown format '" + s + "' (expected csv or json)");
}

inline Json degreeJson(Degree d) {
  if (isFinite(d)) return d;
  return degreeToString(d);
}

inline std::string msString(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

template <class T, class F>
std::string joined(const std::vector<T>& v, F f, const char* sep = ";") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += f(v[i]);
  }
  return out;
}

inline std::string optionalFraction(const std::optional<Fraction>& f) { return f ? f->toString() : "none"; }

inline void writeFile(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write to '" + path + "'");
  f << content;
  if (!f) throw Error("write to '" + path + "' failed");
}

// ---- power scans ----

inline std::string powersCsv(const PowerScan& scan) {
  std::string out = "t,j,lc_end,socle_beg,oracle,elapsed_ms\n";
  for (const auto& r : scan.rows)
    out += std::to_string(r.t) + "," + std::to_string(r.j) + "," + degreeToString(r.lcEnd) + "," +
           degreeToString(r.socleBeg) + "," + (r.oracleChecked ? "agree" : "off") + "," + msString(r.elapsedMs) + "\n";
  return out;
}

inline Json powersSummary(const PowerScan& scan) {
  Json wit = Json::object(), slope = Json::object();
  for (const auto& [j, f] : scan.socleWitness) wit[std::to_string(j)] = f.toString();
  for (const auto& [j, f] : scan.endSlope) slope[std::to_string(j)] = f.toString();
  return {{"label", "measured"},
          {"socle_witness_c_j", wit},
          {"end_slope", slope},
          {"note", "constants are fitted on the scanned range only"}};
}

inline Json powersJson(const PowerScan& scan, const std::string& ideal, int tMax) {
  Json rows = Json::array();
  for (const auto& r : scan.rows)
    rows.push_back({{"t", r.t},
                    {"j", r.j},
                    {"lc_end", degreeJson(r.lcEnd)},
                    {"socle_beg", degreeJson(r.socleBeg)},
                    {"oracle", r.oracleChecked ? "agree" : "off"},
                    {"elapsed_ms", r.elapsedMs}});
  return {{"schema", "socle-lab/1"},
          {"kind", "scan-powers"},
          {"ideal", ideal},
          {"t_max", tMax},
          {"rows", rows},
          {"summary", powersSummary(scan)}};
}

inline std::string powersText(const PowerScan& scan) {
  std::string out;
  for (const auto& [j, f] : scan.socleWitness)
    out += "measured c_" + std::to_string(j) + " = max_t(-socle_beg/t) = " + f.toString() + "\n";
  for (const auto& [j, f] : scan.endSlope)
    out += "measured end slope for j = " + std::to_string(j) + ": max_t(lc_end/t) = " + f.toString() + "\n";
  return out;
}

/// Line chart of y(x) series, one polyline per series.
inline std::string svgChart(const std::string& title, const std::string& xLabel, const std::string& yLabel,
                            const std::map<std::string, std::vector<std::pair<double, double>>>& series) {
  const double w = 640, h = 400, left = 70, right = 150, top = 40, bottom = 50;
  double xMin = 1e300, xMax = -1e300, yMin = 1e300, yMax = -1e300;
  for (const auto& [name, pts] : series)
    for (auto [x, y] : pts) {
      xMin = std::min(xMin, x), xMax = std::max(xMax, x);
      yMin = std::min(yMin, y), yMax = std::max(yMax, y);
    }
  if (xMin > xMax) xMin = 0, xMax = 1, yMin = 0, yMax = 1;
  if (xMax == xMin) xMax = xMin + 1;
  if (yMax == yMin) yMin -= 1, yMax += 1;
  auto px = [&](double x) { return left + (x - xMin) / (xMax - xMin) * (w - left - right); };
  auto py = [&](double y) { return h - bottom - (y - yMin) / (yMax - yMin) * (h - top - bottom); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
    << title << "</text>\n";
  s << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
    << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 12
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << xLabel << "</text>\n";
  s << "<text x=\"16\" y=\"" << (top + h - bottom) / 2 << "\" transform=\"rotate(-90 16 " << (top + h - bottom) / 2
    << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << yLabel << "</text>\n";
  for (double v : {yMin, yMax})
    s << "<text x=\"" << left - 6 << "\" y=\"" << py(v) + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(v) << "</text>\n";
  for (double v : {xMin, xMax})
    s << "<text x=\"" << px(v) << "\" y=\"" << h - bottom + 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(v) << "</text>\n";
  int c = 0;
  for (const auto& [name, pts] : series) {
    const char* color = colors[c % 6];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s << (i ? " " : "") << num(px(pts[i].first)) << "," << num(py(pts[i].second));
    s << "\"/>\n";
    for (auto [x, y] : pts)
      s << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    s << "<text x=\"" << w - right + 12 << "\" y=\"" << top + 16 * (c + 1) << "\" fill=\"" << color
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << name << "</text>\n";
    ++c;
  }
  s << "</svg>\n";
  return s.str();
}

inline std::string powersSvg(const PowerScan& scan) {
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const auto& r : scan.rows)
    if (isFinite(r.socleBeg))
      series["j = " + std::to_string(r.j)].push_back({double(r.t), double(r.socleBeg) / r.t});
  return svgChart("socle_beg / t (measured)", "t", "socle_beg / t", series);
}

// ---- criterion ----

inline std::string extKString(const std::vector<ExtKEntry>& v) {
  return joined(v, [](const ExtKEntry& e) {
    return std::to_string(e.i) + ":" + std::to_string(e.j) + ":" + degreeToString(e.value);
  });
}

inline std::string criterionCsv(const std::vector<CriterionRow>& rows) {
  std::string out = "t,d,ext_k_begin,c_prime,alpha_d,bound,socle_beg,pass,vacuous,elapsed_ms\n";
  for (const auto& r : rows)
    out += std::to_string(r.t) + "," + std::to_string(r.d) + "," + extKString(r.extK) + "," +
           optionalFraction(r.cPrime) + "," + degreeToString(r.alphaD) + "," + degreeToString(r.bound) + "," +
           degreeToString(r.socleBeg) + "," + (r.pass ? "pass" : "fail") + "," + (r.vacuous ? "yes" : "no") + "," +
           msString(r.elapsedMs) + "\n";
  return out;
}

inline Json criterionJson(const std::vector<CriterionRow>& rows, const std::string& ideal, int tMax) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json ext = Json::array();
    for (const auto& e : r.extK) ext.push_back({{"i", e.i}, {"j", e.j}, {"begin", degreeJson(e.value)}});
    arr.push_back({{"t", r.t},
                   {"d", r.d},
                   {"ext_k_begin", ext},
                   {"c_prime", optionalFraction(r.cPrime)},
                   {"alpha_d", degreeJson(r.alphaD)},
                   {"bound", degreeJson(r.bound)},
                   {"socle_beg", degreeJson(r.socleBeg)},
                   {"pass", r.pass},
                   {"vacuous", r.vacuous},
                   {"elapsed_ms", r.elapsedMs}});
  }
  return {{"schema", "socle-lab/1"}, {"kind", "criterion"}, {"ideal", ideal}, {"t_max", tMax},
          {"rows", arr}, {"summary", {{"label", "measured"}, {"all_pass", std::all_of(rows.begin(), rows.end(), [](const CriterionRow& r) { return r.pass; })}}}};
}

// ---- lemma37 reports ----

inline std::string optionalInt(const std::optional<long long>& v) { return v ? std::to_string(*v) : "none"; }

inline std::string lemma37Csv(const Lemma37Report& rep) {
  std::string out = "t,socle_beg_quotient,socle_beg_ideal,difference,elapsed_ms\n";
  for (const auto& r : rep.rows)
    out += std::to_string(r.t) + "," + degreeToString(r.quotientSocle) + "," + degreeToString(r.idealSocle) + "," +
           optionalInt(r.difference()) + "," + msString(r.elapsedMs) + "\n";
  return out;
}

inline Json lemma37Json(const Lemma37Report& rep, const std::string& ideal, int tMax) {
  Json arr = Json::array();
  for (const auto& r : rep.rows) {
    auto diff = r.difference();
    arr.push_back({{"t", r.t},
                   {"socle_beg_quotient", degreeJson(r.quotientSocle)},
                   {"socle_beg_ideal", degreeJson(r.idealSocle)},
                   {"difference", diff ? Json(*diff) : Json("none")},
                   {"elapsed_ms", r.elapsedMs}});
  }
  return {{"schema", "socle-lab/1"}, {"kind", "lemma37"}, {"ideal", ideal}, {"t_max", tMax}, {"d", rep.d},
          {"rows", arr},
          {"summary",
           {{"label", "measured"},
            {"quotient_witness", optionalFraction(rep.quotientWitness)},
            {"ideal_witness", optionalFraction(rep.idealWitness)},
            {"verdict", rep.verdict}}}};
}

// ---- Frobenius / gauge scans ----

inline std::string gaugeCsv(const GaugeScan& scan) {
  std::string out = "e,q,generator_degrees,alphas,max_alpha,socle_beg_canonical,identity_rhs,identity,elapsed_ms\n";
  for (const auto& r : scan.records)
    out += std::to_string(r.e) + "," + std::to_string(r.q) + "," +
           joined(r.generatorDegrees, [](int d) { return std::to_string(d); }) + "," +
           joined(r.alphas, [](const Fraction& f) { return f.toString(); }) + "," + r.maxAlpha.toString() + "," +
           degreeToString(r.socleBeginCanonical) + "," + degreeToString(r.identityRhs) + "," +
           (r.identityHolds ? "holds" : "fails") + "," + msString(r.elapsedMs) + "\n";
  return out;
}

template <class K>
Json gaugeJson(const GaugeScan& scan, const CanonicalData<K>& omega, const std::string& kind) {
  Json arr = Json::array();
  for (const auto& r : scan.records) {
    Json alphas = Json::array();
    for (const auto& f : r.alphas) alphas.push_back(f.toString());
    arr.push_back({{"e", r.e},
                   {"q", r.q},
                   {"generator_degrees", r.generatorDegrees},
                   {"alphas", alphas},
                   {"max_alpha", r.maxAlpha.toString()},
                   {"socle_beg_canonical", degreeJson(r.socleBeginCanonical)},
                   {"identity_rhs", degreeJson(r.identityRhs)},
                   {"identity_holds", r.identityHolds},
                   {"elapsed_ms", r.elapsedMs}});
  }
  Json ideal = Json::array();
  for (const auto& f : omega.ideal) ideal.push_back(f.toString());
  return {{"schema", "socle-lab/1"},
          {"kind", kind},
          {"canonical_ideal", ideal},
          {"a", omega.shift},
          {"a_invariant", degreeJson(omega.aInvariant)},
          {"rows", arr},
          {"summary",
           {{"label", "measured"},
            {"verdict", scan.verdict},
            {"socle_witness", scan.socleWitness.toString()},
            {"note", "socle_beg_canonical / q >= -socle_witness on the scanned range"}}}};
}

inline std::string gaugeSvg(const GaugeScan& scan) {
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const auto& r : scan.records) {
    if (isFinite(r.socleBeginCanonical))
      series["socle_beg / q"].push_back({double(r.e), double(r.socleBeginCanonical) / double(r.q)});
    series["max alpha"].push_back({double(r.e), double(r.maxAlpha.num()) / double(r.maxAlpha.den())});
  }
  return svgChart("Frobenius scan (measured)", "e", "value", series);
}

}  // namespace socle::lab
