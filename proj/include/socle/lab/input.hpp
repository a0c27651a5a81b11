#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "socle/error.hpp"
#include "socle/field.hpp"
#include "socle/parse.hpp"
#include "socle/ring.hpp"

namespace socle::lab {

/// A polynomial as written in the input file, with its line number.
struct SourceText {
  std::string text;
  int line = 0;
};

/// Syntactic content of an input file, before any polynomial is parsed.
struct InputSpec {
  std::uint64_t characteristic = 0;
  bool fieldSeen = false;
  std::vector<std::string> vars;
  int varsLine = 0;
  std::vector<SourceText> relations;
  std::vector<std::string> idealNames;  // declaration order
  std::map<std::string, std::vector<SourceText>> ideals;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Comma-separated items; double quotes are optional and protect commas.
inline std::vector<std::string> splitItems(const std::string& s, int line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, wasQuoted = false;
  for (char c : s) {
    if (c == '"') {
      quoted = !quoted;
      wasQuoted = true;
      continue;
    }
    if (c == ',' && !quoted) {
      auto item = trim(cur);
      if (item.empty() && !wasQuoted) throw ParseError(line, "empty item in list");
      out.push_back(item);
      cur.clear();
      wasQuoted = false;
      continue;
    }
    cur += c;
  }
  if (quoted) throw ParseError(line, "unterminated string");
  auto item = trim(cur);
  if (!item.empty() || wasQuoted) out.push_back(item);
  return out;
}

inline std::uint64_t parseCharacteristic(const std::string& raw, int line) {
  std::string v = raw;
  if (v == "QQ" || v == "Q") return 0;
  if (v.rfind("GF(", 0) == 0 && v.back() == ')') v = v.substr(3, v.size() - 4);
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
  } catch (const std::exception&) {
    throw ParseError(line, "field must be a prime, GF(p) or QQ; got '" + raw + "'");
  }
  if (p != 0 && !isPrime(p)) throw ParseError(line, "characteristic " + std::to_string(p) + " is not prime");
  if (p > 0xFFFFFFFFull) throw ParseError(line, "characteristic too large");
  return p;
}

}  // namespace detail

inline InputSpec parseInputText(const std::string& text) {
  InputSpec spec;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    auto sp = s.find_first_of(" \t");
    std::string key = s.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : detail::trim(s.substr(sp));
    if (key == "field") {
      if (spec.fieldSeen) throw ParseError(line, "field declared twice");
      spec.characteristic = detail::parseCharacteristic(rest, line);
      spec.fieldSeen = true;
    } else if (key == "vars") {
      if (!spec.vars.empty()) throw ParseError(line, "vars declared twice");
      spec.vars = detail::splitItems(rest, line);
      spec.varsLine = line;
      if (spec.vars.empty()) throw ParseError(line, "at least one variable is required");
    } else if (key == "relations") {
      for (auto& item : detail::splitItems(rest, line))
        if (!item.empty()) spec.relations.push_back({item, line});
    } else if (key == "ideal") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(line, "expected 'ideal <name> = <generators>'");
      std::string name = detail::trim(rest.substr(0, eq));
      if (name.empty() || name.find_first_of(" \t") != std::string::npos)
        throw ParseError(line, "invalid ideal name '" + name + "'");
      if (spec.ideals.count(name)) throw ParseError(line, "ideal '" + name + "' declared twice");
      std::vector<SourceText> gens;
      for (auto& item : detail::splitItems(rest.substr(eq + 1), line))
        if (!item.empty()) gens.push_back({item, line});
      spec.idealNames.push_back(name);
      spec.ideals[name] = std::move(gens);
    } else {
      throw ParseError(line, "unknown directive '" + key + "'");
    }
  }
  if (!spec.fieldSeen) throw ParseError(0, "missing 'field' declaration");
  if (spec.vars.empty()) throw ParseError(0, "missing 'vars' declaration");
  return spec;
}

inline InputSpec parseInputFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parseInputText(buf.str());
}

/// A parsed ring together with its named ideals.
template <class K>
struct LabInput {
  RingPresentation<K> ring;
  std::map<std::string, Ideal<K>> ideals;
  std::vector<std::string> idealNames;

  const Ideal<K>& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw DomainError("no ideal named '" + name + "' in the input");
    return it->second;
  }
};

namespace detail {

template <class K>
Polynomial<K> parseHomogeneous(const RingPtr<K>& ring, const SourceText& src) {
  auto f = parsePolynomial(ring, src.text, src.line);
  if (!f.isZero() && !f.isHomogeneous())
    throw ParseError(src.line, "'" + src.text + "' is not homogeneous");
  return f;
}

}  // namespace detail

template <class K>
LabInput<K> materialize(const InputSpec& spec, K field) {
  auto ring = makeRing(std::move(field), spec.vars);
  std::vector<Polynomial<K>> rels;
  for (const auto& src : spec.relations) {
    auto f = detail::parseHomogeneous(ring, src);
    if (!f.isZero() && f.degree() < 1) throw ParseError(src.line, "relations must have positive degree");
    rels.push_back(std::move(f));
  }
  LabInput<K> out{RingPresentation<K>(ring, std::move(rels)), {}, spec.idealNames};
  for (const auto& name : spec.idealNames) {
    std::vector<Polynomial<K>> gens;
    for (const auto& src : spec.ideals.at(name)) gens.push_back(detail::parseHomogeneous(ring, src));
    out.ideals.emplace(name, Ideal<K>(ring, std::move(gens)));
  }
  return out;
}

}  // namespace socle::lab
