#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "socle/degree.hpp"
#include "socle/error.hpp"
#include "socle/field.hpp"
#include "socle/monomial.hpp"

namespace socle {

template <class K>
struct Term {
  Monomial m;
  typename K::value_type c;
};

/// Terms sorted strictly decreasing under some TermOrder, no zero coefficients.
/// Used both for ring elements and for vectors of a graded free module.
template <class K>
using TermVec = std::vector<Term<K>>;

namespace poly {

template <class K>
TermVec<K> normalize(const K& k, const TermOrder& ord, TermVec<K> raw) {
  std::sort(raw.begin(), raw.end(),
            [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
  TermVec<K> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = k.add(out.back().c, t.c);
      if (k.isZero(out.back().c)) out.pop_back();
    } else if (!k.isZero(t.c)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

/// Re-sort a vector after changing the ambient term order.
template <class K>
TermVec<K> resort(const TermOrder& ord, TermVec<K> f) {
  std::sort(f.begin(), f.end(),
            [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
  return f;
}

/// f + c * m * g, merging two sorted term lists.
template <class K>
TermVec<K> axpy(const K& k, const TermOrder& ord, const TermVec<K>& f,
                const typename K::value_type& c, const Monomial& m, const TermVec<K>& g) {
  TermVec<K> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].m * m;
    if (i == f.size()) {
      out.push_back({gm, k.mul(c, g[j].c)});
      ++j;
      continue;
    }
    int cmp = ord.compare(f[i].m, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, k.mul(c, g[j].c)});
      ++j;
    } else {
      auto s = k.add(f[i].c, k.mul(c, g[j].c));
      if (!k.isZero(s)) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
TermVec<K> add(const K& k, const TermOrder& ord, const TermVec<K>& f, const TermVec<K>& g) {
  return axpy(k, ord, f, k.one(), Monomial{}, g);
}

template <class K>
TermVec<K> sub(const K& k, const TermOrder& ord, const TermVec<K>& f, const TermVec<K>& g) {
  return axpy(k, ord, f, k.neg(k.one()), Monomial{}, g);
}

template <class K>
TermVec<K> scale(const K& k, TermVec<K> f, const typename K::value_type& c) {
  if (k.isZero(c)) return {};
  for (auto& t : f) t.c = k.mul(t.c, c);
  return f;
}

/// c * m * f; multiplication by a monomial preserves the order.
template <class K>
TermVec<K> mulTerm(const K& k, const TermVec<K>& f, const Monomial& m,
                   const typename K::value_type& c) {
  TermVec<K> out;
  if (k.isZero(c)) return out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back({t.m * m, k.mul(t.c, c)});
  return out;
}

/// f * g where g is a ring element (component 0) and f a ring element or module vector.
template <class K>
TermVec<K> mul(const K& k, const TermOrder& ord, const TermVec<K>& f, const TermVec<K>& g) {
  if (f.empty() || g.empty()) return {};
  if (g.size() == 1) return mulTerm(k, f, g[0].m, g[0].c);
  if (f.size() == 1 && f[0].m.comp == 0 && ord.ringOrder()) return mulTerm(k, g, f[0].m, f[0].c);
  TermVec<K> raw;
  raw.reserve(f.size() * g.size());
  for (const auto& a : f)
    for (const auto& b : g) raw.push_back({a.m * b.m, k.mul(a.c, b.c)});
  return normalize(k, ord, std::move(raw));
}

template <class K>
TermVec<K> makeMonic(const K& k, TermVec<K> f) {
  if (f.empty() || k.isOne(f.front().c)) return f;
  auto inv = k.inv(f.front().c);
  for (auto& t : f) t.c = k.mul(t.c, inv);
  return f;
}

/// Degree of the leading term, -inf for zero.
template <class K>
Degree degree(const TermOrder& ord, const TermVec<K>& f) {
  return f.empty() ? kMinusInfinity : ord.degree(f.front().m);
}

template <class K>
bool isHomogeneous(const TermOrder& ord, const TermVec<K>& f) {
  for (const auto& t : f)
    if (ord.degree(t.m) != ord.degree(f.front().m)) return false;
  return true;
}

template <class K>
bool equal(const K& k, const TermVec<K>& f, const TermVec<K>& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!(f[i].m == g[i].m) || !k.isZero(k.sub(f[i].c, g[i].c))) return false;
  return true;
}

/// Restrict a module vector to the components in [lo, hi), renumbered from 0.
template <class K>
TermVec<K> componentSlice(const TermVec<K>& f, int lo, int hi) {
  TermVec<K> out;
  for (const auto& t : f)
    if (t.m.comp >= lo && t.m.comp < hi) {
      out.push_back(t);
      out.back().m.comp = static_cast<std::uint16_t>(t.m.comp - lo);
    }
  return out;
}

/// Entry at one component as a ring element.
template <class K>
TermVec<K> component(const TermVec<K>& f, int comp) {
  return componentSlice(f, comp, comp + 1);
}

/// Shift every component index by `offset`.
template <class K>
TermVec<K> shiftComponents(TermVec<K> f, int offset) {
  for (auto& t : f) t.m.comp = static_cast<std::uint16_t>(t.m.comp + offset);
  return f;
}

}  // namespace poly

/// The ambient polynomial ring S = k[x_1..x_n] with a fixed monomial order.
template <class K>
class PolyRing {
 public:
  PolyRing(K field, std::vector<std::string> names, MonomialOrder order = {})
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
    if (names_.empty()) throw StructuralError("polynomial ring needs at least one variable");
    if (static_cast<int>(names_.size()) > kMaxVars)
      throw StructuralError("at most " + std::to_string(kMaxVars) + " variables supported");
    termOrder_ = TermOrder(layout(), order_);
  }

  const K& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  MonomialLayout layout() const { return {nvars(), 0}; }
  const TermOrder& termOrder() const { return termOrder_; }

  TermOrder moduleOrder(std::vector<int> twists, std::vector<int> blocks = {}) const {
    return TermOrder(layout(), order_, std::move(twists), std::move(blocks));
  }

  std::string monomialToString(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.exp[i]) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
  }

  std::string toString(const TermVec<K>& f) const {
    if (f.empty()) return "0";
    std::string s;
    for (const auto& t : f) {
      std::string c = field_.toString(t.c);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      std::string mono = monomialToString(t.m);
      std::string body = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
      if (t.m.comp != 0 || hasComponents(f)) body += "*e" + std::to_string(t.m.comp);
      if (s.empty())
        s = negative ? "-" + body : body;
      else
        s += (negative ? " - " : " + ") + body;
    }
    return s;
  }

 private:
  static bool hasComponents(const TermVec<K>& f) {
    return std::any_of(f.begin(), f.end(), [](const Term<K>& t) { return t.m.comp != 0; });
  }

  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  TermOrder termOrder_;
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> makeRing(K field, std::vector<std::string> names, MonomialOrder order = {}) {
  return std::make_shared<const PolyRing<K>>(std::move(field), std::move(names), std::move(order));
}

/// An element of S; remembers its ring so mixing rings is caught.
template <class K>
class Polynomial {
 public:
  using value_type = typename K::value_type;

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring, TermVec<K> terms = {})
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static Polynomial constant(RingPtr<K> ring, long long c) {
    const auto& k = ring->field();
    auto v = k.fromInt(c);
    if (k.isZero(v)) return Polynomial(ring);
    return Polynomial(ring, {{Monomial{}, v}});
  }
  static Polynomial variable(RingPtr<K> ring, int index) {
    return Polynomial(ring, {{socle::variable(index, ring->layout()), ring->field().one()}});
  }

  const RingPtr<K>& ring() const { return ring_; }
  const TermVec<K>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree of the leading term; -inf for the zero polynomial.
  Degree degree() const { return terms_.empty() ? kMinusInfinity : terms_.front().m.deg; }
  bool isHomogeneous() const { return poly::isHomogeneous(ring_->termOrder(), terms_); }
  const Monomial& leadingMonomial() const { return terms_.front().m; }
  const value_type& leadingCoefficient() const { return terms_.front().c; }

  Polynomial monic() const { return Polynomial(ring_, poly::makeMonic(ring_->field(), terms_)); }

  std::string toString() const { return ring_ ? ring_->toString(terms_) : "0"; }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    checkSameRing(f, g);
    return Polynomial(f.ring_, poly::add(f.ring_->field(), f.ring_->termOrder(), f.terms_, g.terms_));
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    checkSameRing(f, g);
    return Polynomial(f.ring_, poly::sub(f.ring_->field(), f.ring_->termOrder(), f.terms_, g.terms_));
  }
  friend Polynomial operator-(const Polynomial& f) {
    return Polynomial(f.ring_, poly::scale(f.ring_->field(), f.terms_, f.ring_->field().neg(f.ring_->field().one())));
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    checkSameRing(f, g);
    return Polynomial(f.ring_, poly::mul(f.ring_->field(), f.ring_->termOrder(), f.terms_, g.terms_));
  }
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    checkSameRing(f, g);
    return poly::equal(f.ring_->field(), f.terms_, g.terms_);
  }

  Polynomial pow(int e) const {
    Polynomial result = constant(ring_, 1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = result * base;
      if (e > 1) base = base * base;
    }
    return result;
  }

  static void checkSameRing(const Polynomial& f, const Polynomial& g) {
    if (!f.ring_ || !g.ring_) throw StructuralError("polynomial without a ring");
    if (f.ring_ != g.ring_ &&
        (f.ring_->names() != g.ring_->names() || !(f.ring_->field() == g.ring_->field()) ||
         !(f.ring_->order() == g.ring_->order())))
      throw StructuralError("polynomials from different ambient rings");
  }

 private:
  RingPtr<K> ring_;
  TermVec<K> terms_;
};

/// A raw (exponents, coefficient) pair for polyNormalize.
struct RawTerm {
  std::vector<int> exponents;
  long long coefficient;
};

/// Combine like terms, drop zeros, sort by the ring order.
template <class K>
Polynomial<K> polyNormalize(const RingPtr<K>& ring, const std::vector<RawTerm>& raw) {
  TermVec<K> terms;
  terms.reserve(raw.size());
  for (const auto& r : raw)
    terms.push_back({makeMonomial(r.exponents, ring->layout()), ring->field().fromInt(r.coefficient)});
  return Polynomial<K>(ring, poly::normalize(ring->field(), ring->termOrder(), std::move(terms)));
}

template <class K>
Polynomial<K> polyMul(const Polynomial<K>& f, const Polynomial<K>& g) {
  return f * g;
}

}  // namespace socle
