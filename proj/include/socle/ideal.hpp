#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "socle/groebner.hpp"
#include "socle/polynomial.hpp"

namespace socle {

/// Reduced Groebner basis of an ideal of S, sorted by increasing leading term.
template <class K>
struct GBasis {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> polys;

  std::size_t size() const { return polys.size(); }
  const MonomialOrder& order() const { return ring->order(); }
  std::vector<Monomial> leadingMonomials() const {
    std::vector<Monomial> out;
    for (const auto& g : polys) out.push_back(g.leadingMonomial());
    return out;
  }
};

template <class K>
Polynomial<K> normalForm(const Polynomial<K>& f, const GBasis<K>& g) {
  Polynomial<K>::checkSameRing(f, Polynomial<K>(g.ring));
  detail::Reducer<K> red(g.ring->field(), g.ring->termOrder());
  for (const auto& p : g.polys) red.add(p.terms());
  return Polynomial<K>(f.ring(), red.reduce(f.terms()));
}

/// Enumerates the exponent vectors of all monomials of degree `d` in `n` variables.
inline void forEachMonomial(int n, int d, const std::function<void(const Monomial&)>& fn) {
  if (d < 0) return;
  Monomial m;
  m.deg = d;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      m.exp[var] = static_cast<std::uint16_t>(left);
      fn(m);
      m.exp[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exp[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  rec(0, d);
}

/// Number of monomials of degree `d` not divisible by any of `lead` (component ignored).
inline long long countStandardMonomials(int n, int d, const std::vector<Monomial>& lead) {
  long long count = 0;
  forEachMonomial(n, d, [&](const Monomial& m) {
    for (const auto& l : lead) {
      Monomial lm = l;
      lm.comp = 0;
      if (divides(lm, m)) return;
    }
    ++count;
  });
  return count;
}

/// Krull dimension of S/(monomials): the largest variable subset containing the support
/// of no generator; -1 if a unit is present.
inline int monomialDimension(int n, const std::vector<Monomial>& lead) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : lead) {
    if (totalDegree(m) == 0) return -1;
    supports.push_back(m.supportMask());
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

template <class K>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)) {
    for (auto& g : gens) {
      Polynomial<K>::checkSameRing(g, Polynomial<K>(ring_));
      if (g.isZero()) continue;
      if (!g.isHomogeneous())
        throw StructuralError("ideal generator " + g.toString() + " is not homogeneous");
      gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(RingPtr<K> ring) {
    auto one = Polynomial<K>::constant(ring, 1);
    return Ideal(std::move(ring), {one});
  }
  static Ideal zero(RingPtr<K> ring) { return Ideal(std::move(ring), {}); }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool isZero() const { return gens_.empty(); }

  /// Set when the ideal stands for I^0, the unit ideal by convention.
  bool unitByConvention() const { return unitByConvention_; }
  Ideal& markUnitByConvention() {
    unitByConvention_ = true;
    return *this;
  }

  /// Reduced Groebner basis, computed once; concurrent callers block until it is complete.
  const GBasis<K>& groebnerBasis() const {
    std::call_once(cache_->once, [this] {
      GroebnerEngine<K> engine(ring_->field(), ring_->termOrder());
      for (const auto& g : gens_) engine.add(g.terms());
      GBasis<K> gb{ring_, {}};
      for (auto& t : engine.reducedBasis()) gb.polys.emplace_back(ring_, std::move(t));
      cache_->gb = std::move(gb);
    });
    return cache_->gb;
  }

  bool contains(const Polynomial<K>& f) const {
    return f.isZero() || normalForm(f, groebnerBasis()).isZero();
  }

  bool isUnit() const {
    const auto& gb = groebnerBasis();
    return gb.size() == 1 && gb.polys.front().degree() == 0;
  }

  std::string toString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].toString();
    return s + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    GBasis<K> gb;
  };
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  bool unitByConvention_ = false;
};

template <class K>
const GBasis<K>& buchberger(const Ideal<K>& i) {
  return i.groebnerBasis();
}

template <class K>
bool contains(const Ideal<K>& i, const Polynomial<K>& f) {
  return i.contains(f);
}

/// Equality of ideals via their reduced Groebner bases.
template <class K>
bool sameIdeal(const Ideal<K>& a, const Ideal<K>& b) {
  const auto& ga = a.groebnerBasis();
  const auto& gb = b.groebnerBasis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga.polys[i] == gb.polys[i])) return false;
  return true;
}

/// Minimal homogeneous generators modulo `seed` (graded Nakayama, degree by degree).
/// The seed vectors only enlarge the submodule; they are never returned.
template <class K>
std::vector<TermVec<K>> minimalGeneratorsModulo(const K& k, const TermOrder& ord,
                                                std::vector<TermVec<K>> gens,
                                                const std::vector<TermVec<K>>& seed = {}) {
  std::erase_if(gens, [](const TermVec<K>& v) { return v.empty(); });
  std::stable_sort(gens.begin(), gens.end(), [&](const TermVec<K>& a, const TermVec<K>& b) {
    return ord.degree(a.front().m) < ord.degree(b.front().m);
  });
  GroebnerEngine<K> engine(k, ord);
  for (const auto& s : seed)
    if (!s.empty()) engine.add(s);
  std::vector<TermVec<K>> out;
  for (auto& g : gens) {
    if (engine.contains(g)) continue;
    engine.add(g);
    out.push_back(std::move(g));
  }
  return out;
}

template <class K>
std::vector<Polynomial<K>> minimalGenerators(const Ideal<K>& i) {
  const auto& ring = i.ring();
  std::vector<TermVec<K>> gens;
  for (const auto& g : i.generators()) gens.push_back(g.terms());
  std::vector<Polynomial<K>> out;
  for (auto& t : minimalGeneratorsModulo(ring->field(), ring->termOrder(), std::move(gens)))
    out.emplace_back(ring, poly::makeMonic(ring->field(), std::move(t)));
  return out;
}

template <class K>
std::vector<int> minimalGeneratorDegrees(const Ideal<K>& i) {
  std::vector<int> out;
  for (const auto& g : minimalGenerators(i)) out.push_back(g.degree());
  return out;
}

/// Product of two ideals, minimalized.
template <class K>
Ideal<K> idealProduct(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal<K>(a.ring(), minimalGenerators(Ideal<K>(a.ring(), std::move(gens))));
}

/// I^t; t = 0 gives the unit ideal with the convention flag set.
template <class K>
Ideal<K> idealPower(const Ideal<K>& i, int t) {
  if (t < 0) throw DomainError("ideal power exponent must be non-negative");
  if (t == 0) return Ideal<K>::unit(i.ring()).markUnitByConvention();
  Ideal<K> result(i.ring(), minimalGenerators(i));
  for (int s = 1; s < t; ++s) result = idealProduct(result, i);
  return result;
}

/// Coefficient-wise Frobenius: sum c m  ->  sum c^q m^q, which equals f^q over GF(p).
template <class K>
Polynomial<K> frobenius(const Polynomial<K>& f, int q) {
  TermVec<K> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int v = 0; v < kMaxVars; ++v) {
      long e = static_cast<long>(t.m.exp[v]) * q;
      if (e > 0xFFFF) throw StructuralError("exponent overflow in Frobenius power");
      m.exp[v] = static_cast<std::uint16_t>(e);
    }
    m.deg = t.m.deg * q;
    out.push_back({m, t.c});
  }
  return Polynomial<K>(f.ring(), std::move(out));
}

/// Returns e with q = p^e, or -1 if q is not a power of p.
inline int frobeniusExponent(long long q, long long p) {
  if (p < 2 || q < 1) return -1;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1 ? e : -1;
}

template <class K>
Ideal<K> frobeniusPower(const Ideal<K>& i, int q) {
  const auto p = i.ring()->field().characteristic();
  if (p == 0) throw DomainError("Frobenius powers need positive characteristic");
  if (frobeniusExponent(q, p) < 0)
    throw DomainError(std::to_string(q) + " is not a power of the characteristic " +
                      std::to_string(p));
  std::vector<Polynomial<K>> gens;
  for (const auto& g : i.generators()) gens.push_back(frobenius(g, q));
  return Ideal<K>(i.ring(), std::move(gens));
}

/// I + J.
template <class K>
Ideal<K> idealSum(const Ideal<K>& a, const Ideal<K>& b) {
  auto gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Ideal<K>(a.ring(), std::move(gens));
}

namespace detail {

template <class K>
TermVec<K> withVariable(const TermVec<K>& f, int var, const MonomialLayout& layout) {
  TermVec<K> out;
  Monomial u = variable(var, layout);
  for (const auto& t : f) out.push_back({t.m * u, t.c});
  return out;
}

}  // namespace detail

/// I ∩ J = <uI, (1-u)J> ∩ S, with u of weight 0 eliminated by a lex block.
template <class K>
Ideal<K> idealIntersection(const Ideal<K>& a, const Ideal<K>& b) {
  Polynomial<K>::checkSameRing(Polynomial<K>(a.ring()), Polynomial<K>(b.ring()));
  const auto& ring = a.ring();
  if (a.isZero() || b.isZero()) return Ideal<K>::zero(ring);
  if (a.isUnit()) return b;
  if (b.isUnit()) return a;
  const int n = ring->nvars();
  if (n + 1 > kMaxVars) throw StructuralError("no room for the elimination variable");
  const K& k = ring->field();
  MonomialLayout layout{n + 1, 1};
  TermOrder ord(layout, ring->order());
  GroebnerEngine<K> engine(k, ord);
  for (const auto& f : a.groebnerBasis().polys) engine.add(detail::withVariable(f.terms(), n, layout));
  for (const auto& g : b.groebnerBasis().polys) {
    TermVec<K> ug = detail::withVariable(g.terms(), n, layout);
    engine.add(poly::sub(k, ord, poly::resort(ord, g.terms()), ug));
  }
  std::vector<Polynomial<K>> gens;
  for (auto& v : engine.reducedBasis()) {
    if (v.front().m.exp[n] != 0) continue;
    gens.emplace_back(ring, poly::resort(ring->termOrder(), std::move(v)));
  }
  return Ideal<K>(ring, std::move(gens));
}

/// Exact quotient h / g; throws if g does not divide h.
template <class K>
Polynomial<K> exactDivide(const Polynomial<K>& h, const Polynomial<K>& g) {
  if (g.isZero()) throw DomainError("division by the zero polynomial");
  const auto& ring = h.ring();
  const K& k = ring->field();
  const auto& ord = ring->termOrder();
  TermVec<K> rest = h.terms(), quot;
  const auto& lead = g.terms().front();
  auto inv = k.inv(lead.c);
  while (!rest.empty()) {
    if (!divides(lead.m, rest.front().m))
      throw InternalConsistencyError("inexact polynomial division");
    Monomial q = quotient(rest.front().m, lead.m);
    auto c = k.mul(rest.front().c, inv);
    quot.push_back({q, c});
    rest = poly::axpy(k, ord, rest, k.neg(c), q, g.terms());
  }
  return Polynomial<K>(ring, std::move(quot));
}

/// (I : g) = (I ∩ (g)) / g.
template <class K>
Ideal<K> idealQuotient(const Ideal<K>& i, const Polynomial<K>& g) {
  if (g.isZero()) return Ideal<K>::unit(i.ring());
  Ideal<K> meet = idealIntersection(i, Ideal<K>(i.ring(), {g}));
  std::vector<Polynomial<K>> gens;
  for (const auto& h : meet.generators()) gens.push_back(exactDivide(h, g));
  return Ideal<K>(i.ring(), std::move(gens));
}

/// (I : J) = ∩_g (I : g) over the generators of J; (I : 0) is the unit ideal.
template <class K>
Ideal<K> idealColon(const Ideal<K>& i, const Ideal<K>& j) {
  Polynomial<K>::checkSameRing(Polynomial<K>(i.ring()), Polynomial<K>(j.ring()));
  if (j.isZero() || i.isUnit()) return Ideal<K>::unit(i.ring());
  std::optional<Ideal<K>> acc;
  for (const auto& g : minimalGenerators(j)) {
    Ideal<K> part = idealQuotient(i, g);
    acc = acc ? idealIntersection(*acc, part) : part;
    if (acc->isZero()) break;
  }
  return Ideal<K>(i.ring(), minimalGenerators(*acc));
}

/// dim_k (S/I)_d.
template <class K>
long long hilbertFunction(const Ideal<K>& i, int d) {
  if (d < 0) return 0;
  return countStandardMonomials(i.ring()->nvars(), d, i.groebnerBasis().leadingMonomials());
}

/// dim_k I_d.
template <class K>
long long idealHilbertFunction(const Ideal<K>& i, int d) {
  if (d < 0) return 0;
  return countStandardMonomials(i.ring()->nvars(), d, {}) - hilbertFunction(i, d);
}

/// Krull dimension of S/I; -1 for the unit ideal.
template <class K>
int krullDimension(const Ideal<K>& i) {
  return monomialDimension(i.ring()->nvars(), i.groebnerBasis().leadingMonomials());
}

}  // namespace socle
