#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

inline constexpr int kNoDegreeLimit = std::numeric_limits<int>::max();

namespace detail {

/// Division by a fixed list of monic module vectors.
template <class K>
class Reducer {
 public:
  Reducer(K field, TermOrder order) : k_(std::move(field)), ord_(std::move(order)) {}

  const TermOrder& order() const { return ord_; }
  const K& field() const { return k_; }

  /// Registers a monic divisor; returns its slot.
  int add(TermVec<K> g) {
    Entry e;
    e.lt = g.front().m;
    e.mask = e.lt.supportMask();
    e.poly = std::move(g);
    entries_.push_back(std::move(e));
    int slot = static_cast<int>(entries_.size()) - 1;
    if (static_cast<int>(byComp_.size()) <= entries_[slot].lt.comp)
      byComp_.resize(entries_[slot].lt.comp + 1);
    byComp_[entries_[slot].lt.comp].push_back(slot);
    return slot;
  }

  void deactivate(int slot) {
    auto& list = byComp_[entries_[slot].lt.comp];
    list.erase(std::remove(list.begin(), list.end(), slot), list.end());
    entries_[slot].active = false;
  }

  bool active(int slot) const { return entries_[slot].active; }
  const TermVec<K>& poly(int slot) const { return entries_[slot].poly; }
  const Monomial& lt(int slot) const { return entries_[slot].lt; }
  void replace(int slot, TermVec<K> g) { entries_[slot].poly = std::move(g); }
  int size() const { return static_cast<int>(entries_.size()); }

  int findDivisor(const Monomial& m) const {
    if (m.comp >= byComp_.size()) return -1;
    const std::uint32_t mask = m.supportMask();
    for (int slot : byComp_[m.comp]) {
      const Entry& e = entries_[slot];
      if ((e.mask & ~mask) == 0 && divides(e.lt, m)) return slot;
    }
    return -1;
  }

  /// Normal form; with `full == false` only the leading term is reduced.
  TermVec<K> reduce(TermVec<K> f, bool full = true, int skipSlot = -1) const {
    TermVec<K> out;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Monomial& m = f[pos].m;
      int slot = findDivisor(m);
      if (slot == skipSlot && slot >= 0) slot = findDivisorExcept(m, skipSlot);
      if (slot < 0) {
        if (!full) {
          out.insert(out.end(), f.begin() + pos, f.end());
          return out;
        }
        out.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      const Entry& e = entries_[slot];
      Monomial q = quotient(m, e.lt);
      auto c = k_.neg(f[pos].c);
      f = subtractTail(f, pos, c, q, e.poly);
      pos = 0;
    }
    return out;
  }

 private:
  struct Entry {
    TermVec<K> poly;
    Monomial lt;
    std::uint32_t mask = 0;
    bool active = true;
  };

  int findDivisorExcept(const Monomial& m, int skip) const {
    const std::uint32_t mask = m.supportMask();
    for (int slot : byComp_[m.comp]) {
      if (slot == skip) continue;
      const Entry& e = entries_[slot];
      if ((e.mask & ~mask) == 0 && divides(e.lt, m)) return slot;
    }
    return -1;
  }

  /// f[pos+1..] + c*q*g[1..]; the leading terms cancel by construction.
  TermVec<K> subtractTail(const TermVec<K>& f, std::size_t pos, const typename K::value_type& c,
                          const Monomial& q, const TermVec<K>& g) const {
    TermVec<K> out;
    out.reserve(f.size() - pos + g.size());
    std::size_t i = pos + 1, j = 1;
    while (i < f.size() && j < g.size()) {
      Monomial gm = g[j].m * q;
      int cmp = ord_.compare(f[i].m, gm);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, k_.mul(c, g[j].c)});
        ++j;
      } else {
        auto s = k_.add(f[i].c, k_.mul(c, g[j].c));
        if (!k_.isZero(s)) out.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].m * q, k_.mul(c, g[j].c)});
    return out;
  }

  K k_;
  TermOrder ord_;
  std::vector<Entry> entries_;
  std::vector<std::vector<int>> byComp_;
};

}  // namespace detail

/// Incremental Buchberger for homogeneous submodules of a graded free module.
///
/// Generators may be added at any time. Pairs are processed by increasing
/// degree (normal selection), pruned with the Gebauer-Moeller criteria, and
/// `complete(D)` leaves a basis that is a Groebner basis in degrees <= D.
template <class K>
class GroebnerEngine {
 public:
  GroebnerEngine(K field, TermOrder order)
      : k_(field), ord_(order), basis_(std::move(field), std::move(order)),
        productCriterion_(ord_.ringOrder()) {}

  const TermOrder& order() const { return ord_; }
  const K& field() const { return k_; }

  void add(TermVec<K> v) {
    if (v.empty()) return;
    if (!poly::isHomogeneous(ord_, v)) throw StructuralError("generator is not homogeneous");
    pending_.push_back(std::move(v));
    if (ord_.degree(pending_.back().front().m) <= completedTo_)
      completedTo_ = ord_.degree(pending_.back().front().m) - 1;
  }

  void complete(int upto = kNoDegreeLimit) {
    while (true) {
      int next = nextDegree();
      if (next == kNoDegreeLimit || next > upto) break;
      processDegree(next);
    }
    if (upto > completedTo_) completedTo_ = upto;
  }

  /// Full normal form against the current basis.
  TermVec<K> reduce(TermVec<K> f) const { return basis_.reduce(std::move(f)); }

  /// Membership of a homogeneous vector; completes the basis up to its degree.
  bool contains(const TermVec<K>& f) {
    if (f.empty()) return true;
    complete(ord_.degree(f.front().m));
    return basis_.reduce(f, false).empty();
  }

  /// The current active elements (a GB in degrees <= the completed degree).
  std::vector<TermVec<K>> basis() const {
    std::vector<TermVec<K>> out;
    for (int s = 0; s < basis_.size(); ++s)
      if (basis_.active(s)) out.push_back(basis_.poly(s));
    return out;
  }

  std::vector<Monomial> leadingMonomials() const {
    std::vector<Monomial> out;
    for (int s = 0; s < basis_.size(); ++s)
      if (basis_.active(s)) out.push_back(basis_.lt(s));
    return out;
  }

  /// Reduced Groebner basis, monic, sorted by increasing leading term.
  std::vector<TermVec<K>> reducedBasis() {
    complete();
    std::vector<int> slots;
    for (int s = 0; s < basis_.size(); ++s)
      if (basis_.active(s)) slots.push_back(s);
    for (int s : slots) {
      TermVec<K> g = basis_.poly(s);
      TermVec<K> tail(g.begin() + 1, g.end());
      TermVec<K> reduced = basis_.reduce(std::move(tail), true, s);
      reduced.insert(reduced.begin(), g.front());
      basis_.replace(s, std::move(reduced));
    }
    std::sort(slots.begin(), slots.end(),
              [&](int a, int b) { return ord_.greater(basis_.lt(b), basis_.lt(a)); });
    std::vector<TermVec<K>> out;
    for (int s : slots) out.push_back(basis_.poly(s));
    return out;
  }

  int completedDegree() const { return completedTo_; }

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
  };

  int nextDegree() const {
    int d = kNoDegreeLimit;
    for (const auto& g : pending_) d = std::min(d, ord_.degree(g.front().m));
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    return d;
  }

  void processDegree(int d) {
    std::vector<TermVec<K>> gens;
    for (auto it = pending_.begin(); it != pending_.end();) {
      if (ord_.degree(it->front().m) == d) {
        gens.push_back(std::move(*it));
        it = pending_.erase(it);
      } else {
        ++it;
      }
    }
    std::vector<Pair> batch;
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (it->degree == d) {
        batch.push_back(*it);
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    std::sort(batch.begin(), batch.end(),
              [&](const Pair& a, const Pair& b) { return ord_.greater(b.lcm, a.lcm); });
    for (auto& g : gens) insert(basis_.reduce(std::move(g)));
    for (const auto& p : batch) insert(basis_.reduce(sPolynomial(p)));
  }

  TermVec<K> sPolynomial(const Pair& p) const {
    const TermVec<K>& f = basis_.poly(p.i);
    const TermVec<K>& g = basis_.poly(p.j);
    Monomial qf = quotient(p.lcm, f.front().m);
    Monomial qg = quotient(p.lcm, g.front().m);
    TermVec<K> a = poly::mulTerm(k_, f, qf, k_.one());
    return poly::axpy(k_, ord_, a, k_.neg(k_.one()), qg, g);
  }

  void insert(TermVec<K> h) {
    if (h.empty()) return;
    h = poly::makeMonic(k_, std::move(h));
    const Monomial lt = h.front().m;
    const auto& layout = ord_.layout();

    // Gebauer-Moeller update (Becker-Weispfenning UPDATE).
    std::vector<int> candidates;
    for (int s = 0; s < basis_.size(); ++s)
      if (basis_.active(s) && basis_.lt(s).comp == lt.comp) candidates.push_back(s);

    struct Cand {
      int slot;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (int s : candidates)
      c.push_back({s, socle::lcm(lt, basis_.lt(s), layout),
                   productCriterion_ && socle::coprime(lt, basis_.lt(s))});

    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (divides(c[b].lcm, c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (divides(d[b].lcm, c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }

    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      bool drop = divides(lt, p.lcm) &&
                  !(socle::lcm(basis_.lt(p.i), lt, layout) == p.lcm) &&
                  !(socle::lcm(lt, basis_.lt(p.j), layout) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    pairs_ = std::move(kept);

    for (int s = 0; s < basis_.size(); ++s)
      if (basis_.active(s) && divides(lt, basis_.lt(s))) basis_.deactivate(s);

    int slot = basis_.add(std::move(h));
    for (const auto& e : d)
      if (!e.coprime) pairs_.push_back({e.slot, slot, e.lcm, ord_.degree(e.lcm)});
  }

  K k_;
  TermOrder ord_;
  detail::Reducer<K> basis_;
  bool productCriterion_;
  std::vector<TermVec<K>> pending_;
  std::vector<Pair> pairs_;
  int completedTo_ = std::numeric_limits<int>::min();
};

}  // namespace socle
