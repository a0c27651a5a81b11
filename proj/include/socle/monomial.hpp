#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "socle/error.hpp"

namespace socle {

inline constexpr int kMaxVars = 14;

/// Exponent vector, optionally tagged with a free-module component.
///
/// `deg` caches the weighted degree of the exponent part; it is kept in sync
/// by the helpers below and never includes a component twist.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint16_t comp = 0;
  std::int32_t deg = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::uint32_t supportMask() const {
    std::uint32_t mask = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i]) mask |= 1u << i;
    return mask;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.comp;
    for (auto e : m.exp) h = h * 1000003u ^ e;
    return h;
  }
};

/// Variable count plus the trailing block of weight-0 elimination variables.
struct MonomialLayout {
  int nvars = 0;
  int elim = 0;

  int weightedDegree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nvars - elim; ++i) d += m.exp[i];
    return d;
  }
};

inline Monomial makeMonomial(std::span<const int> exps, const MonomialLayout& layout) {
  if (static_cast<int>(exps.size()) != layout.nvars)
    throw StructuralError("exponent vector has length " + std::to_string(exps.size()) +
                          ", ring has " + std::to_string(layout.nvars) + " variables");
  Monomial m;
  for (int i = 0; i < layout.nvars; ++i) {
    if (exps[i] < 0 || exps[i] > 0xFFFF) throw StructuralError("exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(exps[i]);
  }
  m.deg = layout.weightedDegree(m);
  return m;
}

inline Monomial variable(int index, const MonomialLayout& layout) {
  Monomial m;
  m.exp[index] = 1;
  m.deg = layout.weightedDegree(m);
  return m;
}

/// Product of a (possibly component-tagged) monomial with a ring monomial.
inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 0xFFFF) throw StructuralError("exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.comp = static_cast<std::uint16_t>(a.comp + b.comp);
  m.deg = a.deg + b.deg;
  return m;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.comp != b.comp || a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a as a ring monomial; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  m.deg = b.deg - a.deg;
  return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b, const MonomialLayout& layout) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  m.comp = a.comp;
  m.deg = layout.weightedDegree(m);
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

inline int totalDegree(const Monomial& m) {
  return std::accumulate(m.exp.begin(), m.exp.end(), 0);
}

enum class OrderKind { degrevlex, deglex };

/// A degree-refining monomial order on k[x_1..x_n].
///
/// `permutation[k]` is the index of the k-th most significant variable; empty
/// means the declared variable order.
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::vector<int> permutation;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Term order on a graded free module over a polynomial ring.
///
/// Comparison precedence: elimination block (lex), component block, twisted
/// weighted degree, the base monomial order, then component index.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(MonomialLayout layout, MonomialOrder order, std::vector<int> twists = {},
            std::vector<int> blocks = {})
      : layout_(layout), kind_(order.kind), twists_(std::move(twists)), blocks_(std::move(blocks)) {
    int free = layout_.nvars - layout_.elim;
    if (order.permutation.empty()) {
      perm_.resize(free);
      std::iota(perm_.begin(), perm_.end(), 0);
    } else {
      for (int v : order.permutation)
        if (v < free) perm_.push_back(v);
      if (static_cast<int>(perm_.size()) != free)
        throw StructuralError("monomial order permutation does not match variable count");
    }
  }

  const MonomialLayout& layout() const { return layout_; }
  const std::vector<int>& twists() const { return twists_; }
  int rank() const { return twists_.empty() ? 1 : static_cast<int>(twists_.size()); }
  int twist(int comp) const { return twists_.empty() ? 0 : twists_[comp]; }
  int block(int comp) const { return blocks_.empty() ? 0 : blocks_[comp]; }
  bool ringOrder() const { return twists_.size() <= 1 && blocks_.empty(); }

  /// Degree of a term in the graded free module.
  int degree(const Monomial& m) const { return m.deg + twist(m.comp); }

  int compare(const Monomial& a, const Monomial& b) const {
    for (int v = layout_.nvars - layout_.elim; v < layout_.nvars; ++v)
      if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
    if (!blocks_.empty()) {
      int ba = blocks_[a.comp], bb = blocks_[b.comp];
      if (ba != bb) return ba < bb ? 1 : -1;
    }
    int da = degree(a), db = degree(b);
    if (da != db) return da > db ? 1 : -1;
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    const int free = static_cast<int>(perm_.size());
    if (kind_ == OrderKind::degrevlex) {
      for (int k = free - 1; k >= 0; --k) {
        int v = perm_[k];
        if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
      }
    } else {
      for (int k = 0; k < free; ++k) {
        int v = perm_[k];
        if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
      }
    }
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  MonomialLayout layout_;
  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<int> perm_;
  std::vector<int> twists_;
  std::vector<int> blocks_;
};

inline std::strong_ordering orderCompare(const Monomial& m1, const Monomial& m2, int nvars,
                                         const MonomialOrder& order) {
  TermOrder t(MonomialLayout{nvars, 0}, order);
  int c = t.compare(m1, m2);
  return c > 0 ? std::strong_ordering::greater
               : (c < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

}  // namespace socle
