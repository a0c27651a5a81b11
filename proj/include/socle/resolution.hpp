#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "socle/module.hpp"

namespace socle {

/// β_{i,j}: rank of the degree-j part of the i-th free module.
class BettiTable {
 public:
  void add(int i, int j, int count = 1) {
    if (count) table_[{i, j}] += count;
  }
  int at(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? 0 : it->second;
  }
  const std::map<std::pair<int, int>, int>& entries() const { return table_; }
  int length() const {
    int l = -1;
    for (const auto& [key, v] : table_) l = std::max(l, key.first);
    return l;
  }
  /// max_{i,j} (j - i) over nonzero entries; -inf if empty.
  Degree regularity() const {
    Degree r = kMinusInfinity;
    for (const auto& [key, v] : table_) r = std::max(r, key.second - key.first);
    return r;
  }
  std::vector<int> degrees(int i) const {
    std::vector<int> out;
    for (const auto& [key, v] : table_)
      if (key.first == i)
        for (int c = 0; c < v; ++c) out.push_back(key.second);
    return out;
  }

  /// Macaulay-style display: rows j - i, columns i.
  std::string toString() const {
    if (table_.empty()) return "(zero)\n";
    int lo = 1 << 30, hi = -(1 << 30), len = length();
    for (const auto& [key, v] : table_) {
      lo = std::min(lo, key.second - key.first);
      hi = std::max(hi, key.second - key.first);
    }
    std::string s = "      ";
    for (int i = 0; i <= len; ++i) s += std::to_string(i) + std::string(6 - std::to_string(i).size(), ' ');
    s += "\n";
    for (int r = lo; r <= hi; ++r) {
      std::string label = std::to_string(r) + ":";
      s += label + std::string(6 - label.size(), ' ');
      for (int i = 0; i <= len; ++i) {
        int v = at(i, i + r);
        std::string cell = v ? std::to_string(v) : "-";
        s += cell + std::string(6 - cell.size(), ' ');
      }
      s += "\n";
    }
    return s;
  }

 private:
  std::map<std::pair<int, int>, int> table_;
};

/// F_0 <- F_1 <- ... ; maps[i] is d_{i+1}: F_{i+1} -> F_i.
template <class K>
struct Resolution {
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMatrix<K>> maps;
  BettiTable betti;
  bool complete = true;  // false when cut off at the requested number of steps

  int length() const { return static_cast<int>(modules.size()) - 1; }
  /// α_i: largest twist of F_i.
  int maxTwist(int i) const {
    if (i > length()) {
      if (complete) return kMinusInfinity;
      throw InsufficientTruncation("homological index " + std::to_string(i) +
                                   " exceeds the computed truncation " + std::to_string(length()));
    }
    const auto& t = modules[i].twists;
    return t.empty() ? kMinusInfinity : *std::max_element(t.begin(), t.end());
  }
};

namespace detail {

template <class K>
void recordModule(Resolution<K>& res, GradedFreeModule f) {
  int i = static_cast<int>(res.modules.size());
  for (int t : f.twists) res.betti.add(i, t);
  res.modules.push_back(std::move(f));
}

}  // namespace detail

/// Minimal graded free resolution over S; stops at the first zero syzygy module.
template <class K>
Resolution<K> minimalFreeResolution(const ModulePresentation<K>& m, int maxLength = -1) {
  ModulePresentation<K> p = prune(ModulePresentation<K>(m.ring(), m.generatorTwists(), m.relations()));
  const auto& ring = p.ring();
  Resolution<K> res;
  detail::recordModule(res, GradedFreeModule{p.generatorTwists()});
  if (p.relations().empty()) return res;
  TermOrder ord = p.order();
  GradedFreeModule f1 = degreesOf(ord, p.relations());
  GradedMatrix<K> d(ring, f1, res.modules.back(), p.relations());
  while (true) {
    if (maxLength >= 0 && res.length() >= maxLength) {
      res.complete = false;
      return res;
    }
    detail::recordModule(res, d.source());
    res.maps.push_back(d);
    GradedMatrix<K> next = syzygy(d);
    if (next.source().rank() == 0) break;
    d = std::move(next);
  }
  if (res.length() > ring->nvars())
    throw InternalConsistencyError("resolution over S longer than the number of variables");
  return res;
}

/// First `steps` maps of the minimal graded free resolution of an R-module, R = S / a.
/// All entries are kept reduced modulo a Groebner basis of a.
template <class K>
Resolution<K> truncatedResolutionOverR(const RingPresentation<K>& r, const ModulePresentation<K>& m,
                                       int steps) {
  if (steps < 0) throw DomainError("number of resolution steps must be non-negative");
  const auto& ring = r.polyRing();
  const K& k = ring->field();
  const Ideal<K>& a = r.relations();
  ModulePresentation<K> p = prune(m.overRing(a));
  Resolution<K> res;
  res.complete = false;
  detail::recordModule(res, GradedFreeModule{p.generatorTwists()});

  auto reduceModA = [&](const TermOrder& ord, int rank, TermVec<K> v) {
    if (a.isZero()) return v;
    detail::Reducer<K> red(k, ord);
    for (auto& g : detail::idealTimesFree(a, ord, rank)) red.add(poly::makeMonic(k, std::move(g)));
    return red.reduce(std::move(v));
  };

  // relations over R: minimal modulo a * F0
  TermOrder ord0 = p.order();
  std::vector<TermVec<K>> rels =
      minimalGeneratorsModulo(k, ord0, p.relations(), detail::idealTimesFree(a, ord0, p.rank()));
  for (auto& v : rels) v = reduceModA(ord0, p.rank(), std::move(v));
  std::erase_if(rels, [](const TermVec<K>& v) { return v.empty(); });
  if (rels.empty()) {
    res.complete = true;
    return res;
  }
  GradedMatrix<K> d(ring, degreesOf(ord0, rels), res.modules.back(), rels);
  for (int step = 1; step <= steps; ++step) {
    detail::recordModule(res, d.source());
    res.maps.push_back(d);
    if (step == steps) break;
    // kernel over R of d: first block of syz([d | a * e_k])
    const auto& tgt = d.target().twists;
    const auto& src = d.source().twists;
    TermOrder tgtOrd = ring->moduleOrder(tgt);
    std::vector<TermVec<K>> cols = d.columns();
    std::vector<int> srcTwists = src;
    for (auto& v : detail::idealTimesFree(a, tgtOrd, static_cast<int>(tgt.size()))) {
      srcTwists.push_back(tgtOrd.degree(v.front().m));
      cols.push_back(std::move(v));
    }
    TermOrder srcOrd = ring->moduleOrder(src);
    const int ns = static_cast<int>(src.size());
    std::vector<TermVec<K>> ker;
    for (auto& s : syzygyVectors(ring, tgt, srcTwists, cols)) {
      auto proj = reduceModA(srcOrd, ns, poly::resort(srcOrd, poly::componentSlice(s, 0, ns)));
      if (!proj.empty()) ker.push_back(std::move(proj));
    }
    ker = minimalGeneratorsModulo(k, srcOrd, std::move(ker), detail::idealTimesFree(a, srcOrd, ns));
    if (ker.empty()) {
      res.complete = true;
      break;
    }
    GradedFreeModule kerSource = degreesOf(srcOrd, ker);
    d = GradedMatrix<K>(ring, std::move(kerSource), d.source(), std::move(ker));
  }
  return res;
}

/// The residue field k = R / m as a module.
template <class K>
ModulePresentation<K> residueField(const RingPresentation<K>& r) {
  std::vector<TermVec<K>> rels;
  for (int v = 0; v < r.nvars(); ++v)
    rels.push_back(Polynomial<K>::variable(r.polyRing(), v).terms());
  return ModulePresentation<K>(r.polyRing(), {0}, std::move(rels), r.relations());
}

/// Graded dimensions of Tor_i^R(k, N), read off the minimal resolution of N
/// (Tor_i(k, N) = k ⊗ G_i because the differentials of a minimal resolution vanish mod m).
template <class K>
std::map<int, int> torK(const RingPresentation<K>& r, int i, const ModulePresentation<K>& n) {
  auto res = truncatedResolutionOverR(r, n, i);
  std::map<int, int> out;
  if (i > res.length()) {
    if (res.complete) return out;
    throw InsufficientTruncation("Tor index exceeds the computed truncation");
  }
  for (int t : res.modules[i].twists) ++out[t];
  return out;
}

/// Same dimensions from a precomputed resolution (errors past its truncation).
template <class K>
std::map<int, int> torK(const Resolution<K>& res, int i) {
  std::map<int, int> out;
  if (i > res.length()) {
    if (res.complete) return out;
    throw InsufficientTruncation("Tor index " + std::to_string(i) +
                                 " exceeds the computed truncation " + std::to_string(res.length()));
  }
  for (int t : res.modules[i].twists) ++out[t];
  return out;
}

namespace detail {

/// Matrix of (d ⊗ 1)_ℓ : (F_src ⊗ N)_ℓ -> (F_tgt ⊗ N)_ℓ for a map d with ring-element entries.
template <class K>
DenseMatrix<K> tensorPiece(const GradedMatrix<K>& d, const GradedPieces<K>& n, int l) {
  const K& k = d.ring()->field();
  const auto& src = d.source().twists;
  const auto& tgt = d.target().twists;
  std::vector<std::size_t> srcOff{0}, tgtOff{0};
  for (int s : src) srcOff.push_back(srcOff.back() + n.dim(l - s));
  for (int t : tgt) tgtOff.push_back(tgtOff.back() + n.dim(l - t));
  DenseMatrix<K> out(k, tgtOff.back(), srcOff.back());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      auto e = d.entry(static_cast<int>(i), static_cast<int>(j));
      if (e.isZero()) continue;
      auto block = n.mulMatrix(e.terms(), e.degree(), l - src[j]);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
          out.at(tgtOff[i] + r, srcOff[j] + c) = block.at(r, c);
    }
  return out;
}

}  // namespace detail

/// dim_k Tor_i^R(k, N)_ℓ as the homology of (resolution of k) ⊗ N, degree by degree.
/// Independent of torK; used as its cross-check.
template <class K>
long long torKViaResidueResolution(const Resolution<K>& kRes, int i, const GradedPieces<K>& n, int l) {
  if (i + 1 > static_cast<int>(kRes.maps.size()) && !kRes.complete)
    throw InsufficientTruncation("resolution of k is too short for this Tor index");
  if (i > kRes.length()) return 0;
  std::size_t dimHere = 0;
  for (int t : kRes.modules[i].twists) dimHere += n.dim(l - t);
  std::size_t rankOut = 0, rankIn = 0;
  if (i >= 1) rankOut = detail::tensorPiece(kRes.maps[i - 1], n, l).rank();
  if (i < static_cast<int>(kRes.maps.size())) rankIn = detail::tensorPiece(kRes.maps[i], n, l).rank();
  return static_cast<long long>(dimHere - rankOut - rankIn);
}

/// dim_k Ext^i_R(k, M)_ℓ computed directly as the cohomology of Hom_R(F_•, M).
template <class K>
long long extKDirect(const Resolution<K>& kRes, int i, const GradedPieces<K>& m, int l) {
  if (i + 1 > static_cast<int>(kRes.maps.size()) && !kRes.complete)
    throw InsufficientTruncation("resolution of k is too short for this Ext index");
  if (i > kRes.length()) return 0;
  const K& k = m.module().ring()->field();
  // Hom(F_i, M)_ℓ = ⊕ M_{ℓ + α_{i,s}}; the coboundary is the transpose action of d.
  auto piece = [&](int idx) {
    std::size_t s = 0;
    for (int t : kRes.modules[idx].twists) s += m.dim(l + t);
    return s;
  };
  auto coboundary = [&](int idx) {  // Hom(F_idx, M) -> Hom(F_{idx+1}, M)
    const auto& d = kRes.maps[idx];
    const auto& src = d.source().twists;  // F_{idx+1}
    const auto& tgt = d.target().twists;  // F_idx
    std::vector<std::size_t> inOff{0}, outOff{0};
    for (int t : tgt) inOff.push_back(inOff.back() + m.dim(l + t));
    for (int s : src) outOff.push_back(outOff.back() + m.dim(l + s));
    DenseMatrix<K> out(k, outOff.back(), inOff.back());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i2 = 0; i2 < tgt.size(); ++i2) {
        auto e = d.entry(static_cast<int>(i2), static_cast<int>(j));
        if (e.isZero()) continue;
        auto block = m.mulMatrix(e.terms(), e.degree(), l + tgt[i2]);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c)
            out.at(outOff[j] + r, inOff[i2] + c) = block.at(r, c);
      }
    return out;
  };
  std::size_t dimHere = piece(i);
  std::size_t rankOut = i < static_cast<int>(kRes.maps.size()) ? coboundary(i).rank() : 0;
  std::size_t rankIn = i >= 1 ? coboundary(i - 1).rank() : 0;
  return static_cast<long long>(dimHere - rankOut - rankIn);
}

/// Length of a complete resolution; -1 for the zero module.
template <class K>
int projectiveDimension(const Resolution<K>& res) {
  return res.modules.front().twists.empty() ? -1 : res.length();
}

}  // namespace socle
