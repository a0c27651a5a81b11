#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "socle/resolution.hpp"

namespace socle {

namespace detail {

/// Row `row` of a map, as a vector of the dual of its source.
template <class K>
TermVec<K> rowVector(const GradedMatrix<K>& d, int row, const TermOrder& dualOrd) {
  TermVec<K> out;
  const auto& cols = d.columns();
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& t : cols[j])
      if (t.m.comp == row) {
        Term<K> e = t;
        e.m.comp = static_cast<std::uint16_t>(j);
        out.push_back(e);
      }
  return poly::resort(dualOrd, std::move(out));
}

inline std::vector<int> dualTwists(const GradedFreeModule& f, int n) {
  std::vector<int> out;
  for (int t : f.twists) out.push_back(n - t);
  return out;
}

}  // namespace detail

/// Ext^i_S(M, S(-n)) from a complete minimal resolution of M over S.
template <class K>
ModulePresentation<K> extDual(int i, const Resolution<K>& res, const RingPtr<K>& ring) {
  const int n = ring->nvars();
  const int p = res.length();
  if (i < 0 || i > p) return ModulePresentation<K>::free(ring, {});
  std::vector<int> here = detail::dualTwists(res.modules[i], n);
  TermOrder hereOrd = ring->moduleOrder(here);
  std::vector<TermVec<K>> kernel;
  if (i < p) {
    const auto& d = res.maps[i];  // F_{i+1} -> F_i
    std::vector<int> next = detail::dualTwists(res.modules[i + 1], n);
    TermOrder nextOrd = ring->moduleOrder(next);
    std::vector<TermVec<K>> cols;
    for (int l = 0; l < res.modules[i].rank(); ++l) cols.push_back(detail::rowVector(d, l, nextOrd));
    kernel = syzygyVectors(ring, next, here, cols);
  } else {
    for (int l = 0; l < res.modules[i].rank(); ++l) {
      Monomial e;
      e.comp = static_cast<std::uint16_t>(l);
      kernel.push_back({{e, ring->field().one()}});
    }
  }
  std::vector<TermVec<K>> image;
  if (i >= 1) {
    const auto& d = res.maps[i - 1];  // F_i -> F_{i-1}
    for (int l = 0; l < res.modules[i - 1].rank(); ++l) {
      auto v = detail::rowVector(d, l, hereOrd);
      if (!v.empty()) image.push_back(std::move(v));
    }
  }
  return subquotient(ring, here, std::move(kernel), image).module;
}

template <class K>
ModulePresentation<K> extDual(int i, const ModulePresentation<K>& m) {
  return extDual(i, minimalFreeResolution(m), m.ring());
}

/// Graded Matlis-dual data of H^j_m(M), one entry per j in [0, dim M].
struct SocleEntry {
  int j;
  Degree lcEnd;      // end(H^j): -(least minimal generator degree of the dual Ext)
  Degree socleBeg;   // -(largest minimal generator degree of the dual Ext)
  std::vector<int> dualGeneratorDegrees;
};

struct SocleReport {
  int dimension = -1;
  std::vector<SocleEntry> entries;

  const SocleEntry& at(int j) const {
    for (const auto& e : entries)
      if (e.j == j) return e;
    throw DomainError("cohomological index " + std::to_string(j) + " outside [0, dim M]");
  }
};

inline SocleEntry socleEntryFromDual(int j, std::vector<int> degs) {
  std::sort(degs.begin(), degs.end());
  SocleEntry e{j, kMinusInfinity, kPlusInfinity, degs};
  if (!degs.empty()) {
    e.lcEnd = -degs.front();
    e.socleBeg = -degs.back();
  }
  return e;
}

template <class K>
SocleReport socleReport(const ModulePresentation<K>& m) {
  SocleReport out;
  out.dimension = moduleDimension(m);
  if (out.dimension < 0) return out;
  auto res = minimalFreeResolution(m);
  const int n = m.ring()->nvars();
  for (int j = 0; j <= out.dimension; ++j) {
    auto e = extDual(n - j, res, m.ring());
    out.entries.push_back(socleEntryFromDual(j, e.generatorTwists()));
  }
  return out;
}

/// end(H^j_m(M)); -inf when it vanishes.
template <class K>
Degree lcEnd(int j, const ModulePresentation<K>& m) {
  const int n = m.ring()->nvars();
  if (j < 0 || j > n) return kMinusInfinity;
  return socleEntryFromDual(j, extDual(n - j, m).generatorTwists()).lcEnd;
}

/// Least degree of a socle element of H^j_m(M); +inf when it vanishes.
template <class K>
Degree socleBegin(int j, const ModulePresentation<K>& m) {
  const int n = m.ring()->nvars();
  if (j < 0 || j > n) return kPlusInfinity;
  return socleEntryFromDual(j, extDual(n - j, m).generatorTwists()).socleBeg;
}

/// depth M = n - pd M; +inf for the zero module.
template <class K>
Degree depth(const ModulePresentation<K>& m) {
  auto res = minimalFreeResolution(m);
  int pd = projectiveDimension(res);
  return pd < 0 ? kPlusInfinity : m.ring()->nvars() - pd;
}

/// Castelnuovo-Mumford regularity, computed from the Betti table and from local
/// cohomology; a disagreement is an internal error.
template <class K>
Degree regularity(const ModulePresentation<K>& m) {
  auto res = minimalFreeResolution(m);
  Degree fromBetti = res.betti.regularity();
  Degree fromLc = kMinusInfinity;
  const int n = m.ring()->nvars();
  for (int j = 0; j <= n; ++j) {
    auto degs = extDual(n - j, res, m.ring()).generatorTwists();
    if (degs.empty()) continue;
    fromLc = std::max(fromLc, -*std::min_element(degs.begin(), degs.end()) + j);
  }
  if (fromBetti != fromLc)
    throw InternalConsistencyError("regularity from Betti numbers (" + degreeToString(fromBetti) +
                                   ") differs from local cohomology (" + degreeToString(fromLc) + ")");
  return fromBetti;
}

/// A value computed as a limit of Koszul cohomology, with its stabilization status.
struct OracleValue {
  long long value = 0;
  bool stable = false;
  int power = 0;  // exponent s at which stability was observed

  long long require() const {
    if (!stable)
      throw UnstableLimit("Koszul limit did not stabilize up to the exponent bound; increase sMax");
    return value;
  }
};

/// Direct limit of Koszul cohomology H^j(x^s; M)_ℓ over s, degree by degree.
/// Independent of the duality route; used to cross-check it.
template <class K>
class KoszulOracle {
 public:
  explicit KoszulOracle(ModulePresentation<K> m)
      : pieces_(m), n_(m.ring()->nvars()), k_(m.ring()->field()) {
    for (const auto& v : m.relationBasis())
      maxRelationDegree_ = std::max(maxRelationDegree_, m.order().degree(v.front().m));
    auto degs = minimalGeneratorDegrees(m);
    beg_ = degs.empty() ? 0 : degs.front();
    for (int mask = 0; mask < (1 << n_); ++mask) subsets_[__builtin_popcount(mask)].push_back(mask);
  }

  /// dim H^j_m(M)_ℓ.
  OracleValue dimension(int j, int l, int sMax = 24) const {
    OracleValue out;
    int s = firstPower(j, l);
    if (s + 2 > sMax) return out;
    auto h = cohomology(j, l, s);
    int streak = 0;
    for (; s + 1 <= sMax; ++s) {
      auto next = cohomology(j, l, s + 1);
      long long dimH = h.dim();
      streak = transitionIsIso(j, l, s, h, next) ? streak + 1 : 0;
      out.value = dimH;
      if (streak >= 2) {
        out.stable = true;
        out.power = s - 1;
        return out;
      }
      h = std::move(next);
    }
    return out;
  }

  /// dim of the socle (0 :_{H} m) in degree ℓ of H = H^j_m(M).
  OracleValue socle(int j, int l, int sMax = 24) const {
    auto here = dimension(j, l, sMax);
    auto above = dimension(j, l + 1, sMax);
    OracleValue out;
    if (!here.stable || !above.stable) return out;
    int s = std::max(here.power, above.power) + 1;
    if (s > sMax) return out;
    auto h = cohomology(j, l, s);
    auto hUp = cohomology(j, l + 1, s);
    const auto& z = h.kernel;
    if (z.cols() == 0) {
      out.stable = true;
      out.power = s;
      return out;
    }
    // unknowns: coordinates c on the cycle basis, then y_i with x_i z c = B_{ℓ+1} y_i
    const std::size_t nb = hUp.boundary.cols();
    const std::size_t rowsUp = hUp.boundary.rows();
    DenseMatrix<K> sys(k_, rowsUp * n_, z.cols() + nb * n_);
    for (int v = 0; v < n_; ++v) {
      auto xz = multiplyCochain(j, l, s, v) * z;
      for (std::size_t r = 0; r < rowsUp; ++r) {
        for (std::size_t c = 0; c < z.cols(); ++c) sys.at(v * rowsUp + r, c) = xz.at(r, c);
        for (std::size_t c = 0; c < nb; ++c)
          sys.at(v * rowsUp + r, z.cols() + v * nb + c) = k_.neg(hUp.boundary.at(r, c));
      }
    }
    auto null = sys.nullspace();
    DenseMatrix<K> proj(k_, z.cols(), null.cols());
    for (std::size_t r = 0; r < z.cols(); ++r)
      for (std::size_t c = 0; c < null.cols(); ++c) proj.at(r, c) = null.at(r, c);
    out.value = static_cast<long long>(proj.rank()) - static_cast<long long>(h.boundaryRank);
    out.stable = true;
    out.power = s;
    return out;
  }

 private:
  struct Cohomology {
    DenseMatrix<K> kernel;    // columns: basis of cycles in C^j_ℓ
    DenseMatrix<K> boundary;  // columns span the boundaries in C^j_ℓ
    std::size_t boundaryRank;

    long long dim() const {
      return static_cast<long long>(kernel.cols()) - static_cast<long long>(boundaryRank);
    }
  };

  int firstPower(int j, int l) const {
    int s = 1;
    const int step = std::max(j, 1);
    while (l + s * step < maxRelationDegree_ || (j > 0 && l + s * j < beg_)) ++s;
    return s;
  }

  std::size_t cochainDim(int j, int l, int s) const {
    if (j < 0 || j > n_) return 0;
    return subsets_[j].size() * pieces_.dim(l + s * j);
  }

  TermVec<K> monomialTerm(const std::vector<int>& exps) const {
    Monomial m = makeMonomial(std::span<const int>(exps), pieces_.module().ring()->layout());
    return {{m, k_.one()}};
  }

  /// Differential C^j(s)_ℓ -> C^{j+1}(s)_ℓ.
  DenseMatrix<K> differential(int j, int l, int s) const {
    DenseMatrix<K> out(k_, cochainDim(j + 1, l, s), cochainDim(j, l, s));
    if (j < 0 || j >= n_) return out;
    const std::size_t srcDim = pieces_.dim(l + s * j), tgtDim = pieces_.dim(l + s * (j + 1));
    if (srcDim == 0 || tgtDim == 0) return out;
    const auto& src = subsets_[j];
    const auto& tgt = subsets_[j + 1];
    for (std::size_t a = 0; a < src.size(); ++a)
      for (int v = 0; v < n_; ++v) {
        if (src[a] & (1 << v)) continue;
        int target = src[a] | (1 << v);
        std::size_t b = std::find(tgt.begin(), tgt.end(), target) - tgt.begin();
        bool negative = __builtin_popcount(src[a] & ((1 << v) - 1)) % 2;
        std::vector<int> exps(n_, 0);
        exps[v] = s;
        auto block = pieces_.mulMatrix(monomialTerm(exps), s, l + s * j);
        for (std::size_t r = 0; r < tgtDim; ++r)
          for (std::size_t c = 0; c < srcDim; ++c) {
            auto val = block.at(r, c);
            out.at(b * tgtDim + r, a * srcDim + c) = negative ? k_.neg(val) : val;
          }
      }
    return out;
  }

  /// Transition C^j(s)_ℓ -> C^j(s+1)_ℓ: multiplication by x_J on the J-summand.
  DenseMatrix<K> transition(int j, int l, int s) const {
    const std::size_t srcDim = pieces_.dim(l + s * j), tgtDim = pieces_.dim(l + (s + 1) * j);
    const auto& subs = subsets_[j];
    DenseMatrix<K> out(k_, subs.size() * tgtDim, subs.size() * srcDim);
    for (std::size_t a = 0; a < subs.size(); ++a) {
      std::vector<int> exps(n_, 0);
      for (int v = 0; v < n_; ++v) exps[v] = (subs[a] >> v) & 1;
      auto block = pieces_.mulMatrix(monomialTerm(exps), j, l + s * j);
      for (std::size_t r = 0; r < tgtDim; ++r)
        for (std::size_t c = 0; c < srcDim; ++c) out.at(a * tgtDim + r, a * srcDim + c) = block.at(r, c);
    }
    return out;
  }

  /// Multiplication by x_v: C^j(s)_ℓ -> C^j(s)_{ℓ+1}.
  DenseMatrix<K> multiplyCochain(int j, int l, int s, int v) const {
    const std::size_t srcDim = pieces_.dim(l + s * j), tgtDim = pieces_.dim(l + 1 + s * j);
    const auto& subs = subsets_[j];
    DenseMatrix<K> out(k_, subs.size() * tgtDim, subs.size() * srcDim);
    std::vector<int> exps(n_, 0);
    exps[v] = 1;
    auto block = pieces_.mulMatrix(monomialTerm(exps), 1, l + s * j);
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t r = 0; r < tgtDim; ++r)
        for (std::size_t c = 0; c < srcDim; ++c) out.at(a * tgtDim + r, a * srcDim + c) = block.at(r, c);
    return out;
  }

  Cohomology cohomology(int j, int l, int s) const {
    auto dOut = differential(j, l, s);
    auto kernel = dOut.nullspace();
    DenseMatrix<K> boundary = j >= 1 ? differential(j - 1, l, s) : DenseMatrix<K>(k_, cochainDim(j, l, s), 0);
    std::size_t rank = boundary.rank();
    return {std::move(kernel), std::move(boundary), rank};
  }

  /// Whether H^j(s)_ℓ -> H^j(s+1)_ℓ is an isomorphism. T maps boundaries to boundaries,
  /// so it is injective iff rank(T Z + B') - rank(B') equals dim H^j(s).
  bool transitionIsIso(int j, int l, int s, const Cohomology& h, const Cohomology& next) const {
    if (next.dim() != h.dim()) return false;
    auto image = transition(j, l, s) * h.kernel;
    auto joined = DenseMatrix<K>::hconcat(image, next.boundary);
    return static_cast<long long>(joined.rank()) - static_cast<long long>(next.boundaryRank) == h.dim();
  }

  GradedPieces<K> pieces_;
  int n_;
  K k_;
  Degree maxRelationDegree_ = 0;
  Degree beg_ = 0;
  std::vector<int> subsets_[15];
};

/// Ext^i_R(k, N) lives in degrees >= -en(Tor_i^R(k, N^∨)); this returns that bound for
/// N = H^j_m(M) using the graded dual Ext_S^{n-j}(M, S(-n)). +inf when the Tor vanishes.
template <class K>
Degree extKBegin(const RingPresentation<K>& r, int i, int j, const ModulePresentation<K>& m,
                 const Resolution<K>* mRes = nullptr) {
  const int n = r.nvars();
  auto dual = mRes ? extDual(n - j, *mRes, r.polyRing()) : extDual(n - j, m);
  if (isZeroModule(dual)) return kPlusInfinity;
  auto tor = torK(r, i, dual.overRing(r.relations()));
  if (tor.empty()) return kPlusInfinity;
  return -tor.rbegin()->first;
}

/// extKBegin(i, j, M) for i = 0..iMax from one resolution of the dual module.
template <class K>
std::vector<Degree> extKBegins(const RingPresentation<K>& r, int j, const Resolution<K>& mRes, int iMax) {
  std::vector<Degree> out(iMax + 1, kPlusInfinity);
  auto dual = extDual(r.nvars() - j, mRes, r.polyRing());
  if (isZeroModule(dual)) return out;
  auto res = truncatedResolutionOverR(r, dual.overRing(r.relations()), iMax);
  for (int i = 0; i <= iMax && i <= res.length(); ++i) {
    const auto& t = res.modules[i].twists;
    if (!t.empty()) out[i] = -*std::max_element(t.begin(), t.end());
  }
  return out;
}

/// α_i(R): the largest twist in homological degree i of the minimal resolution of k over R;
/// -inf when that module vanishes.
template <class K>
Degree alphaMax(const RingPresentation<K>& r, int i) {
  auto res = truncatedResolutionOverR(r, residueField(r), i);
  return res.maxTwist(i);
}

}  // namespace socle
