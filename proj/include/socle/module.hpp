#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "socle/ideal.hpp"
#include "socle/linalg.hpp"
#include "socle/ring.hpp"

namespace socle {

/// ⊕ S(-a_i); the zero module is the empty twist list.
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  int twist(int i) const { return twists[i]; }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Homogeneous map between graded free modules, stored by columns.
/// Column j is a vector of the target, homogeneous of degree source.twist(j).
template <class K>
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(RingPtr<K> ring, GradedFreeModule source, GradedFreeModule target,
               std::vector<TermVec<K>> columns)
      : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)),
        cols_(std::move(columns)) {
    if (static_cast<int>(cols_.size()) != source_.rank())
      throw StructuralError("column count does not match source rank");
    TermOrder ord = targetOrder();
    for (int j = 0; j < source_.rank(); ++j) {
      cols_[j] = poly::resort(ord, std::move(cols_[j]));
      for (const auto& t : cols_[j]) {
        if (t.m.comp >= target_.rank()) throw StructuralError("entry outside the target module");
        if (ord.degree(t.m) != source_.twist(j))
          throw StructuralError("matrix entry is not degree-compatible with the twists");
      }
    }
  }

  /// Builds from entries[row][col] given as ring elements.
  static GradedMatrix fromEntries(RingPtr<K> ring, GradedFreeModule source, GradedFreeModule target,
                                  const std::vector<std::vector<Polynomial<K>>>& entries) {
    std::vector<TermVec<K>> cols(source.rank());
    for (int i = 0; i < target.rank(); ++i)
      for (int j = 0; j < source.rank(); ++j)
        for (const auto& t : entries[i][j].terms()) {
          Term<K> e = t;
          e.m.comp = static_cast<std::uint16_t>(i);
          cols[j].push_back(e);
        }
    return GradedMatrix(std::move(ring), std::move(source), std::move(target), std::move(cols));
  }

  const RingPtr<K>& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const std::vector<TermVec<K>>& columns() const { return cols_; }
  TermOrder targetOrder() const { return ring_->moduleOrder(target_.twists); }

  Polynomial<K> entry(int i, int j) const {
    TermVec<K> e = poly::component(cols_[j], i);
    return Polynomial<K>(ring_, poly::resort(ring_->termOrder(), std::move(e)));
  }

  bool isZero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const TermVec<K>& c) { return c.empty(); });
  }

  /// this ∘ other.
  GradedMatrix compose(const GradedMatrix& other) const {
    if (!(other.target_ == source_)) throw StructuralError("composition of incompatible maps");
    const K& k = ring_->field();
    TermOrder ord = targetOrder();
    std::vector<TermVec<K>> cols;
    for (const auto& c : other.cols_) {
      TermVec<K> acc;
      for (int i = 0; i < source_.rank(); ++i) {
        TermVec<K> coeff = poly::resort(ring_->termOrder(), poly::component(c, i));
        if (coeff.empty()) continue;
        acc = poly::add(k, ord, acc, poly::mul(k, ord, cols_[i], coeff));
      }
      cols.push_back(std::move(acc));
    }
    return GradedMatrix(ring_, other.source_, target_, std::move(cols));
  }

 private:
  RingPtr<K> ring_;
  GradedFreeModule source_, target_;
  std::vector<TermVec<K>> cols_;
};

namespace detail {

/// Vector e_comp * f for a ring element f, sorted in `ord`.
template <class K>
TermVec<K> placeAt(const TermOrder& ord, const TermVec<K>& f, int comp) {
  TermVec<K> out = poly::shiftComponents(f, comp);
  return poly::resort(ord, std::move(out));
}

/// Basis vectors g * e_i for every generator g of `a` and every component i.
template <class K>
std::vector<TermVec<K>> idealTimesFree(const Ideal<K>& a, const TermOrder& ord, int rank) {
  std::vector<TermVec<K>> out;
  if (a.isZero()) return out;
  for (const auto& g : a.groebnerBasis().polys)
    for (int i = 0; i < rank; ++i) out.push_back(placeAt(ord, g.terms(), i));
  return out;
}

}  // namespace detail

/// Kernel generators of the map S^m -> F given by `cols` (vectors of F).
/// Returned vectors live in S^m with twists `sourceTwists`; the set is minimal.
template <class K>
std::vector<TermVec<K>> syzygyVectors(const RingPtr<K>& ring, const std::vector<int>& targetTwists,
                                      const std::vector<int>& sourceTwists,
                                      const std::vector<TermVec<K>>& cols,
                                      const std::vector<TermVec<K>>& seed = {}) {
  const K& k = ring->field();
  const int r = static_cast<int>(targetTwists.size());
  const int m = static_cast<int>(sourceTwists.size());
  TermOrder srcOrd = ring->moduleOrder(sourceTwists);
  std::vector<TermVec<K>> syz;
  if (r == 0) {
    for (int j = 0; j < m; ++j) syz.push_back({{Monomial{}, k.one()}});
    for (int j = 0; j < m; ++j) syz[j].front().m.comp = static_cast<std::uint16_t>(j);
    return minimalGeneratorsModulo(k, srcOrd, std::move(syz), seed);
  }
  std::vector<int> twists = targetTwists;
  twists.insert(twists.end(), sourceTwists.begin(), sourceTwists.end());
  std::vector<int> blocks(r, 0);
  blocks.resize(r + m, 1);
  TermOrder aug = ring->moduleOrder(twists, blocks);
  GroebnerEngine<K> engine(k, aug);
  for (int j = 0; j < m; ++j) {
    TermVec<K> v = cols[j];
    Monomial e;
    e.comp = static_cast<std::uint16_t>(r + j);
    v.push_back({e, k.one()});
    engine.add(poly::resort(aug, std::move(v)));
  }
  engine.complete();
  for (auto& v : engine.basis()) {
    if (v.front().m.comp < r) continue;
    syz.push_back(poly::resort(srcOrd, poly::componentSlice(v, r, r + m)));
  }
  return minimalGeneratorsModulo(k, srcOrd, std::move(syz), seed);
}

template <class K>
GradedFreeModule degreesOf(const TermOrder& ord, const std::vector<TermVec<K>>& vecs) {
  GradedFreeModule f;
  for (const auto& v : vecs) f.twists.push_back(ord.degree(v.front().m));
  return f;
}

/// Generators of ker M as the columns of a map into M.source().
template <class K>
GradedMatrix<K> syzygy(const GradedMatrix<K>& m) {
  auto vecs = syzygyVectors(m.ring(), m.target().twists, m.source().twists, m.columns());
  TermOrder ord = m.ring()->moduleOrder(m.source().twists);
  GradedFreeModule src = degreesOf(ord, vecs);
  return GradedMatrix<K>(m.ring(), std::move(src), m.source(), std::move(vecs));
}

/// A finitely generated graded module coker(F1 -> F0), over S or over R = S/a.
/// Over R the stored relations always include a * F0, so every S-level
/// computation on the presentation is also correct for the R-module.
template <class K>
class ModulePresentation {
 public:
  ModulePresentation() = default;
  ModulePresentation(RingPtr<K> ring, std::vector<int> generatorTwists,
                     std::vector<TermVec<K>> relations, Ideal<K> base = {})
      : ring_(std::move(ring)), gens_(std::move(generatorTwists)),
        base_(base.ring() ? std::move(base) : Ideal<K>::zero(ring_)) {
    TermOrder ord = order();
    for (auto& v : relations) {
      if (v.empty()) continue;
      v = poly::resort(ord, std::move(v));
      if (!poly::isHomogeneous(ord, v)) throw StructuralError("relation is not homogeneous");
      for (const auto& t : v)
        if (t.m.comp >= gens_.size()) throw StructuralError("relation outside the free module");
      rels_.push_back(std::move(v));
    }
    if (!base_.isZero()) {
      for (auto& v : detail::idealTimesFree(base_, ord, rank())) rels_.push_back(std::move(v));
    }
  }

  static ModulePresentation cokernel(const GradedMatrix<K>& m, Ideal<K> base = {}) {
    return ModulePresentation(m.ring(), m.target().twists, m.columns(), std::move(base));
  }
  static ModulePresentation free(RingPtr<K> ring, std::vector<int> twists, Ideal<K> base = {}) {
    return ModulePresentation(std::move(ring), std::move(twists), {}, std::move(base));
  }
  /// S / I as a cyclic module generated in degree 0.
  static ModulePresentation quotient(const Ideal<K>& i, Ideal<K> base = {}) {
    std::vector<TermVec<K>> rels;
    for (const auto& g : i.generators()) rels.push_back(g.terms());
    return ModulePresentation(i.ring(), {0}, std::move(rels), std::move(base));
  }
  /// R itself as an R-module.
  static ModulePresentation ofRing(const RingPresentation<K>& r) {
    return ModulePresentation(r.polyRing(), {0}, {}, r.relations());
  }

  /// The same module regarded over R = S / a (a must annihilate it).
  ModulePresentation overRing(const Ideal<K>& a) const {
    return ModulePresentation(ring_, gens_, rels_, a);
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<int>& generatorTwists() const { return gens_; }
  const std::vector<TermVec<K>>& relations() const { return rels_; }
  const Ideal<K>& base() const { return base_; }
  bool overR() const { return !base_.isZero(); }
  int rank() const { return static_cast<int>(gens_.size()); }
  TermOrder order() const { return ring_->moduleOrder(gens_); }

  /// Groebner basis of the relation submodule, computed once.
  const std::vector<TermVec<K>>& relationBasis() const {
    std::call_once(cache_->once, [this] {
      GroebnerEngine<K> engine(ring_->field(), order());
      for (const auto& v : rels_) engine.add(v);
      cache_->basis = engine.reducedBasis();
    });
    return cache_->basis;
  }

  /// Leading monomials of the relation basis, grouped by component.
  std::vector<std::vector<Monomial>> leadingByComponent() const {
    std::vector<std::vector<Monomial>> out(rank());
    for (const auto& v : relationBasis()) out[v.front().m.comp].push_back(v.front().m);
    return out;
  }

  /// Normal form of a vector of F0 modulo the relations.
  TermVec<K> reduce(TermVec<K> v) const {
    detail::Reducer<K> red(ring_->field(), order());
    for (const auto& g : relationBasis()) red.add(g);
    return red.reduce(poly::resort(order(), std::move(v)));
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<TermVec<K>> basis;
  };
  RingPtr<K> ring_;
  std::vector<int> gens_;
  std::vector<TermVec<K>> rels_;
  Ideal<K> base_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// dim_k M_d from standard monomials of the relation basis.
template <class K>
long long moduleHilbertFunction(const ModulePresentation<K>& m, int d) {
  long long total = 0;
  auto lead = m.leadingByComponent();
  const int n = m.ring()->nvars();
  for (int i = 0; i < m.rank(); ++i)
    total += countStandardMonomials(n, d - m.generatorTwists()[i], lead[i]);
  return total;
}

/// Krull dimension of M; -1 for the zero module.
template <class K>
int moduleDimension(const ModulePresentation<K>& m) {
  int best = -1;
  auto lead = m.leadingByComponent();
  for (int i = 0; i < m.rank(); ++i)
    best = std::max(best, monomialDimension(m.ring()->nvars(), lead[i]));
  return best;
}

template <class K>
bool isZeroModule(const ModulePresentation<K>& m) {
  return moduleDimension(m) < 0;
}

/// A module presented together with the images of its generators in an ambient free module.
template <class K>
struct Subquotient {
  ModulePresentation<K> module;
  std::vector<TermVec<K>> generators;  // in the ambient module
  std::vector<int> ambientTwists;
};

namespace detail {

template <class K>
int findUnitRelation(const std::vector<TermVec<K>>& rels, int& comp, typename K::value_type& c) {
  for (std::size_t j = 0; j < rels.size(); ++j)
    for (const auto& t : rels[j])
      if (totalDegree(t.m) == 0) {
        comp = t.m.comp;
        c = t.c;
        return static_cast<int>(j);
      }
  return -1;
}

}  // namespace detail

/// Minimal presentation: eliminates generators killed by unit relations, then
/// minimalizes the relations. `kept` receives the surviving original generator indices.
template <class K>
ModulePresentation<K> prune(const ModulePresentation<K>& m, std::vector<int>* kept = nullptr) {
  const auto& ring = m.ring();
  const K& k = ring->field();
  std::vector<int> twists = m.generatorTwists();
  std::vector<int> index(twists.size());
  std::iota(index.begin(), index.end(), 0);
  std::vector<TermVec<K>> rels = m.relations();
  while (true) {
    TermOrder ord = ring->moduleOrder(twists);
    int comp = -1;
    typename K::value_type c = k.zero();
    int j = detail::findUnitRelation<K>(rels, comp, c);
    if (j < 0) break;
    TermVec<K> pivot = poly::scale(k, rels[j], k.inv(c));  // e_comp + rest
    std::vector<TermVec<K>> next;
    for (std::size_t l = 0; l < rels.size(); ++l) {
      if (static_cast<int>(l) == j) continue;
      TermVec<K> coeff = poly::resort(ring->termOrder(), poly::component(rels[l], comp));
      TermVec<K> v = rels[l];
      if (!coeff.empty()) v = poly::sub(k, ord, v, poly::mul(k, ord, pivot, coeff));
      next.push_back(std::move(v));
    }
    // remove component `comp`
    twists.erase(twists.begin() + comp);
    index.erase(index.begin() + comp);
    TermOrder newOrd = ring->moduleOrder(twists);
    for (auto& v : next) {
      for (auto& t : v) {
        if (t.m.comp == comp) throw InternalConsistencyError("pruning left an entry in a removed row");
        if (t.m.comp > comp) --t.m.comp;
      }
      v = poly::resort(newOrd, std::move(v));
    }
    std::erase_if(next, [](const TermVec<K>& v) { return v.empty(); });
    rels = std::move(next);
  }
  TermOrder ord = ring->moduleOrder(twists);
  std::vector<TermVec<K>> seed;
  if (m.overR()) seed = detail::idealTimesFree(m.base(), ord, static_cast<int>(twists.size()));
  rels = minimalGeneratorsModulo(k, ord, std::move(rels), seed);
  if (kept) *kept = index;
  return ModulePresentation<K>(ring, std::move(twists), std::move(rels), m.base());
}

/// Minimal generator degrees of M, sorted.
template <class K>
std::vector<int> minimalGeneratorDegrees(const ModulePresentation<K>& m) {
  auto p = prune(m);
  auto t = p.generatorTwists();
  std::sort(t.begin(), t.end());
  return t;
}

/// (im K + im A) / im A inside the free module with the given twists.
template <class K>
Subquotient<K> subquotient(const RingPtr<K>& ring, const std::vector<int>& ambientTwists,
                           std::vector<TermVec<K>> kGens, const std::vector<TermVec<K>>& aGens,
                           const Ideal<K>& base = {}) {
  TermOrder ord = ring->moduleOrder(ambientTwists);
  std::erase_if(kGens, [](const TermVec<K>& v) { return v.empty(); });
  for (auto& v : kGens) v = poly::resort(ord, std::move(v));
  std::vector<TermVec<K>> cols = kGens;
  std::vector<int> srcTwists;
  for (const auto& v : kGens) srcTwists.push_back(ord.degree(v.front().m));
  const int nk = static_cast<int>(kGens.size());
  for (const auto& a : aGens) {
    if (a.empty()) continue;
    cols.push_back(poly::resort(ord, a));
    srcTwists.push_back(ord.degree(cols.back().front().m));
  }
  std::vector<TermVec<K>> rels;
  if (nk > 0) {
    auto syz = syzygyVectors(ring, ambientTwists, srcTwists, cols);
    for (auto& s : syz) {
      auto proj = poly::componentSlice(s, 0, nk);
      if (!proj.empty()) rels.push_back(std::move(proj));
    }
  }
  std::vector<int> genTwists(srcTwists.begin(), srcTwists.begin() + nk);
  ModulePresentation<K> raw(ring, genTwists, std::move(rels), base);
  std::vector<int> kept;
  Subquotient<K> out;
  out.module = prune(raw, &kept);
  for (int i : kept) out.generators.push_back(kGens[i]);
  out.ambientTwists = ambientTwists;
  return out;
}

/// Kernel and image of the map M -> N sending generator i of M to images[i] (a vector of N's F0).
template <class K>
struct KernelImage {
  Subquotient<K> kernel;  // ambient: F0 of M
  Subquotient<K> image;   // ambient: F0 of N
};

template <class K>
KernelImage<K> moduleKernelImage(const ModulePresentation<K>& m, const ModulePresentation<K>& n,
                                 std::vector<TermVec<K>> images) {
  const auto& ring = m.ring();
  if (static_cast<int>(images.size()) != m.rank())
    throw StructuralError("map must give one image per generator");
  TermOrder nOrd = n.order();
  std::vector<TermVec<K>> cols;
  for (int i = 0; i < m.rank(); ++i) {
    auto v = poly::resort(nOrd, std::move(images[i]));
    for (const auto& t : v)
      if (nOrd.degree(t.m) != m.generatorTwists()[i])
        throw StructuralError("module map is not degree-preserving");
    cols.push_back(std::move(v));
  }
  std::vector<int> srcTwists = m.generatorTwists();
  const int nm = m.rank();
  std::vector<TermVec<K>> all = cols;
  for (const auto& b : n.relations()) {
    all.push_back(b);
    srcTwists.push_back(nOrd.degree(b.front().m));
  }
  std::vector<TermVec<K>> pre;
  for (auto& s : syzygyVectors(ring, n.generatorTwists(), srcTwists, all)) {
    auto proj = poly::componentSlice(s, 0, nm);
    if (!proj.empty()) pre.push_back(poly::resort(m.order(), std::move(proj)));
  }
  KernelImage<K> out;
  out.kernel = subquotient(ring, m.generatorTwists(), std::move(pre), m.relations(), m.base());
  out.image = subquotient(ring, n.generatorTwists(), cols, n.relations(), n.base());
  return out;
}

/// Hom(M, N) as a subquotient of P0* ⊗ Q0; component i * q0 + k is e_i^* ⊗ f_k.
template <class K>
Subquotient<K> moduleHom(const ModulePresentation<K>& mIn, const ModulePresentation<K>& nIn) {
  const auto m = prune(mIn);
  const auto n = prune(nIn);
  const auto& ring = m.ring();
  const K& k = ring->field();
  const auto& a = m.generatorTwists();
  const auto& b = n.generatorTwists();
  const int p0 = m.rank(), q0 = n.rank();
  const auto& aRels = m.relations();
  const int p1 = static_cast<int>(aRels.size());
  TermOrder mOrd = m.order();
  std::vector<int> p1Twists;
  for (const auto& v : aRels) p1Twists.push_back(mOrd.degree(v.front().m));

  std::vector<int> homTwists, tgtTwists;
  for (int i = 0; i < p0; ++i)
    for (int l = 0; l < q0; ++l) homTwists.push_back(b[l] - a[i]);
  for (int j = 0; j < p1; ++j)
    for (int l = 0; l < q0; ++l) tgtTwists.push_back(b[l] - p1Twists[j]);
  TermOrder homOrd = ring->moduleOrder(homTwists);
  TermOrder tgtOrd = ring->moduleOrder(tgtTwists);

  // image of E_{i,l} under precomposition with the relation matrix
  std::vector<TermVec<K>> cols;
  std::vector<int> srcTwists;
  for (int i = 0; i < p0; ++i)
    for (int l = 0; l < q0; ++l) {
      TermVec<K> raw;
      for (int j = 0; j < p1; ++j)
        for (const auto& t : aRels[j])
          if (t.m.comp == i) {
            Term<K> e = t;
            e.m.comp = static_cast<std::uint16_t>(j * q0 + l);
            raw.push_back(e);
          }
      cols.push_back(poly::normalize(k, tgtOrd, std::move(raw)));
      srcTwists.push_back(b[l] - a[i]);
    }
  const int nHom = p0 * q0;
  // relations of Hom(P1, N): P1* ⊗ B
  TermOrder nOrd = n.order();
  for (int j = 0; j < p1; ++j)
    for (const auto& bv : n.relations()) {
      TermVec<K> v;
      for (const auto& t : bv) {
        Term<K> e = t;
        e.m.comp = static_cast<std::uint16_t>(j * q0 + t.m.comp);
        v.push_back(e);
      }
      cols.push_back(poly::resort(tgtOrd, std::move(v)));
      srcTwists.push_back(nOrd.degree(bv.front().m) - p1Twists[j]);
    }
  std::vector<TermVec<K>> kernel;
  for (auto& s : syzygyVectors(ring, tgtTwists, srcTwists, cols)) {
    auto proj = poly::componentSlice(s, 0, nHom);
    if (!proj.empty()) kernel.push_back(poly::resort(homOrd, std::move(proj)));
  }
  // relations of Hom(P0, N): P0* ⊗ B
  std::vector<TermVec<K>> homRels;
  for (int i = 0; i < p0; ++i)
    for (const auto& bv : n.relations()) {
      TermVec<K> v;
      for (const auto& t : bv) {
        Term<K> e = t;
        e.m.comp = static_cast<std::uint16_t>(i * q0 + t.m.comp);
        v.push_back(e);
      }
      homRels.push_back(poly::resort(homOrd, std::move(v)));
    }
  Ideal<K> base = nIn.overR() ? nIn.base() : mIn.base();
  return subquotient(ring, homTwists, std::move(kernel), homRels, base);
}

/// Degree-wise linear algebra on a presented module: standard-monomial bases,
/// coordinates of vectors and matrices of multiplication maps.
template <class K>
class GradedPieces {
 public:
  using value_type = typename K::value_type;

  explicit GradedPieces(ModulePresentation<K> m)
      : m_(std::move(m)), ord_(m_.order()), red_(m_.ring()->field(), ord_) {
    for (const auto& g : m_.relationBasis()) red_.add(g);
    lead_ = m_.leadingByComponent();
  }

  const ModulePresentation<K>& module() const { return m_; }

  const std::vector<Monomial>& basis(int d) const {
    auto it = bases_.find(d);
    if (it != bases_.end()) return it->second.monomials;
    Piece piece;
    const int n = m_.ring()->nvars();
    for (int i = 0; i < m_.rank(); ++i) {
      forEachMonomial(n, d - m_.generatorTwists()[i], [&](const Monomial& mono) {
        Monomial m = mono;
        m.comp = static_cast<std::uint16_t>(i);
        for (const auto& l : lead_[i])
          if (divides(l, m)) return;
        piece.index.emplace(m, static_cast<int>(piece.monomials.size()));
        piece.monomials.push_back(m);
      });
    }
    return bases_.emplace(d, std::move(piece)).first->second.monomials;
  }

  std::size_t dim(int d) const { return basis(d).size(); }

  /// Coordinates of a homogeneous vector of degree d in the standard basis of M_d.
  std::vector<value_type> coordinates(const TermVec<K>& v, int d) const {
    const K& k = m_.ring()->field();
    basis(d);
    const Piece& piece = bases_.at(d);
    std::vector<value_type> out(piece.monomials.size(), k.zero());
    for (const auto& t : red_.reduce(poly::resort(ord_, v))) {
      auto it = piece.index.find(t.m);
      if (it == piece.index.end()) throw InternalConsistencyError("normal form left the standard basis");
      out[it->second] = t.c;
    }
    return out;
  }

  /// Matrix of M_d -> M_{d + deg f}, v -> f v, for a homogeneous ring element f.
  DenseMatrix<K> mulMatrix(const TermVec<K>& f, int fDeg, int d) const {
    const K& k = m_.ring()->field();
    const auto& src = basis(d);
    basis(d + fDeg);
    DenseMatrix<K> out(k, dim(d + fDeg), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      TermVec<K> prod;
      for (const auto& t : f) prod.push_back({src[c] * t.m, t.c});
      auto coords = coordinates(poly::normalize(k, ord_, std::move(prod)), d + fDeg);
      for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, c) = coords[r];
    }
    return out;
  }

  /// Matrix of a homogeneous map N_d -> M_{d + shift} given by columns v_j = image of basis vector.
  DenseMatrix<K> vectorsMatrix(const std::vector<TermVec<K>>& vecs, int d) const {
    const K& k = m_.ring()->field();
    DenseMatrix<K> out(k, dim(d), vecs.size());
    for (std::size_t c = 0; c < vecs.size(); ++c) {
      auto coords = coordinates(vecs[c], d);
      for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, c) = coords[r];
    }
    return out;
  }

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, int, MonomialHash> index;
  };
  ModulePresentation<K> m_;
  TermOrder ord_;
  detail::Reducer<K> red_;
  std::vector<std::vector<Monomial>> lead_;
  mutable std::map<int, Piece> bases_;
};

/// beg(M): least degree of a minimal generator; +inf for the zero module.
template <class K>
Degree moduleBeg(const ModulePresentation<K>& m) {
  auto d = minimalGeneratorDegrees(m);
  return d.empty() ? kPlusInfinity : d.front();
}

}  // namespace socle
