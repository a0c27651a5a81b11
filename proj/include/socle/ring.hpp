#pragma once

#include <string>
#include <vector>

#include "socle/ideal.hpp"

namespace socle {

/// R = S / a with a homogeneous of positive degree; a = 0 gives S itself.
template <class K>
class RingPresentation {
 public:
  RingPresentation(RingPtr<K> ring, std::vector<Polynomial<K>> relations = {})
      : ring_(ring), relations_(ring, validated(relations)) {}

  const RingPtr<K>& polyRing() const { return ring_; }
  const K& field() const { return ring_->field(); }
  FieldSpec fieldSpec() const { return {field().characteristic()}; }
  int nvars() const { return ring_->nvars(); }
  const Ideal<K>& relations() const { return relations_; }
  bool isPolynomialRing() const { return relations_.isZero(); }

  int dimension() const { return krullDimension(relations_); }

  /// Image of an ideal of S in R, as the ideal I + a of S.
  Ideal<K> lift(const Ideal<K>& i) const { return idealSum(i, relations_); }

 private:
  static std::vector<Polynomial<K>> validated(std::vector<Polynomial<K>>& rels) {
    for (const auto& f : rels) {
      if (f.isZero()) continue;
      if (!f.isHomogeneous()) throw StructuralError("relation " + f.toString() + " is not homogeneous");
      if (f.degree() < 1) throw StructuralError("relations must have positive degree");
    }
    return rels;
  }

  RingPtr<K> ring_;
  Ideal<K> relations_;
};

}  // namespace socle
