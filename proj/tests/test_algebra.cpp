#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "socle/ideal.hpp"
#include "socle/parse.hpp"
#include "socle/ring.hpp"

using namespace socle;

namespace {

RingPtr<PrimeField> gf(std::uint32_t p, std::vector<std::string> names) {
  return makeRing(PrimeField(p), std::move(names));
}

template <class K>
Polynomial<K> P(const RingPtr<K>& r, const char* s) {
  return parsePolynomial(r, s);
}

template <class K>
Ideal<K> I(const RingPtr<K>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<K>> v;
  for (auto g : gens) v.push_back(P(r, g));
  return Ideal<K>(r, std::move(v));
}

template <class K>
std::vector<std::string> strings(const std::vector<Polynomial<K>>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.toString());
  return out;
}

}  // namespace

TEST(Field, PrimeFieldInverseTableAndEuclidAgree) {
  PrimeField small(65521), big(1000003);
  for (std::uint32_t a : {1u, 2u, 77u, 65520u}) {
    EXPECT_EQ(small.mul(a, small.inv(a)), 1u);
    EXPECT_EQ(big.mul(a, big.inv(a)), 1u);
  }
  EXPECT_THROW(PrimeField(12), DomainError);
  EXPECT_THROW(small.inv(0), DomainError);
}

TEST(Field, AxiomsOnSampledTriples) {
  std::mt19937 rng(7);
  PrimeField f(101);
  RationalField q;
  for (int it = 0; it < 200; ++it) {
    auto a = f.fromInt(rng() % 101), b = f.fromInt(rng() % 101), c = f.fromInt(rng() % 101);
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    if (!f.isZero(a)) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    mpq_class x(long(rng() % 50) - 25, 1 + rng() % 9), y(long(rng() % 50) - 25, 1 + rng() % 9);
    x.canonicalize();
    y.canonicalize();
    EXPECT_EQ(q.mul(x, q.add(y, x)), q.add(q.mul(x, y), q.mul(x, x)));
    if (!q.isZero(x)) EXPECT_EQ(q.mul(x, q.inv(x)), q.one());
  }
}

TEST(Fraction, NormalizesAndOrders) {
  EXPECT_EQ(Fraction(4, -8), Fraction(-1, 2));
  EXPECT_EQ((Fraction(1, 2) + Fraction(1, 3)).toString(), "5/6");
  EXPECT_LT(Fraction(-3, 2), Fraction(-1, 1));
  EXPECT_EQ(Fraction(6, 3).toString(), "2");
}

TEST(Polynomial, NormalizeCombinesAndStrips) {
  auto q = makeRing(RationalField{}, {"x", "y"});
  EXPECT_EQ(polyNormalize(q, {{{1, 0}, 1}, {{1, 0}, 1}}).toString(), "2*x");
  auto r = gf(7, {"x", "y"});
  EXPECT_EQ(polyNormalize(r, {{{1, 0}, 1}, {{1, 0}, 6}, {{0, 1}, 1}}).toString(), "y");
  auto zero = polyNormalize(r, {});
  EXPECT_TRUE(zero.isZero());
  EXPECT_EQ(zero.degree(), kMinusInfinity);
  EXPECT_THROW(polyNormalize(r, {{{1, 0, 0}, 1}}), StructuralError);
}

TEST(Polynomial, Multiplication) {
  auto q = makeRing(RationalField{}, {"x", "y"});
  EXPECT_EQ(polyMul(P(q, "x+y"), P(q, "x-y")), P(q, "x^2-y^2"));
  auto r2 = gf(2, {"x", "y"});
  EXPECT_EQ(P(r2, "(x+y)^2"), P(r2, "x^2+y^2"));
  EXPECT_TRUE((P(q, "x+y") * Polynomial<RationalField>(q)).isZero());
  auto other = makeRing(RationalField{}, {"a", "b"});
  EXPECT_THROW(P(q, "x") * P(other, "a"), StructuralError);
}

TEST(Polynomial, MultiplicationPropertiesOnSamples) {
  auto r = gf(31, {"x", "y", "z"});
  std::mt19937 rng(3);
  auto randomHomogeneous = [&](int d) {
    std::vector<RawTerm> raw;
    for (int k = 0; k < 4; ++k) {
      int a = rng() % (d + 1), b = rng() % (d - a + 1);
      raw.push_back({{a, b, d - a - b}, static_cast<long long>(rng() % 31)});
    }
    return polyNormalize(r, raw);
  };
  auto one = Polynomial<PrimeField>::constant(r, 1);
  for (int it = 0; it < 50; ++it) {
    auto f = randomHomogeneous(1 + rng() % 3), g = randomHomogeneous(1 + rng() % 3),
         h = randomHomogeneous(1 + rng() % 3);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * one, f);
    if (!f.isZero() && !g.isZero()) EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
  }
}

TEST(MonomialOrder, DegrevlexExamples) {
  MonomialOrder order;
  std::vector<int> xz{1, 0, 1}, yy{0, 2, 0}, xxx{3, 0, 0};
  MonomialLayout l{3, 0};
  EXPECT_EQ(orderCompare(makeMonomial(yy, l), makeMonomial(xz, l), 3, order),
            std::strong_ordering::greater);
  EXPECT_EQ(orderCompare(makeMonomial(xz, l), makeMonomial(xz, l), 3, order),
            std::strong_ordering::equal);
  EXPECT_EQ(orderCompare(makeMonomial(xxx, l), makeMonomial(yy, l), 3, order),
            std::strong_ordering::greater);
}

TEST(MonomialOrder, TotalAndMultiplicativeOnSamples) {
  std::mt19937 rng(11);
  MonomialLayout l{4, 0};
  auto random = [&] {
    std::vector<int> e(4);
    for (auto& x : e) x = rng() % 4;
    return makeMonomial(e, l);
  };
  for (auto kind : {OrderKind::degrevlex, OrderKind::deglex}) {
    MonomialOrder order{kind, {2, 0, 3, 1}};
    for (int it = 0; it < 300; ++it) {
      auto a = random(), b = random(), c = random(), m = random();
      auto ab = orderCompare(a, b, 4, order);
      EXPECT_EQ(std::is_eq(ab), a == b);
      EXPECT_EQ(orderCompare(b, a, 4, order), 0 <=> ab);
      if (ab > 0) EXPECT_TRUE(std::is_gt(orderCompare(a * m, b * m, 4, order)));
      if (ab > 0 && orderCompare(b, c, 4, order) > 0) EXPECT_TRUE(std::is_gt(orderCompare(a, c, 4, order)));
      if (a.deg > b.deg) EXPECT_TRUE(std::is_gt(ab));
    }
  }
}

TEST(Parse, SyntaxAndErrors) {
  auto r = gf(7, {"x", "y", "z"});
  EXPECT_EQ(P(r, "x^2*y - 3*z^3"), P(r, "-3*z^3 + y*x^2"));
  EXPECT_THROW(P(r, "x y"), ParseError);
  EXPECT_THROW(P(r, "2x"), ParseError);
  EXPECT_THROW(P(r, "w + x"), ParseError);
  EXPECT_THROW(P(r, "x^"), ParseError);
  EXPECT_THROW(RingPresentation<PrimeField>(r, {P(r, "x*y - z")}), StructuralError);
}

TEST(Groebner, Examples) {
  auto r = gf(7, {"x", "y"});
  EXPECT_EQ(strings(buchberger(I(r, {"x^2", "x*y"})).polys),
            (std::vector<std::string>{"x*y", "x^2"}));
  auto gb = buchberger(I(r, {"x^2+y^2", "x*y"}));
  EXPECT_EQ(strings(gb.polys), (std::vector<std::string>{"x*y", "x^2 + y^2", "y^3"}));
  EXPECT_EQ(buchberger(I(r, {})).size(), 0u);
  EXPECT_TRUE(normalForm(P(r, "x^2*y"), buchberger(I(r, {"x^2", "x*y"}))).isZero());
  EXPECT_TRUE(normalForm(P(r, "y^3"), gb).isZero());
  auto r3 = gf(7, {"x", "y", "z"});
  EXPECT_EQ(normalForm(P(r3, "z"), buchberger(I(r3, {"x^2", "x*y+y^2"}))), P(r3, "z"));
}

TEST(Groebner, SPolynomialsReduceToZero) {
  // independent check of the reduced basis for (x^2+y^2, xy)
  auto r = gf(7, {"x", "y"});
  auto gb = buchberger(I(r, {"x^2+y^2", "x*y"}));
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const auto& f = gb.polys[i];
      const auto& g = gb.polys[j];
      Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial(), r->layout());
      Polynomial<PrimeField> a(r, {{quotient(l, f.leadingMonomial()), 1}});
      Polynomial<PrimeField> b(r, {{quotient(l, g.leadingMonomial()), 1}});
      EXPECT_TRUE(normalForm(a * f - b * g, gb).isZero());
    }
}

TEST(Groebner, ReducedBasisIndependentOfGeneratorOrder) {
  auto r = gf(101, {"a", "b", "c", "d"});
  auto g1 = buchberger(I(r, {"a*c-b^2", "a*d-b*c", "b*d-c^2"}));
  auto g2 = buchberger(I(r, {"b*d-c^2", "a*c-b^2", "a*c-b^2", "a*d-b*c+(b*d-c^2)"}));
  EXPECT_EQ(strings(g1.polys), strings(g2.polys));
}

TEST(Groebner, RandomIdealsGeneratorsReduceToZero) {
  std::mt19937 rng(5);
  auto r = gf(32003, {"x", "y", "z"});
  for (int it = 0; it < 15; ++it) {
    std::vector<Polynomial<PrimeField>> gens;
    for (int g = 0; g < 3; ++g) {
      int d = 2 + rng() % 2;
      std::vector<RawTerm> raw;
      for (int k = 0; k < 4; ++k) {
        int a = rng() % (d + 1), b = rng() % (d - a + 1);
        raw.push_back({{a, b, d - a - b}, static_cast<long long>(rng() % 100)});
      }
      gens.push_back(polyNormalize(r, raw));
    }
    Ideal<PrimeField> id(r, gens);
    const auto& gb = buchberger(id);
    for (const auto& g : gens) EXPECT_TRUE(normalForm(g, gb).isZero());
    auto shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    shuffled.push_back(gens[0] + gens[0]);
    EXPECT_TRUE(sameIdeal(id, Ideal<PrimeField>(r, shuffled)));
  }
}

TEST(Ideal, Membership) {
  auto r = gf(7, {"x", "y"});
  EXPECT_TRUE(I(r, {"x", "y"}).contains(P(r, "x+y")));
  EXPECT_FALSE(I(r, {"x^2"}).contains(P(r, "x")));
  EXPECT_TRUE(I(r, {"x^2"}).contains(Polynomial<PrimeField>(r)));
}

TEST(Ideal, Powers) {
  auto r = gf(7, {"x", "y"});
  EXPECT_EQ(strings(idealPower(I(r, {"x", "y"}), 2).generators()),
            (std::vector<std::string>{"x^2", "x*y", "y^2"}));
  EXPECT_EQ(strings(idealPower(I(r, {"x"}), 3).generators()), (std::vector<std::string>{"x^3"}));
  auto i = I(r, {"x^2+y^2", "x*y"});
  EXPECT_TRUE(sameIdeal(idealPower(i, 1), i));
  auto unit = idealPower(i, 0);
  EXPECT_TRUE(unit.isUnit());
  EXPECT_TRUE(unit.unitByConvention());
}

TEST(Ideal, FrobeniusPowers) {
  auto r2 = gf(2, {"x", "y"});
  EXPECT_TRUE(sameIdeal(frobeniusPower(I(r2, {"x", "y"}), 2), I(r2, {"x^2", "y^2"})));
  EXPECT_TRUE(sameIdeal(frobeniusPower(I(r2, {"x*y"}), 2), I(r2, {"x^2*y^2"})));
  auto r3 = gf(3, {"x", "y"});
  EXPECT_TRUE(sameIdeal(frobeniusPower(I(r3, {"x+y"}), 3), I(r3, {"x^3+y^3"})));
  EXPECT_THROW(frobeniusPower(I(r3, {"x"}), 4), DomainError);
  auto q = makeRing(RationalField{}, {"x"});
  EXPECT_THROW(frobeniusPower(I(q, {"x"}), 2), DomainError);
  // coefficient-wise Frobenius equals the q-th power
  auto r5 = gf(5, {"x", "y", "z"});
  auto f = P(r5, "2*x^2 + 3*x*y - z^2");
  EXPECT_EQ(frobenius(f, 25), f.pow(25));
}

TEST(Ideal, FrobeniusInsidePowerInsideIdeal) {
  auto r = gf(3, {"x", "y", "z"});
  auto i = I(r, {"x*y - z^2", "x^2 + y*z"});
  auto fp = frobeniusPower(i, 3);
  auto pw = idealPower(i, 3);
  for (const auto& g : fp.generators()) EXPECT_TRUE(pw.contains(g));
  for (const auto& g : pw.generators()) EXPECT_TRUE(i.contains(g));
  // generating set independence: a different generating set gives the same Frobenius power
  auto j = I(r, {"x*y - z^2", "x^2 + y*z + x*y - z^2"});
  EXPECT_TRUE(sameIdeal(frobeniusPower(j, 3), fp));
}

TEST(Ideal, IntersectionExamples) {
  auto r = gf(7, {"x", "y"});
  EXPECT_TRUE(sameIdeal(idealIntersection(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  EXPECT_TRUE(sameIdeal(idealIntersection(I(r, {"x", "y"}), I(r, {"x"})), I(r, {"x"})));
  auto i = I(r, {"x^2+y^2", "x*y"});
  EXPECT_TRUE(sameIdeal(idealIntersection(i, i), i));
}

TEST(Ideal, ColonExamples) {
  auto r = gf(7, {"x", "y"});
  EXPECT_TRUE(sameIdeal(idealColon(I(r, {"x^2*y"}), I(r, {"x*y"})), I(r, {"x"})));
  auto r2 = gf(2, {"x", "y"});
  EXPECT_TRUE(sameIdeal(idealColon(I(r2, {"x^2*y^2"}), I(r2, {"x*y"})), I(r2, {"x*y"})));
  auto i = I(r, {"x^2+y^2", "x*y"});
  EXPECT_TRUE(sameIdeal(idealColon(i, Ideal<PrimeField>::unit(r)), i));
  EXPECT_TRUE(idealColon(i, Ideal<PrimeField>::zero(r)).isUnit());
}

TEST(Ideal, ColonMembershipProperty) {
  // f in (I:J) iff f*g in I for every generator g of J, on all monomials of degree <= 4
  auto r = gf(5, {"x", "y", "z"});
  auto i = I(r, {"x^2*y - z^3", "x*z^2", "y^3"});
  auto j = I(r, {"x", "y*z"});
  auto colon = idealColon(i, j);
  for (int d = 0; d <= 4; ++d) {
    std::vector<Polynomial<PrimeField>> mons;
    forEachMonomial(3, d, [&](const Monomial& m) { mons.emplace_back(r, TermVec<PrimeField>{{m, 1}}); });
    for (std::size_t k = 0; k < mons.size(); ++k) {
      auto f = mons[k] + (k + 1 < mons.size() ? mons[k + 1] + mons[k + 1] : mons[k]);
      bool direct = true;
      for (const auto& g : j.generators()) direct = direct && i.contains(f * g);
      EXPECT_EQ(colon.contains(f), direct) << f.toString();
    }
  }
}

TEST(Ideal, MinimalGenerators) {
  auto r = gf(7, {"x", "y"});
  EXPECT_EQ(minimalGeneratorDegrees(I(r, {"x", "x^2", "y"})), (std::vector<int>{1, 1}));
  EXPECT_EQ(minimalGeneratorDegrees(I(r, {"x^2", "x*y", "y^2", "x^3"})), (std::vector<int>{2, 2, 2}));
}

TEST(Ideal, MinimalGeneratorCountMatchesHilbertFunctions) {
  auto r = gf(11, {"x", "y", "z"});
  auto i = I(r, {"x^2", "x*y + z^2", "y^3", "x*z^2", "x^2*y"});
  auto m = I(r, {"x", "y", "z"});
  auto mi = idealProduct(m, i);
  long long total = 0;
  for (int d = 0; d <= 8; ++d) total += idealHilbertFunction(i, d) - idealHilbertFunction(mi, d);
  EXPECT_EQ(total, static_cast<long long>(minimalGenerators(i).size()));
}

TEST(Ideal, HilbertFunction) {
  auto r = gf(7, {"x", "y"});
  auto m2 = I(r, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(hilbertFunction(m2, 1), 2);
  EXPECT_EQ(hilbertFunction(m2, 2), 0);
  EXPECT_EQ(hilbertFunction(Ideal<PrimeField>::zero(r), 3), 4);
  EXPECT_EQ(hilbertFunction(I(r, {"x*y"}), 5), 2);
}

TEST(Ideal, KrullDimension) {
  auto r = gf(7, {"x", "y"});
  EXPECT_EQ(krullDimension(I(r, {"x*y"})), 1);
  auto r3 = gf(7, {"x", "y", "z"});
  EXPECT_EQ(krullDimension(I(r3, {"x"})), 2);
  auto r1 = gf(7, {"x"});
  EXPECT_EQ(krullDimension(Ideal<PrimeField>::unit(r1)), -1);
}

TEST(Ideal, ConcurrentGroebnerCacheIsShared) {
  auto r = gf(101, {"a", "b", "c", "d"});
  auto i = I(r, {"a*c-b^2", "a*d-b*c", "b*d-c^2"});
  std::vector<const GBasis<PrimeField>*> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([&, t] { seen[t] = &i.groebnerBasis(); });
  for (auto& th : threads) th.join();
  for (auto* p : seen) EXPECT_EQ(p, seen[0]);
  EXPECT_EQ(seen[0]->size(), 3u);
}
