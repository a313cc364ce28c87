#include <doctest.h>

#include "rootadj/regrading.hpp"
#include "rootadj/root_adjunction.hpp"
#include "test_helpers.hpp"

using namespace rootadj;
using rootadj::testing::ellAlgebra;

TEST_CASE("hypothesis check accepts the tame positive case") {
  PresentedAlgebra ell = ellAlgebra(5);
  Element v1 = generatorElement(ell, 0);
  HypothesisReport rep = checkHypothesis(ell, v1, 4);
  CHECK(rep.accepted);
  CHECK(rep.tame);
  CHECK(rep.positiveDegree);
  CHECK(rep.k == 2);
}

TEST_CASE("hypothesis check rejects non-integral even k") {
  PresentedAlgebra ell = ellAlgebra(5);
  Element v1 = generatorElement(ell, 0);
  // deg v1 = 8; m = 5 gives no even integral k
  HypothesisReport rep = checkHypothesis(ell, v1, 5);
  CHECK_FALSE(rep.accepted);
  // m = 16 gives k = 1/2: also rejected
  CHECK_FALSE(checkHypothesis(ell, v1, 16).accepted);
}

TEST_CASE("hypothesis check flags the wild prime without rejecting") {
  PresentedAlgebra ell = ellAlgebra(3); // |v1| = 4
  Element v1 = generatorElement(ell, 0);
  HypothesisReport rep = checkHypothesis(ell, v1, 3);
  // 4 is not divisible by 3, so this particular request fails on k, but
  // tameness is reported independently.
  CHECK_FALSE(rep.tame);

  // A degree-12 class with m = 3 is accepted but wild.
  AlgebraBuilder b(CoefficientRing::Kind::ZpLocal, 3, 0);
  b.gen("c", 12, 0);
  PresentedAlgebra alg = b.build();
  HypothesisReport rep2 = checkHypothesis(alg, generatorElement(alg, 0), 3);
  CHECK(rep2.accepted);
  CHECK_FALSE(rep2.tame);
  CHECK(rep2.k == 4);
}

TEST_CASE("splitting law: weight-i slice is the base shifted by i*k") {
  for (long long p : {5LL, 7LL}) {
    PresentedAlgebra ell = ellAlgebra(p);
    Element v1 = generatorElement(ell, 0);
    long long m = p - 1, k = 2;
    PresentedAlgebra adj = adjoinRoot(ell, v1, m, "u");
    long long hi = 3 * m * k;
    BasisTable big = enumerateBasis(adj, 0, hi);
    BasisTable base = enumerateBasis(ell, -hi, hi);
    for (long long i = 0; i < m; ++i) {
      for (long long d = 0; d <= hi; ++d) {
        CHECK(big.rankAt(d, i) == base.rankAt(d - i * k, 0));
      }
    }
  }
}

TEST_CASE("ring law: z^j z^(m-j) = a") {
  PresentedAlgebra ell = ellAlgebra(5);
  Element v1 = generatorElement(ell, 0);
  PresentedAlgebra adj = adjoinRoot(ell, v1, 4, "u");
  Element u = generatorElement(adj, adj.requireGen("u"));
  Element v1adj = generatorElement(adj, adj.requireGen("v1"));
  for (long long j = 1; j < 4; ++j) {
    Element prod = multiply(adj, power(adj, u, j), power(adj, u, 4 - j));
    CHECK(equal(adj, prod, v1adj));
  }
}

TEST_CASE("m = 1 adjoins a redundant generator") {
  PresentedAlgebra ell = ellAlgebra(5);
  Element v1 = generatorElement(ell, 0);
  PresentedAlgebra adj = adjoinRoot(ell, v1, 1, "w");
  BasisTable t = enumerateBasis(adj, 0, 40);
  BasisTable base = enumerateBasis(ell, 0, 40);
  CHECK(t.modulus == 1);
  CHECK(tableDiff(weightZeroPart(t), base).empty());
}

TEST_CASE("ko preset: alpha^((p-1)/2) = v1 with |alpha| = 4") {
  Preset ko = makePreset("ko", 5);
  int ai = ko.algebra.requireGen("alpha");
  CHECK(ko.algebra.genBidegree(ai).deg == 4);
  CHECK(ko.algebra.genBidegree(ai).wt == 1);
  CHECK(ko.algebra.weights().modulus() == 2);
  Element alpha = generatorElement(ko.algebra, ai);
  Element v1 = generatorElement(ko.algebra, ko.algebra.requireGen("v1"));
  CHECK(equal(ko.algebra, power(ko.algebra, alpha, 2), v1));
}

TEST_CASE("ku preset weight slices over a window of 3mk") {
  Preset ku = makePreset("ku", 5);
  PresentedAlgebra ell = ellAlgebra(5);
  BasisTable big = enumerateBasis(ku.algebra, 0, 24);
  BasisTable base = enumerateBasis(ell, -24, 24);
  for (long long i = 0; i < 4; ++i) {
    for (long long d = 0; d <= 24; ++d) {
      CHECK(big.rankAt(d, i) == base.rankAt(d - 2 * i, 0));
    }
  }
}

TEST_CASE("quotients") {
  SUBCASE("Z_(5)[v1]/v1 is the ground ring") {
    PresentedAlgebra ell = ellAlgebra(5);
    PresentedAlgebra q = quotientBy(ell, generatorElement(ell, 0));
    BasisTable t = enumerateBasis(q, 0, 40);
    CHECK(t.totalRank() == 1);
    CHECK(t.rankAt(0, 0) == 1);
  }
  SUBCASE("ku / u kills v1 too and is weight-0 concentrated") {
    Preset ku = makePreset("ku", 5);
    Element u = generatorElement(ku.algebra, ku.algebra.requireGen("u"));
    PresentedAlgebra q = quotientBy(ku.algebra, u);
    BasisTable t = enumerateBasis(q, 0, 40);
    CHECK(t.totalRank() == 1);
    CHECK(t.rankAt(0, 0) == 1);
    CHECK(t.modulus == 4);
  }
  SUBCASE("Laurent divisors are refused") {
    AlgebraBuilder b(CoefficientRing::Kind::Fp, 5, 0);
    b.gen("v1", 8, 0, GenKind::Laurent);
    PresentedAlgebra alg = b.build();
    CHECK_THROWS_WITH_AS(quotientBy(alg, generatorElement(alg, 0)),
                         doctest::Contains("UnsupportedDivisor"), Error);
  }
  SUBCASE("sums are refused") {
    AlgebraBuilder b(CoefficientRing::Kind::ZpLocal, 5, 0);
    b.gen("x", 2, 0).gen("y", 2, 0);
    PresentedAlgebra alg = b.build();
    Element sum = add(alg, generatorElement(alg, 0), generatorElement(alg, 1));
    CHECK_THROWS_WITH_AS(quotientBy(alg, sum),
                         doctest::Contains("UnsupportedDivisor"), Error);
  }
  SUBCASE("divisor appearing in a root target is refused") {
    Preset ku = makePreset("ku", 5);
    Element v1 = generatorElement(ku.algebra, ku.algebra.requireGen("v1"));
    CHECK_THROWS_WITH_AS(quotientBy(ku.algebra, v1),
                         doctest::Contains("UnsupportedDivisor"), Error);
  }
}

TEST_CASE("functoriality: quotient of the adjunction by its root") {
  // ku/u has the table of the base with v1 = 0, embedded in weight 0.
  Preset ku = makePreset("ku", 5);
  Element u = generatorElement(ku.algebra, ku.algebra.requireGen("u"));
  PresentedAlgebra q = quotientBy(ku.algebra, u);

  PresentedAlgebra ell = ellAlgebra(5);
  PresentedAlgebra ellMod = quotientBy(ell, generatorElement(ell, 0));
  BasisTable expect =
      includeWeightZero(enumerateBasis(ellMod, 0, 40), 4);
  CHECK(tableDiff(enumerateBasis(q, 0, 40), expect).empty());
}

TEST_CASE("flattening eliminates the rewrite without changing tables") {
  Preset ku = makePreset("ku", 5);
  PresentedAlgebra flat = flattenRoots(ku.algebra);
  CHECK_FALSE(flat.hasRoots());
  CHECK(flat.genCount() == 1);
  BasisTable a = enumerateBasis(ku.algebra, 0, 30);
  BasisTable b = enumerateBasis(flat, 0, 30);
  CHECK(tableDiff(a, b).empty());
}

TEST_CASE("flattening a Laurent-rooted model produces a Laurent root") {
  Preset tp = makePreset("two_periodic_K", 5, 1);
  PresentedAlgebra flat = flattenRoots(tp.algebra);
  CHECK_FALSE(flat.hasRoots());
  int ui = flat.requireGen("u");
  CHECK(flat.gens()[ui].kind == GenKind::Laurent);
  // Rank 1 in every even degree: the two-periodic pattern.
  BasisTable t = enumerateBasis(flat, -12, 12);
  for (long long d = -12; d <= 12; ++d) {
    long long total = 0;
    for (long long w = 0; w < 24; ++w) total += t.rankAt(d, w);
    CHECK(total == (d % 2 == 0 ? 1 : 0));
  }
  BasisTable viaRewrite = enumerateBasis(tp.algebra, -12, 12);
  CHECK(tableDiff(t, viaRewrite).empty());
}

TEST_CASE("En_hat preset shapes") {
  Preset e2 = makePreset("En_hat", 5, 2, 3);
  CHECK(e2.algebra.genCount() == 2); // u1, v2
  CHECK(e2.algebra.genBidegree(e2.algebra.requireGen("v2")).deg == 48);
  CHECK(e2.algebra.gens()[e2.algebra.requireGen("u1")].cap.value() == 3);
  CHECK_THROWS_WITH_AS(makePreset("En_hat", 5, 2),
                       doctest::Contains("MissingCap"), Error);

  // After the sqrt[24] adjunction the weight slices shift by 2i.
  Element v2 = e2.distinguished;
  PresentedAlgebra adj = adjoinRoot(e2.algebra, v2, 24, "u");
  BasisTable t = enumerateBasis(adj, 0, 10);
  for (long long i = 0; i <= 5; ++i) {
    CHECK(t.rankAt(2 * i, i) >= 1); // u^i plus u1-multiples
  }
}

TEST_CASE("Morava presets") {
  Preset kn = makePreset("kn", 5, 1);
  CHECK(kn.algebra.genBidegree(0).deg == 8);
  CHECK(kn.algebra.gens()[0].kind == GenKind::Polynomial);
  CHECK(kn.algebra.coeffs().kind() == CoefficientRing::Kind::Fp);
  CHECK(kn.coefficientRankOverFp == 1);

  Preset Kn2 = makePreset("Kn", 5, 2);
  CHECK(Kn2.algebra.genBidegree(0).deg == 48);
  CHECK(Kn2.algebra.gens()[0].kind == GenKind::Laurent);
  CHECK(Kn2.coefficientRankOverFp == 2);

  // Laurent base: rank 1 at degrees 0, +-8 for K(1) at p = 5.
  Preset Kn1 = makePreset("Kn", 5, 1);
  BasisTable t = enumerateBasis(Kn1.algebra, -8, 8);
  CHECK(t.rankAt(-8, 0) == 1);
  CHECK(t.rankAt(0, 0) == 1);
  CHECK(t.rankAt(8, 0) == 1);
  CHECK(t.totalRank() == 3);
}

TEST_CASE("unknown preset") {
  CHECK_THROWS_WITH_AS(makePreset("bogus", 5), doctest::Contains("UnknownPreset"),
                       Error);
}

TEST_CASE("adjoin_root rejects a failed hypothesis") {
  Preset ku = makePreset("ku", 5); // not weight-0 concentrated
  Element u = generatorElement(ku.algebra, ku.algebra.requireGen("u"));
  CHECK_THROWS_WITH_AS(adjoinRoot(ku.algebra, u, 2),
                       doctest::Contains("HypothesisFailed"), Error);
}
