#include <doctest.h>

#include "rootadj/io.hpp"
#include "rootadj/root_adjunction.hpp"
#include "test_helpers.hpp"

using namespace rootadj;

TEST_CASE("presentation documents parse and build") {
  const std::string doc = R"({
    "coeffs": {"kind": "ZpLocal", "p": 5},
    "m": 0,
    "gens": [
      {"name": "v1", "deg": 8, "wt": 0, "kind": "polynomial"}
    ],
    "root": {"a": "v1", "m": 4}
  })";
  PresentationDocument parsed = parsePresentationDocument(doc);
  PresentedAlgebra alg = makeAlgebra(parsed.spec);
  CHECK(alg.genCount() == 1);
  REQUIRE(parsed.adjunction.has_value());
  CHECK(parsed.adjunction->second == 4);

  Element a = resolveElement(alg, parsed.adjunction->first);
  PresentedAlgebra adj = adjoinRoot(alg, a, parsed.adjunction->second);
  CHECK(adj.weights().modulus() == 4);
}

TEST_CASE("documents with explicit root rewrites") {
  const std::string doc = R"({
    "coeffs": {"kind": "Fp", "p": 5},
    "m": 24,
    "gens": [
      {"name": "v2", "deg": 48, "wt": 0, "kind": "laurent"},
      {"name": "u", "deg": 2, "wt": 1, "kind": "polynomial"}
    ],
    "roots": [{"gen": "u", "m": 24, "target": "v2"}]
  })";
  PresentedAlgebra alg = makeAlgebra(parsePresentationDocument(doc).spec);
  CHECK(alg.roots().size() == 1);
  BasisTable t = enumerateBasis(alg, 0, 6);
  CHECK(t.rankAt(0, 0) == 1);
  CHECK(t.rankAt(2, 1) == 1);
}

TEST_CASE("element terms with coefficients parse") {
  const std::string doc = R"({
    "coeffs": {"kind": "ZpLocal", "p": 5},
    "m": 0,
    "gens": [
      {"name": "x", "deg": 2, "wt": 0, "kind": "polynomial"},
      {"name": "y", "deg": 2, "wt": 0, "kind": "polynomial"}
    ],
    "root": {"a": [{"coeff": "3/2", "exps": {"x": 1}},
                    {"coeff": -1, "exps": {"y": 1}}], "m": 1}
  })";
  PresentationDocument parsed = parsePresentationDocument(doc);
  PresentedAlgebra alg = makeAlgebra(parsed.spec);
  Element a = resolveElement(alg, parsed.adjunction->first);
  CHECK(a.terms.size() == 2);
  auto bd = bidegreeOf(alg, a);
  REQUIRE(bd.has_value());
  CHECK(bd->deg == 2);
}

TEST_CASE("parse errors carry the ParseError code") {
  CHECK_THROWS_WITH_AS(parsePresentationDocument("not json"),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parsePresentationDocument("{}"),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(tableFromJson(R"({"entries": []})"),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("table round trip: emit, re-ingest, diff-equal") {
  Preset ku = makePreset("ku", 5);
  BasisTable t = enumerateBasis(ku.algebra, 0, 40);
  BasisTable back = tableFromJson(tableToJson(t));
  CHECK(back.modulus == t.modulus);
  CHECK(tableDiff(t, back).empty());
  CHECK(tableToJson(back) == tableToJson(t));
}

TEST_CASE("fixed-width text rendering is stable") {
  PresentedAlgebra ell = rootadj::testing::ellAlgebra(5);
  BasisTable t = enumerateBasis(ell, 0, 16);
  const std::string expect =
      "# window [0, 16]  modulus 0\n"
      "   deg    wt  rank  basis\n"
      "     0     0     1  1\n"
      "     8     0     1  v1\n"
      "    16     0     1  v1^2\n";
  CHECK(tableToText(t) == expect);
}

TEST_CASE("check reports render verdicts") {
  CheckReport rep;
  rep.check = "demo";
  rep.degLo = 0;
  rep.degHi = 4;
  rep.perBidegree.push_back(BidegreeCheck{Bidegree{2, 1}, 1, 2, false});
  rep.pass = false;
  std::string text = reportToText(rep);
  CHECK(text.find("MISMATCH at (2,1)") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  std::string j = reportToJson(rep);
  CHECK(j.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(j.find("\"lhsRank\": 1") != std::string::npos);
}
