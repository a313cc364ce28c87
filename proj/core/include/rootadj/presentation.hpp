#ifndef ROOTADJ_PRESENTATION_HPP
#define ROOTADJ_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootadj/coefficients.hpp"
#include "rootadj/element.hpp"
#include "rootadj/grading.hpp"

namespace rootadj {

enum class GenKind { Polynomial, Laurent, Exterior, Truncated };

std::string kindName(GenKind kind);
GenKind genKindFromString(const std::string& s);

/// One generator of a presentation.  Exterior generators have odd degree
/// and exponents in {0,1}; the other kinds have even degree.  `truncation`
/// (g^e = 0, e >= 2) applies to Truncated only.  `cap` is an enumeration
/// bound, mandatory for degree-0 polynomial/Laurent generators so every
/// bidegree slice stays finite; it imposes no algebra relation.
struct GeneratorSpec {
  std::string name;
  long long deg = 0;
  long long wt = 0;
  GenKind kind = GenKind::Polynomial;
  long long truncation = 0;
  std::optional<long long> cap;
};

/// z^power = target, with target supported on generators declared before z.
/// Stored as a rewrite rule, not an ideal.
struct RootRelation {
  int genIndex = -1;
  long long power = 0;
  Element target;
};

/// Raw, unvalidated presentation data as read from a document.
struct RawTerm {
  Rational coeff = Rational(1);
  std::map<std::string, int> exps;
};
using RawElement = std::vector<RawTerm>;

struct RawRoot {
  std::string gen;
  long long power = 0;
  RawElement target;
};

struct PresentationSpec {
  CoefficientRing::Kind coeffKind = CoefficientRing::Kind::ZpLocal;
  long long p = 3;
  long long weightModulus = 0;
  std::vector<GeneratorSpec> gens;
  std::vector<RawRoot> roots;
};

/// A graded-commutative algebra presented by generators and root rewrites
/// over an exact coefficient ring.  Immutable once built; construct through
/// makeAlgebra so every invariant has been checked.
class PresentedAlgebra {
public:
  const CoefficientRing& coeffs() const { return coeffs_; }
  const WeightMonoid& weights() const { return weights_; }
  const std::vector<GeneratorSpec>& gens() const { return gens_; }
  const std::vector<RootRelation>& roots() const { return roots_; }

  int genCount() const { return static_cast<int>(gens_.size()); }
  /// -1 when absent.
  int genIndex(const std::string& name) const;
  int requireGen(const std::string& name) const;
  Bidegree genBidegree(int i) const;

  /// Root relation rooted at generator i, if any.
  const RootRelation* rootFor(int i) const;
  bool hasRoots() const { return !roots_.empty(); }

private:
  friend PresentedAlgebra makeAlgebra(const PresentationSpec& spec);
  friend class AlgebraBuilder;

  PresentedAlgebra(CoefficientRing coeffs, WeightMonoid weights)
      : coeffs_(coeffs), weights_(weights) {}

  CoefficientRing coeffs_;
  WeightMonoid weights_;
  std::vector<GeneratorSpec> gens_;
  std::vector<RootRelation> roots_;
};

/// Validates and freezes a presentation.  Errors: DuplicateName,
/// OddDegreeNonExterior, EvenDegreeExterior, MissingCap, BadRootRelation,
/// BadPrime, BadModulus, BadTruncation, BadGeneratorName.
PresentedAlgebra makeAlgebra(const PresentationSpec& spec);

/// Resolves a raw element against an algebra (names -> indices, coefficient
/// normalization, root rewriting).
Element resolveElement(const PresentedAlgebra& alg, const RawElement& raw);

/// In-tree construction helper used by the higher modules; performs the
/// same validation as makeAlgebra.
class AlgebraBuilder {
public:
  AlgebraBuilder(CoefficientRing::Kind kind, long long p, long long modulus);

  AlgebraBuilder& gen(const std::string& name, long long deg, long long wt,
                      GenKind kind = GenKind::Polynomial,
                      std::optional<long long> cap = std::nullopt,
                      long long truncation = 0);
  /// Root rewrite z^power = target where target is built over the
  /// generators added so far.
  AlgebraBuilder& root(const std::string& gen, long long power,
                       const RawElement& target);

  PresentedAlgebra build() const;

private:
  PresentationSpec spec_;
};

} // namespace rootadj

#endif
