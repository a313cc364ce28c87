#ifndef ROOTADJ_ROOT_ADJUNCTION_HPP
#define ROOTADJ_ROOT_ADJUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "rootadj/presentation.hpp"

namespace rootadj {

/// Outcome of validating a root-adjunction request (base, a, m): whether
/// the construction applies, with the derived even degree k of the new
/// root, and the tameness flag p | m that gates every splitting statement.
struct HypothesisReport {
  bool accepted = false;
  bool tame = false;
  bool positiveDegree = false;
  long long m = 0;
  long long k = 0;
  long long p = 0;
  std::vector<std::string> failures;
};

/// Report-style: never throws on a bad request, lists the reasons instead.
HypothesisReport checkHypothesis(const PresentedAlgebra& base,
                                 const Element& a, long long m);

/// Adjoins an m-th root of a: keeps the base generators in weight 0 of a
/// modulus-m grading and adds one generator `rootName` of bidegree
/// (deg(a)/m, 1) with the rewrite rootName^m = a.
/// Errors: HypothesisFailed.
PresentedAlgebra adjoinRoot(const PresentedAlgebra& base, const Element& a,
                            long long m, const std::string& rootName = "z");

/// Quotient by a = unit * generator: removes the generator.  Killing a root
/// generator z (z^m = unit * g) also kills g.  Laurent divisors and shapes
/// that would leave a broken rewrite are refused.
/// Errors: UnsupportedDivisor.
PresentedAlgebra quotientBy(const PresentedAlgebra& alg, const Element& a);

/// Eliminates root rewrites z^m = unit * g by dropping g and letting z play
/// its role (z inherits Laurent-ness and, for degree 0, an enumeration
/// cap).  The result presents the same algebra with no root relations,
/// which is what the Hochschild-model constructions require.
/// Errors: UnsupportedPresentation when a relation is not of that shape.
PresentedAlgebra flattenRoots(const PresentedAlgebra& alg);

/// A named model together with its distinguished class.
struct Preset {
  std::string name;
  PresentedAlgebra algebra;
  std::string distinguishedGen;
  Element distinguished;
  std::string description;
  /// Rank of the intended residue field over F_p (F_{p^n} bookkeeping for
  /// the Morava models); metadata only, tables are over the ground ring.
  long long coefficientRankOverFp = 1;
};

/// Presets: ell, ku, ko, kn, Kn, En_hat, two_periodic_K.
/// `n` is the height (Morava families), `cap` bounds the degree-0
/// generators of En_hat.  Errors: UnknownPreset, BadPrime.
Preset makePreset(const std::string& name, long long p, long long n = 1,
                  std::optional<long long> cap = std::nullopt);

std::vector<std::string> presetNames();

} // namespace rootadj

#endif
