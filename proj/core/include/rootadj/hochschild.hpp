#ifndef ROOTADJ_HOCHSCHILD_HPP
#define ROOTADJ_HOCHSCHILD_HPP

#include <string>
#include <vector>

#include "rootadj/algebra_map.hpp"
#include "rootadj/basis_table.hpp"

namespace rootadj {

/// HKR model of Hochschild homology: base tensor an exterior algebra on
/// one form per base generator.  A non-flagged generator g contributes
/// d(g) of bidegree (deg g + 1, wt g); a log-flagged g contributes
/// dlog(g) of bidegree (1, 0) instead, with the translation
/// d(g) = g * dlog(g) realized by the Connes operator.
struct HKRModule {
  PresentedAlgebra base;
  PresentedAlgebra full; // base generators first, forms appended after
  std::vector<int> formIndex;
  std::vector<bool> logFlagged;

  int baseGenCount() const { return base.genCount(); }
};

/// Hochschild model of a free polynomial/Laurent presentation (degree-0
/// generators may carry enumeration caps; root rewrites must be flattened
/// first).  Errors: UnsupportedPresentation.
HKRModule hh(const PresentedAlgebra& alg);

/// Log variant relative to a generator: invert g, take the Hochschild
/// model, pass to the weight-connective cover in the auxiliary g-weight,
/// and translate d(g) = g * dlog(g).  At the basis level this keeps g
/// as declared and swaps its form for dlog(g).
/// Errors: UnsupportedPresentation, UnknownGenerator.
HKRModule logHH(const PresentedAlgebra& alg, const std::string& gen);

BasisTable hkrBasis(const HKRModule& h, long long degLo, long long degHi);

/// Connes operator: the degree +1, weight-preserving derivation with
/// d(g) = d(g) resp. g*dlog(g), d(forms) = 0, Leibniz with Koszul signs.
Element connesD(const HKRModule& h, const Element& x);

/// Map of HKR modules induced by a map of bases: g -> f(g),
/// d(g) -> d(f(g)), dlog(g) -> f(g)^(-1) * d(f(g)).
struct HKRMap {
  HKRModule source;
  HKRModule target;
  AlgebraMap map; // between source.full and target.full
};

HKRMap inducedHHMap(const AlgebraMap& f, const HKRModule& source,
                    const HKRModule& target);

/// Canonical comparison hh(alg) -> logHH(alg, g) over the identity of the
/// base: identity on generators, d(g) -> g * dlog(g).
HKRMap hhToLogMap(const HKRModule& plain, const HKRModule& logged);

struct BidegreeCheck {
  Bidegree at;
  long long lhs = 0;
  long long rhs = 0;
  bool ok = true;
};

struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  long long degLo = 0;
  long long degHi = 0;
  std::vector<BidegreeCheck> perBidegree;
  std::vector<std::string> notes;
  bool pass = false;
};

struct MatrixEntry {
  std::string from;
  std::string to;
  std::string coeff;
  bool invertible = false;
};

/// Bijectivity of the canonical Hochschild-model map
///   Z_(p)[s_mk] (weight 0)  ->  Z_(p)[s_k] (s_k in weight 1 mod m)
/// restricted to weight zero over degrees [0, degHi]: the target weight-0
/// basis is {s_k^(im), s_k^((i+1)m-1) d(s_k)} and the matrix carries
/// coefficients {1, m}, so the verdict is "m invertible", i.e. p does not
/// divide m.  For k = 0 the power ladder is truncated at `capForDegreeZero`.
struct WeightZeroIsoReport {
  bool iso = false;
  bool tame = false;
  CheckReport report;
  std::vector<MatrixEntry> matrixSample;
};

WeightZeroIsoReport weightZeroIsoCheck(long long m, long long k, long long p,
                                       long long degHi,
                                       long long capForDegreeZero = 32,
                                       unsigned sampleSeed = 0,
                                       std::size_t sampleSize = 6);

/// Rank bookkeeping for hh(alg) -> logHH(alg, g): injective with cokernel
/// {dlog(g) * w : w basis of hh(alg/g)}, i.e. per bidegree
///   rank logHH = rank HH + rank HH(alg/g) shifted by (1, 0).
CheckReport cofiberCheck(const PresentedAlgebra& alg, const std::string& gen,
                         long long degLo, long long degHi);

/// Slicewise comparison of logHH(base(root-adjoined), root) against
/// degree-shifted copies of logHH(base, gen): weight-i slice against shift
/// by i*k, 0 <= i < m.  Errors: WildPrime when p | m.
CheckReport logEtaleCheck(const PresentedAlgebra& base, const std::string& gen,
                          long long m, long long degLo, long long degHi);

} // namespace rootadj

#endif
