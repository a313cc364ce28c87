#ifndef ROOTADJ_REGRADING_HPP
#define ROOTADJ_REGRADING_HPP

#include "rootadj/basis_table.hpp"

namespace rootadj {

/// Kan extension along Z/sn -> Z/n (or Z -> Z/n): the weight-i slice of the
/// output collects every weight-j slice with j = i mod n.  Labels are kept,
/// concatenated in increasing order of the old weight.
BasisTable collapseWeights(const BasisTable& t, long long n);

/// Left Kan extension along multiplication by s on Z: weight i moves to
/// s*i, everything else is empty.  Z-graded input only, s != 0.
BasisTable dilateWeights(const BasisTable& t, long long s);

/// Restriction along multiplication by s: keeps only weights s*i,
/// relabeled i.  Z-graded input only, s != 0.
BasisTable restrictWeights(const BasisTable& t, long long s);

/// Evaluation at weight zero; the result is Z-graded and concentrated in
/// weight 0.
BasisTable weightZeroPart(const BasisTable& t);

/// Re-embeds a weight-0-concentrated table into modulus m.
/// Errors: NotConcentrated.
BasisTable includeWeightZero(const BasisTable& t, long long m);

/// Drops all negative-weight entries.  Z-graded input only.
BasisTable weightConnectiveCover(const BasisTable& t);

/// Keeps exactly the weight-0 entries.  Z-graded input only.
BasisTable weightZeroTruncation(const BasisTable& t);

/// The same regradings on presentations, acting by reweighting generators.
PresentedAlgebra collapseWeights(const PresentedAlgebra& alg, long long n);
PresentedAlgebra dilateWeights(const PresentedAlgebra& alg, long long s);

/// First-class grading move, dispatching to the operations above.
/// `param` is n for Collapse, s for Dilate/Restrict, m for IncludeWeightZero
/// and unused otherwise.
struct RegradingFunctor {
  enum class Kind {
    Collapse,
    Dilate,
    Restrict,
    IncludeWeightZero,
    EvalWeightZero,
    WeightConnectiveCover,
    WeightZeroTruncation,
  };
  Kind kind = Kind::EvalWeightZero;
  long long param = 0;
};

BasisTable apply(const RegradingFunctor& f, const BasisTable& t);

} // namespace rootadj

#endif
