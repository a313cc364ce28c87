#include "rootadj/regrading.hpp"

#include "rootadj/errors.hpp"

namespace rootadj {

namespace {

void requireZGraded(const BasisTable& t, const char* op) {
  if (t.modulus != 0) {
    fail("NonZeroModulus", std::string(op) + " needs a Z-graded table");
  }
}

std::vector<RawRoot> rawRootsOf(const PresentedAlgebra& alg) {
  std::vector<RawRoot> out;
  for (const auto& r : alg.roots()) {
    RawRoot raw;
    raw.gen = alg.gens()[r.genIndex].name;
    raw.power = r.power;
    for (const auto& term : r.target.terms) {
      RawTerm rt;
      rt.coeff = term.coeff;
      for (int i = 0; i < alg.genCount(); ++i) {
        if (term.exps[i] != 0) rt.exps[alg.gens()[i].name] = term.exps[i];
      }
      raw.target.push_back(std::move(rt));
    }
    out.push_back(std::move(raw));
  }
  return out;
}

} // namespace

BasisTable collapseWeights(const BasisTable& t, long long n) {
  if (n < 1) fail("IncompatibleModulus", "target modulus must be >= 1");
  if (t.modulus != 0 && t.modulus % n != 0) {
    fail("IncompatibleModulus",
         "cannot collapse modulus " + std::to_string(t.modulus) + " to " +
             std::to_string(n));
  }
  WeightMonoid target(n);
  BasisTable out;
  out.modulus = n;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    auto& slot = out.entries[Bidegree{b.deg, target.normalize(b.wt)}];
    slot.insert(slot.end(), labels.begin(), labels.end());
  }
  return out;
}

BasisTable dilateWeights(const BasisTable& t, long long s) {
  requireZGraded(t, "dilate_weights");
  if (s == 0) fail("ZeroDilation", "dilation by 0 is not invertible");
  BasisTable out;
  out.modulus = 0;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    out.entries[Bidegree{b.deg, b.wt * s}] = labels;
  }
  return out;
}

BasisTable restrictWeights(const BasisTable& t, long long s) {
  requireZGraded(t, "restrict_weights");
  if (s == 0) fail("ZeroDilation", "restriction along 0 is not defined");
  BasisTable out;
  out.modulus = 0;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    if (b.wt % s != 0) continue;
    out.entries[Bidegree{b.deg, b.wt / s}] = labels;
  }
  return out;
}

BasisTable weightZeroPart(const BasisTable& t) {
  BasisTable out;
  out.modulus = 0;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    if (b.wt == 0) out.entries[b] = labels;
  }
  return out;
}

BasisTable includeWeightZero(const BasisTable& t, long long m) {
  WeightMonoid target(m);
  BasisTable out;
  out.modulus = m;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    if (b.wt != 0) {
      fail("NotConcentrated",
           "table has entries outside weight 0, e.g. " + formatBidegree(b));
    }
    out.entries[b] = labels;
  }
  return out;
}

BasisTable weightConnectiveCover(const BasisTable& t) {
  requireZGraded(t, "weight_connective_cover");
  BasisTable out;
  out.modulus = 0;
  out.degLo = t.degLo;
  out.degHi = t.degHi;
  for (const auto& [b, labels] : t.entries) {
    if (b.wt >= 0) out.entries[b] = labels;
  }
  return out;
}

BasisTable weightZeroTruncation(const BasisTable& t) {
  requireZGraded(t, "weight_zero_truncation");
  return weightZeroPart(t);
}

PresentedAlgebra collapseWeights(const PresentedAlgebra& alg, long long n) {
  if (n < 1) fail("IncompatibleModulus", "target modulus must be >= 1");
  if (alg.weights().modulus() != 0 && alg.weights().modulus() % n != 0) {
    fail("IncompatibleModulus",
         "cannot collapse modulus " + std::to_string(alg.weights().modulus()) +
             " to " + std::to_string(n));
  }
  PresentationSpec spec;
  spec.coeffKind = alg.coeffs().kind();
  spec.p = alg.coeffs().p();
  spec.weightModulus = n;
  spec.gens = alg.gens();
  spec.roots = rawRootsOf(alg);
  return makeAlgebra(spec);
}

PresentedAlgebra dilateWeights(const PresentedAlgebra& alg, long long s) {
  if (alg.weights().modulus() != 0) {
    fail("NonZeroModulus", "dilate_weights needs a Z-graded presentation");
  }
  if (s == 0) fail("ZeroDilation", "dilation by 0 is not invertible");
  PresentationSpec spec;
  spec.coeffKind = alg.coeffs().kind();
  spec.p = alg.coeffs().p();
  spec.weightModulus = 0;
  spec.gens = alg.gens();
  for (auto& g : spec.gens) g.wt *= s;
  spec.roots = rawRootsOf(alg);
  return makeAlgebra(spec);
}

BasisTable apply(const RegradingFunctor& f, const BasisTable& t) {
  switch (f.kind) {
    case RegradingFunctor::Kind::Collapse:
      return collapseWeights(t, f.param);
    case RegradingFunctor::Kind::Dilate:
      return dilateWeights(t, f.param);
    case RegradingFunctor::Kind::Restrict:
      return restrictWeights(t, f.param);
    case RegradingFunctor::Kind::IncludeWeightZero:
      return includeWeightZero(t, f.param);
    case RegradingFunctor::Kind::EvalWeightZero:
      return weightZeroPart(t);
    case RegradingFunctor::Kind::WeightConnectiveCover:
      return weightConnectiveCover(t);
    case RegradingFunctor::Kind::WeightZeroTruncation:
      return weightZeroTruncation(t);
  }
  fail("InternalError", "unhandled regrading functor");
}

} // namespace rootadj
