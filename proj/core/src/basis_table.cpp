#include "rootadj/basis_table.hpp"

#include <algorithm>
#include <limits>

#include "rootadj/errors.hpp"

namespace rootadj {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct ExponentRange {
  long long lo; // -kInf means unbounded below
  long long hi; // +kInf means unbounded above
  long long deg;
};

long long satMul(long long e, long long d) {
  if (e >= kInf || e <= -kInf) {
    if (d == 0) return 0;
    bool pos = (e > 0) == (d > 0);
    return pos ? kInf : -kInf;
  }
  return e * d;
}

long long satAdd(long long a, long long b) {
  if (a >= kInf || b >= kInf) {
    if (a <= -kInf || b <= -kInf) fail("InternalError", "inf - inf");
    return kInf;
  }
  if (a <= -kInf || b <= -kInf) return -kInf;
  return a + b;
}

/// Smallest/largest degree contribution a generator can make.
std::pair<long long, long long> contributionBounds(const ExponentRange& r) {
  long long a = satMul(r.lo, r.deg);
  long long b = satMul(r.hi, r.deg);
  return {std::min(a, b), std::max(a, b)};
}

ExponentRange rangeFor(const PresentedAlgebra& alg, int i) {
  const GeneratorSpec& g = alg.gens()[i];
  ExponentRange r{0, 0, g.deg};
  switch (g.kind) {
    case GenKind::Polynomial:
      r.lo = 0;
      r.hi = g.cap ? *g.cap : kInf;
      break;
    case GenKind::Laurent:
      r.lo = g.cap ? -*g.cap : -kInf;
      r.hi = g.cap ? *g.cap : kInf;
      break;
    case GenKind::Exterior:
      r.lo = 0;
      r.hi = 1;
      break;
    case GenKind::Truncated:
      r.lo = 0;
      r.hi = g.truncation - 1;
      break;
  }
  if (const RootRelation* root = alg.rootFor(i)) {
    r.hi = std::min(r.hi, root->power - 1);
  }
  return r;
}

void checkFinite(const PresentedAlgebra& alg,
                 const std::vector<ExponentRange>& ranges) {
  // A slice is infinite exactly when some nonzero exponent direction inside
  // the allowed ranges has total degree zero: a degree-0 unbounded
  // generator, or two generators whose unbounded directions carry degrees
  // of opposite sign.
  bool posDir = false, negDir = false;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& r = ranges[i];
    bool unboundedUp = r.hi >= kInf;
    bool unboundedDown = r.lo <= -kInf;
    if (!unboundedUp && !unboundedDown) continue;
    if (r.deg == 0) {
      fail("InfiniteSlice", "generator '" + alg.gens()[i].name +
                                "' spans infinitely many monomials in one "
                                "bidegree");
    }
    bool canPos = (unboundedUp && r.deg > 0) || (unboundedDown && r.deg < 0);
    bool canNeg = (unboundedUp && r.deg < 0) || (unboundedDown && r.deg > 0);
    if ((canPos && negDir) || (canNeg && posDir) || (canPos && canNeg && (posDir || negDir))) {
      fail("InfiniteSlice",
           "unbounded generator directions of opposite degree sign make "
           "slices infinite (involving '" +
               alg.gens()[i].name + "')");
    }
    if (canPos && canNeg) {
      // A single Laurent generator is fine on its own, but no other
      // unbounded generator may join it.
      posDir = negDir = true;
    } else {
      posDir = posDir || canPos;
      negDir = negDir || canNeg;
    }
  }
}

} // namespace

BasisTable enumerateBasis(const PresentedAlgebra& alg, long long degLo,
                          long long degHi) {
  if (degLo > degHi) fail("WindowMismatch", "empty degree window");
  const int n = alg.genCount();
  std::vector<ExponentRange> ranges;
  ranges.reserve(n);
  for (int i = 0; i < n; ++i) ranges.push_back(rangeFor(alg, i));
  checkFinite(alg, ranges);

  // Suffix bounds on the degree the generators i..n-1 can still contribute.
  std::vector<long long> minRest(n + 1, 0), maxRest(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    auto [mn, mx] = contributionBounds(ranges[i]);
    minRest[i] = satAdd(minRest[i + 1], mn);
    maxRest[i] = satAdd(maxRest[i + 1], mx);
  }

  BasisTable table;
  table.modulus = alg.weights().modulus();
  table.degLo = degLo;
  table.degHi = degHi;

  std::vector<int> exps(n, 0);
  auto emit = [&](long long deg) {
    long long wt = 0;
    for (int i = 0; i < n; ++i) {
      wt += static_cast<long long>(exps[i]) * alg.gens()[i].wt;
    }
    wt = alg.weights().normalize(wt);
    table.entries[Bidegree{deg, wt}].push_back(monomialLabel(alg, exps));
  };

  // DFS in generator order with exponents ascending; produces each
  // per-bidegree list already in the monomial order.
  auto rec = [&](auto&& self, int i, long long deg) -> void {
    if (i == n) {
      if (deg >= degLo && deg <= degHi) emit(deg);
      return;
    }
    const auto& r = ranges[i];
    long long lo = r.lo, hi = r.hi;
    const long long d = r.deg;
    // Clamp to exponents that keep the window reachable.  checkFinite
    // guarantees the resulting interval is finite.
    if (d != 0) {
      // Need degLo <= deg + e*d + rest <= degHi for some rest in
      // [minRest, maxRest] of the later generators.  checkFinite rules out
      // the configurations where an infinite bound would survive here.
      auto floorDiv = [](long long a, long long b) {
        long long q = a / b, rm = a % b;
        return (rm != 0 && ((rm < 0) != (b < 0))) ? q - 1 : q;
      };
      auto ceilDiv = [&](long long a, long long b) {
        return -floorDiv(-a, b);
      };
      long long top, bot;
      if (d > 0) {
        top = minRest[i + 1] <= -kInf
                  ? hi
                  : floorDiv(degHi - deg - minRest[i + 1], d);
        bot = maxRest[i + 1] >= kInf
                  ? lo
                  : ceilDiv(degLo - deg - maxRest[i + 1], d);
      } else {
        top = maxRest[i + 1] >= kInf
                  ? hi
                  : floorDiv(degLo - deg - maxRest[i + 1], d);
        bot = minRest[i + 1] <= -kInf
                  ? lo
                  : ceilDiv(degHi - deg - minRest[i + 1], d);
      }
      lo = std::max(lo, bot);
      hi = std::min(hi, top);
    }
    if (lo <= -kInf || hi >= kInf) {
      fail("InfiniteSlice", "unbounded exponent range survived analysis");
    }
    for (long long e = lo; e <= hi; ++e) {
      exps[i] = static_cast<int>(e);
      self(self, i + 1, deg + e * d);
    }
    exps[i] = 0;
  };
  rec(rec, 0, 0);
  return table;
}

std::map<long long, std::vector<std::pair<long long, long long>>>
poincarePerWeight(const BasisTable& table) {
  std::map<long long, std::vector<std::pair<long long, long long>>> out;
  for (const auto& [b, labels] : table.entries) {
    if (labels.empty()) continue;
    out[b.wt].push_back({b.deg, static_cast<long long>(labels.size())});
  }
  return out;
}

std::vector<Bidegree> tableDiff(const BasisTable& a, const BasisTable& b) {
  if (!a.sameWindow(b)) {
    fail("WindowMismatch", "tables cover different degree windows");
  }
  std::map<Bidegree, std::pair<long long, long long>> ranks;
  for (const auto& [bd, labels] : a.entries) {
    ranks[bd].first = static_cast<long long>(labels.size());
  }
  for (const auto& [bd, labels] : b.entries) {
    ranks[bd].second = static_cast<long long>(labels.size());
  }
  std::vector<Bidegree> out;
  for (const auto& [bd, pr] : ranks) {
    if (pr.first != pr.second) out.push_back(bd);
  }
  return out;
}

} // namespace rootadj
