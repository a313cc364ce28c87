#include "rootadj/splitting.hpp"

#include <numeric>

#include "rootadj/errors.hpp"

namespace rootadj {

OrbitPartition frobeniusOrbits(long long m, long long p) {
  if (m < 1) fail("BadModulus", "orbit partition needs m >= 1");
  if (p < 2) fail("BadPrime", "orbit partition needs a prime p");
  OrbitPartition part;
  part.m = m;
  part.p = p;
  part.full = std::gcd(p, m) == 1;
  if (!part.full) {
    part.blocks.push_back({0});
    if (m > 1) {
      std::vector<long long> rest;
      for (long long w = 1; w < m; ++w) rest.push_back(w);
      part.blocks.push_back(std::move(rest));
    }
    return part;
  }
  std::vector<bool> seen(m, false);
  for (long long w = 0; w < m; ++w) {
    if (seen[w]) continue;
    std::vector<long long> orbit;
    long long cur = w;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = (cur * (p % m)) % m;
    }
    std::sort(orbit.begin(), orbit.end());
    part.blocks.push_back(std::move(orbit));
  }
  return part;
}

std::string formatBlocks(const OrbitPartition& part) {
  std::string out;
  for (const auto& block : part.blocks) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

SummandReport tcKSummandReport(long long m, long long p, bool degPositive,
                               bool connective) {
  OrbitPartition part = frobeniusOrbits(m, p);
  SummandReport rep;
  rep.m = m;
  rep.p = p;
  rep.tame = m % p != 0;
  rep.degPositive = degPositive;
  rep.connective = connective;
  rep.summandCount = 1;

  if (!rep.tame) {
    rep.notes.push_back("p divides m: no splitting claimed");
    return rep;
  }
  if (connective) {
    // TC splits along any weight partition closed under w -> p*w; the
    // block count is what the Frobenius orbits provide.
    rep.tcWeightZeroSplitting = true;
    rep.summandCount = part.blocks.size();
    rep.notes.push_back(
        "TC(A(root)) = TC(A) v TC(A(root))_(>0) for p-local connective A; " +
        std::to_string(part.blocks.size()) + " Frobenius-stable summands");
    if (degPositive) {
      rep.kTheorySummand = true;
      rep.notes.push_back(
          "K(A) -> K(A(root)) is the inclusion of a wedge summand");
    }
  } else if (degPositive) {
    // Non-connective: only the weight-0 piece versus the rest survives the
    // telescopic localization argument.
    rep.telescopicSummand = true;
    rep.summandCount = 2;
    rep.notes.push_back(
        "L_T(i) K(A) -> L_T(i) K(A(root)) is a summand inclusion for i >= 2 "
        "(2 summands)");
  }
  if (m == 1 || p % m == 1) {
    rep.refinedSplitting = true;
    rep.notes.push_back("full splitting: p = 1 mod m, one factor per weight");
  }
  rep.notes.push_back("Frobenius blocks: " + formatBlocks(part));
  return rep;
}

BasisTable assembleThhTable(const BasisTable& thhA, const BasisTable& logthhA,
                            long long m, long long k) {
  if (m < 1) fail("BadModulus", "assembly needs m >= 1");
  if (k < 0) fail("BadModulus", "assembly needs k >= 0");
  for (const auto& [b, l] : thhA.entries) {
    if (b.wt != 0) {
      fail("InputNotWeightZero", "thhA has entry at " + formatBidegree(b));
    }
  }
  for (const auto& [b, l] : logthhA.entries) {
    if (b.wt != 0) {
      fail("InputNotWeightZero", "logthhA has entry at " + formatBidegree(b));
    }
  }
  if (m > 1 && (logthhA.degLo > thhA.degLo - (m - 1) * k ||
                logthhA.degHi < thhA.degHi)) {
    fail("WindowMismatch",
         "log table must cover [degLo - (m-1)k, degHi] of the output window");
  }
  BasisTable out;
  out.modulus = m;
  out.degLo = thhA.degLo;
  out.degHi = thhA.degHi;
  for (const auto& [b, labels] : thhA.entries) {
    out.entries[Bidegree{b.deg, 0}] = labels;
  }
  for (long long i = 1; i < m; ++i) {
    for (const auto& [b, labels] : logthhA.entries) {
      long long deg = b.deg + i * k;
      if (deg < out.degLo || deg > out.degHi) continue;
      out.entries[Bidegree{deg, i}] = labels;
    }
  }
  return out;
}

} // namespace rootadj
