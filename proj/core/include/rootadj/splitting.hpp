#ifndef ROOTADJ_SPLITTING_HPP
#define ROOTADJ_SPLITTING_HPP

#include <string>
#include <vector>

#include "rootadj/basis_table.hpp"

namespace rootadj {

/// Partition of Z/m into subsets closed under w -> p*w mod m, governing how
/// far the cyclotomic-Frobenius-compatible splittings go.
struct OrbitPartition {
  long long m = 0;
  long long p = 0;
  bool full = false; // gcd(p, m) = 1: blocks are the genuine orbits
  std::vector<std::vector<long long>> blocks;
};

/// gcd(p,m) = 1: the orbits of multiplication by p.  Otherwise the coarse
/// fallback {0} and everything else, which is all the splitting the
/// construction provides.
OrbitPartition frobeniusOrbits(long long m, long long p);

std::string formatBlocks(const OrbitPartition& part);

/// Declarative summary of which splitting statements apply to a given
/// (m, p, |a| > 0, connective) root adjunction.
struct SummandReport {
  long long m = 0;
  long long p = 0;
  bool tame = false;             // p does not divide m
  bool degPositive = false;
  bool connective = false;
  bool tcWeightZeroSplitting = false; // TC = weight-0 wedge rest
  bool kTheorySummand = false;        // K(A) -> K(A(root)) summand inclusion
  bool telescopicSummand = false;     // T(i)-local summand, i >= 2
  bool refinedSplitting = false;      // p = 1 mod m: one factor per weight
  std::size_t summandCount = 1;
  std::vector<std::string> notes;
};

SummandReport tcKSummandReport(long long m, long long p, bool degPositive,
                               bool connective);

/// Assembles the Hochschild-model table of a root adjunction from the
/// plain and log tables of the base: weight 0 carries thhA, weight i
/// (0 < i < m) carries logthhA shifted up by i*k.  Inputs must be
/// weight-0 concentrated; the log table must cover
/// [degLo - (m-1)k, degHi] so every shifted slice is full.
/// Errors: InputNotWeightZero, WindowMismatch.
BasisTable assembleThhTable(const BasisTable& thhA, const BasisTable& logthhA,
                            long long m, long long k);

} // namespace rootadj

#endif
