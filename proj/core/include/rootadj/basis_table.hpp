#ifndef ROOTADJ_BASIS_TABLE_HPP
#define ROOTADJ_BASIS_TABLE_HPP

#include <map>
#include <string>
#include <vector>

#include "rootadj/presentation.hpp"

namespace rootadj {

/// Locally finite bigraded skeleton: ordered monomial labels per bidegree
/// inside a finite degree window.  The universal exchange format between
/// the modules.
struct BasisTable {
  long long modulus = 0;
  long long degLo = 0;
  long long degHi = 0;
  std::map<Bidegree, std::vector<std::string>> entries;

  long long rankAt(long long deg, long long wt) const {
    auto it = entries.find(Bidegree{deg, wt});
    return it == entries.end() ? 0 : static_cast<long long>(it->second.size());
  }
  long long rankAt(const Bidegree& b) const { return rankAt(b.deg, b.wt); }

  long long totalRank() const {
    long long n = 0;
    for (const auto& [b, labels] : entries) n += labels.size();
    return n;
  }

  bool sameWindow(const BasisTable& o) const {
    return degLo == o.degLo && degHi == o.degHi;
  }
};

/// All basis monomials of the algebra with degLo <= deg <= degHi, root
/// powers rewritten, listed per bidegree in the monomial order.
/// Errors: InfiniteSlice when an uncapped configuration would make a slice
/// infinite-dimensional, WindowMismatch on an empty window.
BasisTable enumerateBasis(const PresentedAlgebra& alg, long long degLo,
                          long long degHi);

/// weight -> [(degree, rank)] with zero ranks omitted.
std::map<long long, std::vector<std::pair<long long, long long>>>
poincarePerWeight(const BasisTable& table);

/// Bidegrees where the two tables have different rank; empty iff
/// rank-equal everywhere.  Requires equal windows.
std::vector<Bidegree> tableDiff(const BasisTable& a, const BasisTable& b);

} // namespace rootadj

#endif
