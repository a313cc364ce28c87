#ifndef ROOTADJ_KTHEORY_HPP
#define ROOTADJ_KTHEORY_HPP

#include <set>
#include <string>
#include <vector>

#include "rootadj/basis_table.hpp"

namespace rootadj {

struct NamedClass {
  std::string name;
  long long deg = 0;
  long long wt = 0;
};

/// polyBase-power ladder tensor exterior factors tensor a named generator
/// set: one displayed line of a K-theory homotopy table.
struct TableSummand {
  NamedClass polyBase; // F_p[polyBase]
  std::vector<NamedClass> exteriorFactors;
  std::vector<NamedClass> generators;
};

/// A V(1)-homotopy table: list of free F_p[b]-module summands on named
/// generators plus bare singleton classes, every class carrying
/// (degree, weight mod p-1).  Modules, not rings: no products are defined
/// beyond the polyBase action.
struct NamedModuleTable {
  std::string name;
  long long p = 0;
  long long weightModulus = 0; // p - 1
  std::vector<TableSummand> summands;
  std::vector<NamedClass> singletons;
  std::vector<std::string> notes;
};

/// V(1)-homotopy of the algebraic K-theory of the p-complete connective
/// complex K-theory spectrum, p > 3.  Errors: SmallPrime.
NamedModuleTable tableKKu(long long p);

/// Same for real K-theory: the even-weight reassembly with b^2-ladders.
NamedModuleTable tableKKo(long long p);

/// Monomial expansion polyBase^j * exterior subset * generator within the
/// degree window; singletons included.
BasisTable enumerateTable(const NamedModuleTable& t, long long degLo,
                          long long degHi);

/// Restriction to a single weight class.
BasisTable weightPiece(const NamedModuleTable& t, long long i, long long degLo,
                       long long degHi);

/// Restriction to the named weights.  When every requested weight is even,
/// the weights are relabeled 2i -> i into modulus (p-1)/2 (the grading a
/// wedge of even pieces actually carries); otherwise labels are kept.
/// Errors: BadWeight.
BasisTable reassemble(const NamedModuleTable& t,
                      const std::set<long long>& weightSet, long long degLo,
                      long long degHi);

/// Relabels an even-weight table w -> w/2 into the half modulus; used to
/// put the ko table in the same grading as the reassembled even part of
/// the ku table.  Errors: BadWeight on odd-weight entries.
BasisTable halveWeights(const BasisTable& t);

/// All weight pieces of a table over one window, tagged with provenance.
struct WeightedBasisReport {
  std::string provenance;
  long long degLo = 0;
  long long degHi = 0;
  std::vector<std::pair<long long, BasisTable>> pieces; // weight -> view
};

WeightedBasisReport weightReport(const NamedModuleTable& t, long long degLo,
                                 long long degHi);

/// Formal telescope presentation: T(2)-homotopy as a quotient of a
/// polynomial ring over T(2)_* K(ell_p), relation b^(p-1) = -v2
/// (resp. (b^2)^((p-1)/2) = -v2).
struct T2Presentation {
  long long p = 0;
  std::string flavor; // "ku" or "ko"
  std::string baseRing;
  std::string generator;
  long long exponent = 0;
  std::string relation;
  std::string display;
};

T2Presentation t2Presentation(long long p, const std::string& flavor);

/// Aligned-column rendering (class, degree, weight) in display order.
std::string renderNamedTableText(const NamedModuleTable& t);

} // namespace rootadj

#endif
