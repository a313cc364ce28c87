#ifndef ROOTADJ_IO_HPP
#define ROOTADJ_IO_HPP

#include <optional>
#include <string>

#include "rootadj/basis_table.hpp"
#include "rootadj/hochschild.hpp"
#include "rootadj/ktheory.hpp"
#include "rootadj/root_adjunction.hpp"
#include "rootadj/splitting.hpp"

namespace rootadj {

/// Presentation document; may carry an adjunction request alongside.
/// Shape: {coeffs:{kind,p}, m, gens:[{name,deg,wt,kind,cap?,truncation?}],
///         roots:[{gen,m,target}], root:{a,m}?}
/// Elements are either "genname" or [{coeff: 1|"n/d", exps:{name:e}}].
struct PresentationDocument {
  PresentationSpec spec;
  std::optional<std::pair<RawElement, long long>> adjunction;
};

PresentationDocument parsePresentationDocument(const std::string& text);

/// {window:[lo,hi], m, entries:[{deg,wt,labels:[...]}]} sorted by (deg,wt).
std::string tableToJson(const BasisTable& t);
BasisTable tableFromJson(const std::string& text);

/// Fixed-width rendering, stable across runs (golden-file tested).
std::string tableToText(const BasisTable& t);

std::string reportToJson(const CheckReport& r);
std::string reportToText(const CheckReport& r);

std::string isoReportToJson(const WeightZeroIsoReport& r);
std::string isoReportToText(const WeightZeroIsoReport& r);

std::string orbitsToJson(const OrbitPartition& part, const SummandReport& rep);
std::string orbitsToText(const OrbitPartition& part, const SummandReport& rep);

std::string t2ToJson(const T2Presentation& t);
std::string t2ToText(const T2Presentation& t);

std::string hypothesisToJson(const HypothesisReport& r);
std::string hypothesisToText(const HypothesisReport& r);

} // namespace rootadj

#endif
