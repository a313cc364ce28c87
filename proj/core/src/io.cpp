#include "rootadj/io.hpp"

#include <json.hpp>

#include "rootadj/errors.hpp"

namespace rootadj {

using nlohmann::json;

namespace {

json parseJson(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", "document is not valid JSON");
  return j;
}

Rational coeffFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail("ParseError", "coefficient must be an integer or \"n/d\" string");
}

RawElement elementFromJson(const json& j) {
  RawElement out;
  if (j.is_string()) {
    RawTerm t;
    t.coeff = Rational(1);
    t.exps[j.get<std::string>()] = 1;
    out.push_back(std::move(t));
    return out;
  }
  if (!j.is_array()) {
    fail("ParseError", "element must be a generator name or a term array");
  }
  for (const auto& term : j) {
    RawTerm t;
    if (term.contains("coeff")) t.coeff = coeffFromJson(term["coeff"]);
    if (term.contains("exps")) {
      for (auto it = term["exps"].begin(); it != term["exps"].end(); ++it) {
        t.exps[it.key()] = it.value().get<int>();
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string pad(long long v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), ' ');
  return s;
}

} // namespace

PresentationDocument parsePresentationDocument(const std::string& text) {
  json j = parseJson(text);
  PresentationDocument doc;
  if (!j.contains("coeffs") || !j.contains("gens")) {
    fail("ParseError", "presentation needs 'coeffs' and 'gens'");
  }
  std::string kind = j["coeffs"].value("kind", "ZpLocal");
  if (kind == "Fp") {
    doc.spec.coeffKind = CoefficientRing::Kind::Fp;
  } else if (kind == "ZpLocal") {
    doc.spec.coeffKind = CoefficientRing::Kind::ZpLocal;
  } else {
    fail("ParseError", "coeffs.kind must be 'Fp' or 'ZpLocal'");
  }
  doc.spec.p = j["coeffs"].value("p", 3LL);
  doc.spec.weightModulus = j.value("m", 0LL);
  for (const auto& g : j["gens"]) {
    GeneratorSpec spec;
    spec.name = g.value("name", "");
    spec.deg = g.value("deg", 0LL);
    spec.wt = g.value("wt", 0LL);
    spec.kind = genKindFromString(g.value("kind", "polynomial"));
    if (g.contains("cap")) spec.cap = g["cap"].get<long long>();
    if (g.contains("truncation")) {
      spec.truncation = g["truncation"].get<long long>();
    }
    doc.spec.gens.push_back(std::move(spec));
  }
  if (j.contains("roots")) {
    for (const auto& r : j["roots"]) {
      RawRoot root;
      root.gen = r.value("gen", "");
      root.power = r.value("m", 0LL);
      if (!r.contains("target")) {
        fail("ParseError", "root relation needs a 'target'");
      }
      root.target = elementFromJson(r["target"]);
      doc.spec.roots.push_back(std::move(root));
    }
  }
  if (j.contains("root")) {
    const auto& r = j["root"];
    if (!r.contains("a") || !r.contains("m")) {
      fail("ParseError", "adjunction request needs 'a' and 'm'");
    }
    doc.adjunction = {elementFromJson(r["a"]), r["m"].get<long long>()};
  }
  return doc;
}

std::string tableToJson(const BasisTable& t) {
  json j;
  j["window"] = {t.degLo, t.degHi};
  j["m"] = t.modulus;
  j["entries"] = json::array();
  for (const auto& [b, labels] : t.entries) {
    if (labels.empty()) continue;
    json e;
    e["deg"] = b.deg;
    e["wt"] = b.wt;
    e["labels"] = labels;
    j["entries"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

BasisTable tableFromJson(const std::string& text) {
  json j = parseJson(text);
  BasisTable t;
  if (!j.contains("window") || !j["window"].is_array() ||
      j["window"].size() != 2) {
    fail("ParseError", "table needs 'window': [lo, hi]");
  }
  t.degLo = j["window"][0].get<long long>();
  t.degHi = j["window"][1].get<long long>();
  t.modulus = j.value("m", 0LL);
  for (const auto& e : j.value("entries", json::array())) {
    Bidegree b{e.value("deg", 0LL), e.value("wt", 0LL)};
    std::vector<std::string> labels;
    for (const auto& l : e.value("labels", json::array())) {
      labels.push_back(l.get<std::string>());
    }
    t.entries[b] = std::move(labels);
  }
  return t;
}

std::string tableToText(const BasisTable& t) {
  std::string out = "# window [" + std::to_string(t.degLo) + ", " +
                    std::to_string(t.degHi) + "]  modulus " +
                    std::to_string(t.modulus) + "\n";
  out += "   deg    wt  rank  basis\n";
  for (const auto& [b, labels] : t.entries) {
    if (labels.empty()) continue;
    out += pad(b.deg, 6) + pad(b.wt, 6) +
           pad(static_cast<long long>(labels.size()), 6) + "  ";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ", ";
      out += labels[i];
    }
    out += "\n";
  }
  return out;
}

namespace {

json reportBody(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["window"] = {r.degLo, r.degHi};
  j["perBidegree"] = json::array();
  for (const auto& c : r.perBidegree) {
    json e;
    e["deg"] = c.at.deg;
    e["wt"] = c.at.wt;
    e["lhsRank"] = c.lhs;
    e["rhsRank"] = c.rhs;
    e["ok"] = c.ok;
    j["perBidegree"].push_back(std::move(e));
  }
  j["notes"] = r.notes;
  j["verdict"] = r.pass ? "pass" : "fail";
  return j;
}

} // namespace

std::string reportToJson(const CheckReport& r) {
  return reportBody(r).dump(2) + "\n";
}

std::string reportToText(const CheckReport& r) {
  std::string out = "check: " + r.check + "\n";
  for (const auto& [k, v] : r.params) out += "  " + k + " = " + v + "\n";
  out += "  window [" + std::to_string(r.degLo) + ", " +
         std::to_string(r.degHi) + "]\n";
  long long bad = 0;
  for (const auto& c : r.perBidegree) {
    if (!c.ok) {
      ++bad;
      out += "  MISMATCH at " + formatBidegree(c.at) + ": lhs rank " +
             std::to_string(c.lhs) + ", rhs rank " + std::to_string(c.rhs) +
             "\n";
    }
  }
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  out += (r.pass ? "PASS" : "FAIL");
  out += ": " + std::to_string(r.perBidegree.size()) + " bidegrees checked, " +
         std::to_string(bad) + " mismatches\n";
  return out;
}

std::string isoReportToJson(const WeightZeroIsoReport& r) {
  json j = reportBody(r.report);
  j["iso"] = r.iso;
  j["tame"] = r.tame;
  j["basisMatrixSample"] = json::array();
  for (const auto& e : r.matrixSample) {
    json s;
    s["from"] = e.from;
    s["to"] = e.to;
    s["coeff"] = e.coeff;
    s["invertible"] = e.invertible;
    j["basisMatrixSample"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

std::string isoReportToText(const WeightZeroIsoReport& r) {
  std::string out = reportToText(r.report);
  out += std::string("iso: ") + (r.iso ? "true" : "false") +
         "  tame: " + (r.tame ? "true" : "false") + "\n";
  out += "matrix sample:\n";
  for (const auto& e : r.matrixSample) {
    out += "  " + e.from + " -> " + e.coeff + " * " + e.to +
           (e.invertible ? "" : "   [NOT A UNIT]") + "\n";
  }
  return out;
}

std::string orbitsToJson(const OrbitPartition& part, const SummandReport& rep) {
  json j;
  j["m"] = part.m;
  j["p"] = part.p;
  j["blocks"] = part.blocks;
  j["fullOrbits"] = part.full;
  j["tame"] = rep.tame;
  j["summandCount"] = rep.summandCount;
  j["tcWeightZeroSplitting"] = rep.tcWeightZeroSplitting;
  j["kTheorySummand"] = rep.kTheorySummand;
  j["telescopicSummand"] = rep.telescopicSummand;
  j["refinedSplitting"] = rep.refinedSplitting;
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

std::string orbitsToText(const OrbitPartition& part, const SummandReport& rep) {
  std::string out = "blocks " + formatBlocks(part) + "\n";
  for (const auto& n : rep.notes) out += "note: " + n + "\n";
  return out;
}

std::string t2ToJson(const T2Presentation& t) {
  json j;
  j["p"] = t.p;
  j["flavor"] = t.flavor;
  j["baseRing"] = t.baseRing;
  j["generator"] = t.generator;
  j["exponent"] = t.exponent;
  j["relation"] = t.relation;
  j["display"] = t.display;
  return j.dump(2) + "\n";
}

std::string t2ToText(const T2Presentation& t) {
  return t.display + "\nrelation: " + t.relation + "\n";
}

std::string hypothesisToJson(const HypothesisReport& r) {
  json j;
  j["accepted"] = r.accepted;
  j["tame"] = r.tame;
  j["positiveDegree"] = r.positiveDegree;
  j["m"] = r.m;
  j["k"] = r.k;
  j["p"] = r.p;
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

std::string hypothesisToText(const HypothesisReport& r) {
  std::string out = std::string(r.accepted ? "accepted" : "rejected");
  out += ": m = " + std::to_string(r.m) + ", k = " + std::to_string(r.k) +
         ", p = " + std::to_string(r.p) + "\n";
  out += std::string("tame (p does not divide m): ") +
         (r.tame ? "yes" : "no") + "\n";
  out += std::string("deg(a) > 0: ") + (r.positiveDegree ? "yes" : "no") + "\n";
  for (const auto& f : r.failures) out += "reason: " + f + "\n";
  return out;
}

} // namespace rootadj
