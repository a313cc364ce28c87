// Command-line surface for the graded root-adjunction workbench: load
// presentations, run adjunctions and Hochschild-model computations, execute
// the splitting checks, and emit tables/reports as JSON or fixed-width text.
//
// Exit status: 0 on success and on checks that pass, 1 on checks that fail,
// 2 on usage or validation errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rootadj/errors.hpp"
#include "rootadj/io.hpp"
#include "rootadj/regrading.hpp"

using namespace rootadj;

namespace {

struct CommonOpts {
  std::string input;
  std::string preset;
  long long p = 5;
  long long n = 1;
  std::optional<long long> cap;
  std::vector<long long> window;
  std::string format = "json";
  std::string out;
  unsigned seed = 0;
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool withAlgebra = true) {
  if (withAlgebra) {
    cmd->add_option("--input", o.input,
                    "presentation document (JSON) to load");
    cmd->add_option("--preset", o.preset,
                    "named model: ell, ku, ko, kn, Kn, En_hat, two_periodic_K");
    cmd->add_option("--n", o.n, "height for the Morava-family presets");
    cmd->add_option("--cap", [&o](const CLI::results_t& res) {
      o.cap = std::stoll(res[0]);
      return true;
    }, "enumeration cap for degree-0 generators");
  }
  cmd->add_option("--p", o.p, "the odd prime");
  cmd->add_option("--window", o.window, "degree window LO HI")->expected(2);
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", o.seed, "seed for sampled report rows");
  cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail("ParseError", "cannot open output file '" + o.out + "'");
  f << payload;
}

std::pair<long long, long long> windowOf(const CommonOpts& o) {
  if (o.window.size() != 2) {
    fail("ParseError", "this verb needs --window LO HI");
  }
  return {o.window[0], o.window[1]};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("ParseError", "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct LoadedAlgebra {
  PresentedAlgebra algebra;
  std::optional<Element> distinguished;
  std::string distinguishedName;
  std::optional<std::pair<RawElement, long long>> adjunction;
};

LoadedAlgebra loadAlgebra(const CommonOpts& o) {
  if (!o.input.empty() && !o.preset.empty()) {
    fail("ParseError", "pass either --input or --preset, not both");
  }
  if (!o.input.empty()) {
    PresentationDocument doc = parsePresentationDocument(slurp(o.input));
    return LoadedAlgebra{makeAlgebra(doc.spec), std::nullopt, "",
                         doc.adjunction};
  }
  if (!o.preset.empty()) {
    Preset pre = makePreset(o.preset, o.p, o.n, o.cap);
    return LoadedAlgebra{pre.algebra, pre.distinguished, pre.distinguishedGen,
                         std::nullopt};
  }
  fail("ParseError", "this verb needs --input or --preset");
}

Element pickElement(const LoadedAlgebra& loaded, const std::string& gen) {
  if (!gen.empty()) {
    return generatorElement(loaded.algebra, loaded.algebra.requireGen(gen));
  }
  if (loaded.adjunction) {
    return resolveElement(loaded.algebra, loaded.adjunction->first);
  }
  if (loaded.distinguished) return *loaded.distinguished;
  fail("ParseError", "pass --gen (no distinguished class available)");
}

std::string pickGenName(const LoadedAlgebra& loaded, const std::string& gen) {
  if (!gen.empty()) return gen;
  if (!loaded.distinguishedName.empty()) return loaded.distinguishedName;
  fail("ParseError", "pass --gen (no distinguished generator available)");
}

int runChecked(const CheckReport& rep, const CommonOpts& o) {
  emit(o, o.format == "json" ? reportToJson(rep) : reportToText(rep));
  return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded root-adjunction workbench"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string gen;
  long long mFlag = 0, kFlag = 2;
  bool dryRun = false;
  bool nonConnective = false, degreeZero = false;
  long long weightFlag = -1;
  std::string flavor = "both";

  auto* cBasis = app.add_subcommand("basis", "enumerate a basis table");
  addCommon(cBasis, o);

  auto* cAdjoin = app.add_subcommand(
      "adjoin", "adjoin an m-th root and enumerate the result");
  addCommon(cAdjoin, o);
  cAdjoin->add_option("--m", mFlag, "root power m");
  cAdjoin->add_option("--gen", gen, "generator to take the root of");
  cAdjoin->add_flag("--dry-run", dryRun,
                    "only report the hypothesis check, no table");

  auto* cHH = app.add_subcommand(
      "hh", "Hochschild model basis table (root rewrites eliminated first)");
  addCommon(cHH, o);

  auto* cLogHH = app.add_subcommand(
      "loghh", "log Hochschild model relative to a generator");
  addCommon(cLogHH, o);
  cLogHH->add_option("--gen", gen, "the log generator");

  auto* cIso = app.add_subcommand(
      "hhmap-check",
      "weight-zero bijectivity of the s_mk -> s_k^m Hochschild-model map");
  addCommon(cIso, o, false);
  cIso->add_option("--m", mFlag, "root power m")->required();
  cIso->add_option("--k", kFlag, "even degree k of the root");
  cIso->add_option("--cap", [&o](const CLI::results_t& res) {
    o.cap = std::stoll(res[0]);
    return true;
  }, "power-ladder cap used when k = 0");

  auto* cCofiber = app.add_subcommand(
      "cofiber-check",
      "rank bookkeeping for HH -> logHH -> suspended HH of the quotient");
  addCommon(cCofiber, o);
  cCofiber->add_option("--gen", gen, "the divisor generator");

  auto* cEtale = app.add_subcommand(
      "logetale-check",
      "weight slices of logHH after root adjunction vs shifted logHH");
  addCommon(cEtale, o);
  cEtale->add_option("--m", mFlag, "root power m")->required();
  cEtale->add_option("--gen", gen, "the root target generator");

  auto* cSplit = app.add_subcommand(
      "split-thh",
      "assemble the adjoined Hochschild table from hh and loghh of the base "
      "and compare with the direct computation");
  addCommon(cSplit, o);
  cSplit->add_option("--m", mFlag, "root power m")->required();
  cSplit->add_option("--gen", gen, "the root target generator");

  auto* cOrbits = app.add_subcommand(
      "tc-orbits", "Frobenius orbit partition of Z/m and splitting summary");
  addCommon(cOrbits, o, false);
  cOrbits->add_option("--m", mFlag, "weight modulus m")->required();
  cOrbits->add_flag("--non-connective", nonConnective,
                    "report the telescopic variant");
  cOrbits->add_flag("--degree-zero", degreeZero, "the class has degree 0");

  auto* cKu = app.add_subcommand("ku-table",
                                 "the V(1)-homotopy K(ku_p) table");
  addCommon(cKu, o, false);
  cKu->add_option("--weight", weightFlag, "restrict to one weight piece");

  auto* cKo = app.add_subcommand(
      "ko-check",
      "even-weight reassembly of the ku table against the ko table");
  addCommon(cKo, o, false);

  auto* cT2 = app.add_subcommand("t2", "telescope presentation strings");
  addCommon(cT2, o, false);
  cT2->add_option("--flavor", flavor, "ku, ko or both")
      ->check(CLI::IsMember({"ku", "ko", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cBasis->parsed()) {
      auto [lo, hi] = windowOf(o);
      LoadedAlgebra loaded = loadAlgebra(o);
      BasisTable t = enumerateBasis(loaded.algebra, lo, hi);
      emit(o, o.format == "json" ? tableToJson(t) : tableToText(t));
      return 0;
    }
    if (cAdjoin->parsed()) {
      LoadedAlgebra loaded = loadAlgebra(o);
      Element a = pickElement(loaded, gen);
      long long m = mFlag;
      if (m == 0 && loaded.adjunction) m = loaded.adjunction->second;
      if (m == 0) fail("ParseError", "adjoin needs --m (or a document root)");
      HypothesisReport rep = checkHypothesis(loaded.algebra, a, m);
      if (dryRun) {
        emit(o, o.format == "json" ? hypothesisToJson(rep)
                                   : hypothesisToText(rep));
        return rep.accepted ? 0 : 1;
      }
      if (!rep.accepted) {
        emit(o, o.format == "json" ? hypothesisToJson(rep)
                                   : hypothesisToText(rep));
        return 2; // validation error, not a failed comparison
      }
      auto [lo, hi] = windowOf(o);
      PresentedAlgebra adjoined = adjoinRoot(loaded.algebra, a, m);
      BasisTable t = enumerateBasis(adjoined, lo, hi);
      emit(o, o.format == "json" ? tableToJson(t) : tableToText(t));
      return 0;
    }
    if (cHH->parsed()) {
      auto [lo, hi] = windowOf(o);
      LoadedAlgebra loaded = loadAlgebra(o);
      HKRModule h = hh(flattenRoots(loaded.algebra));
      BasisTable t = hkrBasis(h, lo, hi);
      emit(o, o.format == "json" ? tableToJson(t) : tableToText(t));
      return 0;
    }
    if (cLogHH->parsed()) {
      auto [lo, hi] = windowOf(o);
      LoadedAlgebra loaded = loadAlgebra(o);
      PresentedAlgebra flat = flattenRoots(loaded.algebra);
      std::string g = pickGenName(loaded, gen);
      if (flat.genIndex(g) < 0 && gen.empty()) {
        // The distinguished generator may have been absorbed by flattening
        // (e.g. v1 inside ku); fall back to the surviving root generator.
        for (const auto& spec : flat.gens()) {
          if (loaded.algebra.genIndex(spec.name) >= 0 &&
              loaded.algebra.rootFor(loaded.algebra.genIndex(spec.name))) {
            g = spec.name;
          }
        }
      }
      HKRModule h = logHH(flat, g);
      BasisTable t = hkrBasis(h, lo, hi);
      emit(o, o.format == "json" ? tableToJson(t) : tableToText(t));
      return 0;
    }
    if (cIso->parsed()) {
      auto [lo, hi] = windowOf(o);
      if (lo != 0) fail("ParseError", "hhmap-check windows start at 0");
      WeightZeroIsoReport rep = weightZeroIsoCheck(
          mFlag, kFlag, o.p, hi, o.cap.value_or(32), o.seed);
      emit(o, o.format == "json" ? isoReportToJson(rep)
                                 : isoReportToText(rep));
      return rep.iso ? 0 : 1;
    }
    if (cCofiber->parsed()) {
      auto [lo, hi] = windowOf(o);
      LoadedAlgebra loaded = loadAlgebra(o);
      PresentedAlgebra flat = flattenRoots(loaded.algebra);
      return runChecked(cofiberCheck(flat, pickGenName(loaded, gen), lo, hi),
                        o);
    }
    if (cEtale->parsed()) {
      auto [lo, hi] = windowOf(o);
      LoadedAlgebra loaded = loadAlgebra(o);
      return runChecked(
          logEtaleCheck(loaded.algebra, pickGenName(loaded, gen), mFlag, lo,
                        hi),
          o);
    }
    if (cSplit->parsed()) {
      auto [lo, hi] = windowOf(o);
      LoadedAlgebra loaded = loadAlgebra(o);
      std::string g = pickGenName(loaded, gen);
      Element a = generatorElement(loaded.algebra,
                                   loaded.algebra.requireGen(g));
      HypothesisReport hyp = checkHypothesis(loaded.algebra, a, mFlag);
      if (!hyp.accepted) fail("HypothesisFailed", "base/root data rejected");

      HKRModule plain = hh(flattenRoots(loaded.algebra));
      HKRModule logged = logHH(flattenRoots(loaded.algebra), g);
      BasisTable thhA = hkrBasis(plain, lo, hi);
      BasisTable logA = hkrBasis(logged, lo - (mFlag - 1) * hyp.k, hi);
      BasisTable assembled = assembleThhTable(thhA, logA, mFlag, hyp.k);
      PresentedAlgebra adjoined =
          flattenRoots(adjoinRoot(loaded.algebra, a, mFlag));
      BasisTable direct = hkrBasis(hh(adjoined), lo, hi);

      CheckReport rep;
      rep.check = "split_thh";
      rep.params = {{"m", std::to_string(mFlag)},
                    {"k", std::to_string(hyp.k)},
                    {"gen", g}};
      rep.degLo = lo;
      rep.degHi = hi;
      std::set<Bidegree> sites;
      for (const auto& [b, l] : assembled.entries) sites.insert(b);
      for (const auto& [b, l] : direct.entries) sites.insert(b);
      for (const auto& b : sites) {
        rep.perBidegree.push_back(BidegreeCheck{
            b, assembled.rankAt(b), direct.rankAt(b),
            assembled.rankAt(b) == direct.rankAt(b)});
      }
      rep.pass = true;
      for (const auto& c : rep.perBidegree) rep.pass = rep.pass && c.ok;
      rep.notes.push_back(
          "assembled hh(A) + shifted loghh(A|a) vs hh(A(root)) directly");
      return runChecked(rep, o);
    }
    if (cOrbits->parsed()) {
      OrbitPartition part = frobeniusOrbits(mFlag, o.p);
      SummandReport rep =
          tcKSummandReport(mFlag, o.p, !degreeZero, !nonConnective);
      emit(o, o.format == "json" ? orbitsToJson(part, rep)
                                 : orbitsToText(part, rep));
      return 0;
    }
    if (cKu->parsed()) {
      auto [lo, hi] = windowOf(o);
      NamedModuleTable t = tableKKu(o.p);
      BasisTable table = weightFlag >= 0 ? weightPiece(t, weightFlag, lo, hi)
                                         : enumerateTable(t, lo, hi);
      if (o.format == "text") {
        emit(o, renderNamedTableText(t) + "\n" + tableToText(table));
      } else {
        emit(o, tableToJson(table));
      }
      return 0;
    }
    if (cKo->parsed()) {
      auto [lo, hi] = windowOf(o);
      NamedModuleTable ku = tableKKu(o.p);
      NamedModuleTable ko = tableKKo(o.p);
      std::set<long long> evens;
      for (long long w = 0; w < o.p - 1; w += 2) evens.insert(w);
      BasisTable lhs = reassemble(ku, evens, lo, hi);
      BasisTable rhs = halveWeights(enumerateTable(ko, lo, hi));
      std::vector<Bidegree> diff = tableDiff(lhs, rhs);
      std::set<Bidegree> sites;
      for (const auto& [b, l] : lhs.entries) {
        if (!l.empty()) sites.insert(b);
      }
      for (const auto& [b, l] : rhs.entries) {
        if (!l.empty()) sites.insert(b);
      }
      std::string msg;
      if (diff.empty()) {
        msg = "PASS: even-weight reassembly of K(ku_" + std::to_string(o.p) +
              ") table matches K(ko_" + std::to_string(o.p) +
              ") table at all " + std::to_string(sites.size()) +
              " bidegrees checked\n";
      } else {
        msg = "FAIL: " + std::to_string(diff.size()) +
              " bidegrees disagree, first at " + formatBidegree(diff.front()) + "\n";
      }
      emit(o, msg);
      return diff.empty() ? 0 : 1;
    }
    if (cT2->parsed()) {
      std::string payload;
      for (const std::string& f : {std::string("ku"), std::string("ko")}) {
        if (flavor != "both" && flavor != f) continue;
        T2Presentation t = t2Presentation(o.p, f);
        payload += o.format == "json" ? t2ToJson(t) : t2ToText(t);
      }
      emit(o, payload);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
