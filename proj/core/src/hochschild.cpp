#include "rootadj/hochschild.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rootadj/errors.hpp"
#include "rootadj/root_adjunction.hpp"

namespace rootadj {

namespace {

void requireAdmissible(const PresentedAlgebra& alg) {
  if (alg.hasRoots()) {
    fail("UnsupportedPresentation",
         "Hochschild model needs a root-free presentation; flatten the root "
         "rewrites first");
  }
  for (const auto& g : alg.gens()) {
    if (g.kind == GenKind::Exterior || g.kind == GenKind::Truncated) {
      fail("UnsupportedPresentation",
           "Hochschild model needs free polynomial/Laurent generators; '" +
               g.name + "' is " + kindName(g.kind));
    }
  }
}

HKRModule buildModule(const PresentedAlgebra& alg, int logGen) {
  requireAdmissible(alg);
  PresentationSpec spec;
  spec.coeffKind = alg.coeffs().kind();
  spec.p = alg.coeffs().p();
  spec.weightModulus = alg.weights().modulus();
  spec.gens = alg.gens();
  std::vector<int> formIndex(alg.genCount(), -1);
  std::vector<bool> logFlagged(alg.genCount(), false);
  for (int i = 0; i < alg.genCount(); ++i) {
    const GeneratorSpec& g = alg.gens()[i];
    GeneratorSpec form;
    if (i == logGen) {
      form.name = "dlog(" + g.name + ")";
      form.deg = 1;
      form.wt = 0;
      logFlagged[i] = true;
    } else {
      form.name = "d(" + g.name + ")";
      form.deg = g.deg + 1;
      form.wt = g.wt;
    }
    form.kind = GenKind::Exterior;
    formIndex[i] = alg.genCount() + i;
    spec.gens.push_back(std::move(form));
  }
  return HKRModule{alg, makeAlgebra(spec), std::move(formIndex),
                   std::move(logFlagged)};
}

/// Lifts an element of the base into the full algebra (forms appended after
/// the base generators, so exponent vectors just widen).
Element liftToFull(const HKRModule& h, const Element& x) {
  Element out;
  for (const auto& t : x.terms) {
    Term w;
    w.coeff = t.coeff;
    w.exps = t.exps;
    w.exps.resize(h.full.genCount(), 0);
    out.terms.push_back(std::move(w));
  }
  return out;
}

} // namespace

HKRModule hh(const PresentedAlgebra& alg) { return buildModule(alg, -1); }

HKRModule logHH(const PresentedAlgebra& alg, const std::string& gen) {
  int gi = alg.requireGen(gen);
  return buildModule(alg, gi);
}

BasisTable hkrBasis(const HKRModule& h, long long degLo, long long degHi) {
  return enumerateBasis(h.full, degLo, degHi);
}

Element connesD(const HKRModule& h, const Element& x) {
  const PresentedAlgebra& F = h.full;
  const int nBase = h.baseGenCount();
  Element out = zeroElement();
  for (const auto& t : x.terms) {
    long long prefixDegParity = 0;
    for (int j = 0; j < F.genCount(); ++j) {
      int e = t.exps[j];
      if (e == 0) continue;
      if (j < nBase) {
        // d(g^e) = e g^(e-1) d(g), and for log-flagged g the image of d(g)
        // is g dlog(g), giving e g^e dlog(g).
        Term left;
        left.coeff = t.coeff * Rational(e);
        left.exps.assign(F.genCount(), 0);
        for (int i = 0; i <= j; ++i) left.exps[i] = t.exps[i];
        left.exps[j] = e - 1;
        Element image;
        if (h.logFlagged[j]) {
          Term img;
          img.coeff = Rational(1);
          img.exps.assign(F.genCount(), 0);
          img.exps[j] = 1;
          img.exps[h.formIndex[j]] = 1;
          image.terms.push_back(std::move(img));
        } else {
          image = generatorElement(F, h.formIndex[j]);
        }
        Term right;
        right.coeff = Rational(1);
        right.exps.assign(F.genCount(), 0);
        for (int i = j + 1; i < F.genCount(); ++i) right.exps[i] = t.exps[i];
        if (prefixDegParity % 2 != 0) left.coeff = -left.coeff;
        Element piece = multiply(
            F,
            multiply(F, Element{{left}}, image),
            Element{{right}});
        out = add(F, out, piece);
      }
      prefixDegParity += static_cast<long long>(e) * F.gens()[j].deg;
    }
  }
  return out;
}

HKRMap inducedHHMap(const AlgebraMap& f, const HKRModule& source,
                    const HKRModule& target) {
  std::map<std::string, Element> assignment;
  for (int i = 0; i < source.baseGenCount(); ++i) {
    const std::string& name = source.base.gens()[i].name;
    Element image = liftToFull(target, f.images[i]);
    assignment[name] = image;
    Element dImage = connesD(target, image);
    if (source.logFlagged[i]) {
      // dlog(g) -> f(g)^(-1) d(f(g)); needs an invertible image.
      Element inv = power(target.full, image, -1);
      assignment[source.full.gens()[source.formIndex[i]].name] =
          multiply(target.full, inv, dImage);
    } else {
      assignment[source.full.gens()[source.formIndex[i]].name] = dImage;
    }
  }
  AlgebraMap lifted = makeAlgebraMap(source.full, target.full, assignment);
  return HKRMap{source, target, std::move(lifted)};
}

HKRMap hhToLogMap(const HKRModule& plain, const HKRModule& logged) {
  AlgebraMap idBase = identityMap(plain.base);
  return inducedHHMap(idBase, plain, logged);
}

namespace {

void pushRanks(CheckReport& rep, const Bidegree& at, long long lhs,
               long long rhs) {
  rep.perBidegree.push_back(BidegreeCheck{at, lhs, rhs, lhs == rhs});
}

void finishReport(CheckReport& rep) {
  rep.pass = true;
  for (const auto& c : rep.perBidegree) rep.pass = rep.pass && c.ok;
}

} // namespace

WeightZeroIsoReport weightZeroIsoCheck(long long m, long long k, long long p,
                                       long long degHi,
                                       long long capForDegreeZero,
                                       unsigned sampleSeed,
                                       std::size_t sampleSize) {
  if (m < 1) fail("HypothesisFailed", "m must be positive");
  if (k < 0 || k % 2 != 0) fail("HypothesisFailed", "k must be even and >= 0");

  std::optional<long long> srcCap, tgtCap;
  if (k == 0) {
    srcCap = capForDegreeZero;
    tgtCap = capForDegreeZero * m + m - 1;
  }
  AlgebraBuilder sb(CoefficientRing::Kind::ZpLocal, p, m);
  sb.gen("s" + std::to_string(m * k), m * k, 0, GenKind::Polynomial, srcCap);
  PresentedAlgebra src = sb.build();
  AlgebraBuilder tb(CoefficientRing::Kind::ZpLocal, p, m);
  tb.gen("t" + std::to_string(k), k, 1, GenKind::Polynomial, tgtCap);
  PresentedAlgebra tgt = tb.build();

  std::map<std::string, Element> assignment;
  assignment[src.gens()[0].name] = power(tgt, generatorElement(tgt, 0), m);
  AlgebraMap f = makeAlgebraMap(src, tgt, assignment);

  HKRModule hs = hh(src);
  HKRModule ht = hh(tgt);
  HKRMap F = inducedHHMap(f, hs, ht);

  BasisTable srcTable = hkrBasis(hs, 0, degHi);
  BasisTable tgtTable = hkrBasis(ht, 0, degHi);

  WeightZeroIsoReport out;
  out.tame = m % p != 0;
  out.report.check = "weight_zero_iso";
  out.report.params = {{"m", std::to_string(m)},
                       {"k", std::to_string(k)},
                       {"p", std::to_string(p)}};
  out.report.degLo = 0;
  out.report.degHi = degHi;

  // Per degree: source rank (all weight 0) against target weight-0 rank.
  for (long long d = 0; d <= degHi; ++d) {
    long long lhs = srcTable.rankAt(d, 0);
    long long rhs = tgtTable.rankAt(d, 0);
    if (lhs == 0 && rhs == 0) continue;
    pushRanks(out.report, Bidegree{d, 0}, lhs, rhs);
  }
  finishReport(out.report);

  // Matrix entries: image of each source basis monomial s^i, s^i d(s).
  bool allInvertible = true;
  std::set<std::vector<int>> seenImages;
  bool injective = true;
  std::vector<MatrixEntry> entries;
  long long maxPow = srcCap ? *srcCap
                            : (m * k > 0 ? degHi / (m * k) + 1 : 0);
  for (long long i = 0; i <= maxPow; ++i) {
    for (int withForm = 0; withForm <= 1; ++withForm) {
      long long deg = i * m * k + withForm * (m * k + 1);
      if (deg > degHi) continue;
      Term t;
      t.coeff = Rational(1);
      t.exps.assign(hs.full.genCount(), 0);
      t.exps[0] = static_cast<int>(i);
      if (withForm) t.exps[hs.formIndex[0]] = 1;
      Element x{{t}};
      Element y = applyMap(F.map, x);
      MatrixEntry e;
      e.from = monomialLabel(hs.full, t.exps);
      if (y.isZero()) {
        e.to = "0";
        e.coeff = "0";
        e.invertible = false;
      } else {
        e.to = monomialLabel(ht.full, y.terms.front().exps);
        e.coeff = y.terms.front().coeff.toString();
        e.invertible = y.terms.size() == 1 &&
                       ht.full.coeffs().invertible(y.terms.front().coeff);
        if (!seenImages.insert(y.terms.front().exps).second) injective = false;
      }
      allInvertible = allInvertible && e.invertible;
      entries.push_back(std::move(e));
    }
  }

  out.iso = out.report.pass && allInvertible && injective;
  if (!allInvertible) {
    for (const auto& e : entries) {
      if (!e.invertible) {
        out.report.notes.push_back(
            "offending coefficient " + e.coeff + " = 0 in " +
            ht.full.coeffs().name() + " on " + e.from + " -> " + e.to);
        break;
      }
    }
  }
  out.report.pass = out.iso;

  // Stable sample: leading rows plus one seeded draw from the tail.
  std::vector<MatrixEntry> sample(
      entries.begin(),
      entries.begin() + std::min(entries.size(), sampleSize));
  if (entries.size() > sampleSize && sampleSize > 0) {
    std::mt19937 rng(sampleSeed);
    std::uniform_int_distribution<std::size_t> pick(sampleSize,
                                                    entries.size() - 1);
    sample.back() = entries[pick(rng)];
  }
  out.matrixSample = std::move(sample);
  return out;
}

CheckReport cofiberCheck(const PresentedAlgebra& alg, const std::string& gen,
                         long long degLo, long long degHi) {
  int gi = alg.requireGen(gen);
  if (alg.gens()[gi].kind != GenKind::Polynomial) {
    fail("UnsupportedDivisor",
         "cofiber comparison needs a polynomial generator");
  }
  HKRModule plain = hh(alg);
  HKRModule logged = logHH(alg, gen);
  PresentedAlgebra quot = quotientBy(alg, generatorElement(alg, gi));
  HKRModule quotHH = hh(quot);

  BasisTable tPlain = hkrBasis(plain, degLo, degHi);
  BasisTable tLog = hkrBasis(logged, degLo, degHi);
  BasisTable tQuot = hkrBasis(quotHH, degLo - 1, degHi - 1);

  CheckReport rep;
  rep.check = "cofiber_sequence";
  rep.params = {{"algebra", alg.coeffs().name()}, {"gen", gen}};
  rep.degLo = degLo;
  rep.degHi = degHi;

  std::set<Bidegree> sites;
  for (const auto& [b, l] : tLog.entries) sites.insert(b);
  for (const auto& [b, l] : tPlain.entries) sites.insert(b);
  for (const auto& [b, l] : tQuot.entries) {
    sites.insert(Bidegree{b.deg + 1, b.wt});
  }
  for (const auto& b : sites) {
    if (b.deg < degLo || b.deg > degHi) continue;
    long long lhs = tLog.rankAt(b);
    long long rhs = tPlain.rankAt(b) + tQuot.rankAt(b.deg - 1, b.wt);
    pushRanks(rep, b, lhs, rhs);
  }
  finishReport(rep);

  // Injectivity at basis level: every plain basis monomial has a single
  // unit-monomial image and the images are pairwise distinct; the cokernel
  // labels are exactly dlog(g) times the quotient basis.
  HKRMap cmp = hhToLogMap(plain, logged);
  std::set<std::vector<int>> image;
  bool injective = true;
  auto parseLabel = [&](const PresentedAlgebra& A,
                        const std::string& label) {
    std::vector<int> e(A.genCount(), 0);
    if (label == "1") return e;
    std::size_t pos = 0;
    while (pos < label.size()) {
      std::size_t star = label.find('*', pos);
      std::string factor = label.substr(
          pos, star == std::string::npos ? std::string::npos : star - pos);
      std::size_t caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      int ex = 1;
      if (caret != std::string::npos) {
        ex = std::stoi(factor.substr(caret + 1));
      }
      e[A.requireGen(name)] = ex;
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    return e;
  };
  for (const auto& [b, labels] : tPlain.entries) {
    (void)b;
    for (const auto& label : labels) {
      Term t;
      t.coeff = Rational(1);
      t.exps = parseLabel(plain.full, label);
      Element y = applyMap(cmp.map, Element{{t}});
      if (y.isZero() || y.terms.size() != 1 ||
          !plain.full.coeffs().invertible(y.terms.front().coeff)) {
        injective = false;
        rep.notes.push_back("image of " + label + " is not a unit monomial");
        continue;
      }
      if (!image.insert(y.terms.front().exps).second) {
        injective = false;
        rep.notes.push_back("image collision at " + label);
      }
    }
  }
  // Cokernel: target labels not hit must be dlog(g) * (quotient basis).
  long long cokernel = 0, expected = 0;
  for (const auto& [b, labels] : tLog.entries) {
    (void)b;
    for (const auto& label : labels) {
      std::vector<int> e = parseLabel(logged.full, label);
      if (image.find(e) == image.end()) {
        ++cokernel;
        bool hasDlog = e[logged.formIndex[gi]] == 1;
        bool hasG = e[gi] != 0;
        if (!hasDlog || hasG) {
          rep.notes.push_back("unexpected cokernel class " + label);
          injective = false;
        }
      }
    }
  }
  for (const auto& [b, labels] : tQuot.entries) {
    if (b.deg + 1 < degLo || b.deg + 1 > degHi) continue;
    expected += static_cast<long long>(labels.size());
  }
  if (cokernel != expected) {
    rep.notes.push_back("cokernel rank " + std::to_string(cokernel) +
                        " != suspended quotient rank " +
                        std::to_string(expected));
  }
  rep.pass = rep.pass && injective && cokernel == expected;
  rep.notes.push_back("cokernel basis = dlog(" + gen + ") * basis of HH(A/" +
                      gen + "), rank " + std::to_string(cokernel));
  return rep;
}

CheckReport logEtaleCheck(const PresentedAlgebra& base, const std::string& gen,
                          long long m, long long degLo, long long degHi) {
  long long p = base.coeffs().p();
  if (m >= 1 && m % p == 0) {
    fail("WildPrime", "p = " + std::to_string(p) + " divides m = " +
                          std::to_string(m) + "; the comparison needs p | m "
                          "to fail");
  }
  int gi = base.requireGen(gen);
  Element a = generatorElement(base, gi);
  HypothesisReport hyp = checkHypothesis(base, a, m);
  if (!hyp.accepted) fail("HypothesisFailed", "base/root data rejected");
  long long k = hyp.k;

  PresentedAlgebra adjoined = flattenRoots(adjoinRoot(base, a, m, "zroot"));
  HKRModule big = logHH(adjoined, "zroot");
  HKRModule small = logHH(base, gen);

  // Shifted windows: weight-i slice of the big table is compared against
  // the small table shifted up by i*k.
  BasisTable tBig = hkrBasis(big, degLo, degHi);
  BasisTable tSmall = hkrBasis(small, degLo - (m - 1) * k, degHi);

  CheckReport rep;
  rep.check = "log_etale";
  rep.params = {{"gen", gen},
                {"m", std::to_string(m)},
                {"k", std::to_string(k)},
                {"p", std::to_string(p)}};
  rep.degLo = degLo;
  rep.degHi = degHi;
  for (long long i = 0; i < m; ++i) {
    for (long long d = degLo; d <= degHi; ++d) {
      long long lhs = tBig.rankAt(d, i);
      long long rhs = tSmall.rankAt(d - i * k, 0);
      if (lhs == 0 && rhs == 0) continue;
      pushRanks(rep, Bidegree{d, i}, lhs, rhs);
    }
  }
  finishReport(rep);
  rep.notes.push_back("weight-i slice of logHH(adjoined | root) vs "
                      "suspension by i*k of logHH(base | " +
                      gen + ")");
  return rep;
}

} // namespace rootadj
