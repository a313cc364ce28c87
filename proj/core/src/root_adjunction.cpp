#include "rootadj/root_adjunction.hpp"

#include <algorithm>

#include "rootadj/errors.hpp"

namespace rootadj {

namespace {

bool weightZeroConcentrated(const PresentedAlgebra& alg) {
  for (int i = 0; i < alg.genCount(); ++i) {
    if (alg.genBidegree(i).wt != 0) return false;
  }
  return true;
}

PresentationSpec specOf(const PresentedAlgebra& alg) {
  PresentationSpec spec;
  spec.coeffKind = alg.coeffs().kind();
  spec.p = alg.coeffs().p();
  spec.weightModulus = alg.weights().modulus();
  spec.gens = alg.gens();
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
    spec.roots.push_back(std::move(raw));
  }
  return spec;
}

RawElement rawElementOf(const PresentedAlgebra& alg, const Element& x) {
  RawElement raw;
  for (const auto& t : x.terms) {
    RawTerm rt;
    rt.coeff = t.coeff;
    for (int i = 0; i < alg.genCount(); ++i) {
      if (t.exps[i] != 0) rt.exps[alg.gens()[i].name] = t.exps[i];
    }
    raw.push_back(std::move(rt));
  }
  return raw;
}

/// a = unit * single generator to the first power; returns the generator
/// index, or -1.
int unitTimesGenerator(const PresentedAlgebra& alg, const Element& a) {
  if (a.terms.size() != 1) return -1;
  const Term& t = a.terms.front();
  if (!alg.coeffs().invertible(t.coeff)) return -1;
  int found = -1;
  for (int i = 0; i < alg.genCount(); ++i) {
    if (t.exps[i] == 0) continue;
    if (t.exps[i] != 1 || found >= 0) return -1;
    found = i;
  }
  return found;
}

bool genUsedInRootTargets(const PresentedAlgebra& alg, int gi,
                          int skipRelationOn = -1) {
  for (const auto& r : alg.roots()) {
    if (r.genIndex == skipRelationOn) continue;
    for (const auto& t : r.target.terms) {
      if (t.exps[gi] != 0) return true;
    }
  }
  return false;
}

} // namespace

HypothesisReport checkHypothesis(const PresentedAlgebra& base,
                                 const Element& a, long long m) {
  HypothesisReport rep;
  rep.m = m;
  rep.p = base.coeffs().p();
  if (m < 1) rep.failures.push_back("m must be positive");
  if (!weightZeroConcentrated(base)) {
    rep.failures.push_back("base is not concentrated in weight zero");
  }
  auto bd = bidegreeOf(base, a);
  if (!bd) {
    rep.failures.push_back("a must be homogeneous and nonzero");
  } else {
    if (bd->wt != 0) rep.failures.push_back("a must have weight zero");
    if (m >= 1) {
      if (bd->deg % m != 0) {
        rep.failures.push_back("deg(a) = " + std::to_string(bd->deg) +
                               " is not divisible by m = " + std::to_string(m));
      } else {
        rep.k = bd->deg / m;
        if (rep.k < 0) {
          rep.failures.push_back("k = deg(a)/m must be non-negative");
        } else if (rep.k % 2 != 0) {
          rep.failures.push_back("k = deg(a)/m = " + std::to_string(rep.k) +
                                 " must be even");
        }
        rep.positiveDegree = bd->deg > 0;
      }
    }
  }
  rep.tame = m >= 1 && (m % rep.p != 0);
  rep.accepted = rep.failures.empty();
  return rep;
}

PresentedAlgebra adjoinRoot(const PresentedAlgebra& base, const Element& a,
                            long long m, const std::string& rootName) {
  HypothesisReport rep = checkHypothesis(base, a, m);
  if (!rep.accepted) {
    std::string why;
    for (const auto& s : rep.failures) {
      if (!why.empty()) why += "; ";
      why += s;
    }
    fail("HypothesisFailed", why);
  }
  PresentationSpec spec = specOf(base);
  spec.weightModulus = m;
  for (auto& g : spec.gens) g.wt = 0;
  GeneratorSpec z;
  z.name = rootName;
  z.deg = rep.k;
  z.wt = 1;
  z.kind = GenKind::Polynomial;
  spec.gens.push_back(z);
  RawRoot root;
  root.gen = rootName;
  root.power = m;
  root.target = rawElementOf(base, a);
  spec.roots.push_back(std::move(root));
  return makeAlgebra(spec);
}

PresentedAlgebra quotientBy(const PresentedAlgebra& alg, const Element& a) {
  int gi = unitTimesGenerator(alg, a);
  if (gi < 0) {
    fail("UnsupportedDivisor",
         "quotients only support a = unit * single generator");
  }
  const GeneratorSpec& g = alg.gens()[gi];
  std::vector<bool> drop(alg.genCount(), false);

  if (const RootRelation* rel = alg.rootFor(gi)) {
    // Killing a root generator z with z^m = c*h also kills h = c^{-1} z^m.
    int hi = unitTimesGenerator(alg, rel->target);
    if (hi < 0 || alg.gens()[hi].kind != GenKind::Polynomial) {
      fail("UnsupportedDivisor",
           "root generator '" + g.name +
               "' has a target that is not a unit multiple of a polynomial "
               "generator");
    }
    if (genUsedInRootTargets(alg, hi, gi) || genUsedInRootTargets(alg, gi)) {
      fail("UnsupportedDivisor",
           "quotient would break another root rewrite");
    }
    drop[gi] = drop[hi] = true;
  } else {
    if (g.kind != GenKind::Polynomial) {
      fail("UnsupportedDivisor", "generator '" + g.name + "' is " +
                                     kindName(g.kind) +
                                     "; only polynomial divisors are supported");
    }
    if (genUsedInRootTargets(alg, gi)) {
      fail("UnsupportedDivisor", "generator '" + g.name +
                                     "' appears in a root rewrite target");
    }
    drop[gi] = true;
  }

  PresentationSpec spec;
  spec.coeffKind = alg.coeffs().kind();
  spec.p = alg.coeffs().p();
  spec.weightModulus = alg.weights().modulus();
  for (int i = 0; i < alg.genCount(); ++i) {
    if (!drop[i]) spec.gens.push_back(alg.gens()[i]);
  }
  for (const auto& r : alg.roots()) {
    if (drop[r.genIndex]) continue;
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
    spec.roots.push_back(std::move(raw));
  }
  return makeAlgebra(spec);
}

PresentedAlgebra flattenRoots(const PresentedAlgebra& alg) {
  PresentedAlgebra cur = alg;
  while (cur.hasRoots()) {
    // Pick a relation z^m = c*g where g is itself relation-free and feeds
    // no other rewrite; eliminating innermost-first unwinds chains.
    const RootRelation* chosen = nullptr;
    int targetGen = -1;
    for (const auto& r : cur.roots()) {
      int gi = unitTimesGenerator(cur, r.target);
      if (gi < 0) continue;
      if (cur.rootFor(gi) != nullptr) continue;
      if (genUsedInRootTargets(cur, gi, r.genIndex)) continue;
      chosen = &r;
      targetGen = gi;
      break;
    }
    if (chosen == nullptr) {
      fail("UnsupportedPresentation",
           "a root rewrite is not of the shape z^m = unit * generator and "
           "cannot be eliminated");
    }
    const GeneratorSpec& g = cur.gens()[targetGen];
    if (g.kind != GenKind::Polynomial && g.kind != GenKind::Laurent) {
      fail("UnsupportedPresentation",
           "cannot absorb root rewrite into " + kindName(g.kind) +
               " generator '" + g.name + "'");
    }
    PresentationSpec spec;
    spec.coeffKind = cur.coeffs().kind();
    spec.p = cur.coeffs().p();
    spec.weightModulus = cur.weights().modulus();
    for (int i = 0; i < cur.genCount(); ++i) {
      if (i == targetGen) continue;
      GeneratorSpec gs = cur.gens()[i];
      if (i == chosen->genIndex) {
        gs.kind = g.kind; // z stands in for g^(1/m)
        if (g.cap) {
          // g^c z^r with r < m corresponds to z^(c*m + r).
          gs.cap = *g.cap * chosen->power + chosen->power - 1;
        }
      }
      spec.gens.push_back(std::move(gs));
    }
    for (const auto& r : cur.roots()) {
      if (r.genIndex == chosen->genIndex) continue;
      RawRoot raw;
      raw.gen = cur.gens()[r.genIndex].name;
      raw.power = r.power;
      for (const auto& term : r.target.terms) {
        RawTerm rt;
        rt.coeff = term.coeff;
        for (int i = 0; i < cur.genCount(); ++i) {
          if (term.exps[i] != 0) rt.exps[cur.gens()[i].name] = term.exps[i];
        }
        raw.target.push_back(std::move(rt));
      }
      spec.roots.push_back(std::move(raw));
    }
    cur = makeAlgebra(spec);
  }
  return cur;
}

namespace {

Preset basePreset(const std::string& name, PresentedAlgebra alg,
                  const std::string& distinguished,
                  const std::string& description, long long rank = 1) {
  Element dist = generatorElement(alg, alg.requireGen(distinguished));
  return Preset{name, std::move(alg), distinguished, std::move(dist),
                description, rank};
}

long long powll(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    r *= b;
    if (r > (1LL << 40)) fail("BadPrime", "p^n out of supported range");
  }
  return r;
}

} // namespace

Preset makePreset(const std::string& name, long long p, long long n,
                  std::optional<long long> cap) {
  if (n < 1) fail("UnknownPreset", "height n must be >= 1");
  if (name == "ell") {
    AlgebraBuilder b(CoefficientRing::Kind::ZpLocal, p, 0);
    b.gen("v1", 2 * p - 2, 0);
    return basePreset(
        "ell", b.build(), "v1",
        "Adams summand model: Z_(p)[v1], |v1| = 2p-2 (uncompleted)");
  }
  if (name == "ku") {
    Preset ell = makePreset("ell", p, 1, std::nullopt);
    Preset out = basePreset(
        "ku",
        adjoinRoot(ell.algebra, ell.distinguished, p - 1, "u"), "u",
        "connective complex K-theory model: u^(p-1) = v1, |u| = 2, wt(u) = 1 "
        "in Z/(p-1)");
    return out;
  }
  if (name == "ko") {
    if (p == 3) {
      // (p-1)/2 = 1: the trivial root, ko = ell with a redundant generator.
      Preset ell = makePreset("ell", p, 1, std::nullopt);
      return basePreset("ko",
                        adjoinRoot(ell.algebra, ell.distinguished, 1, "alpha"),
                        "alpha", "real K-theory model at p = 3 (trivial root)");
    }
    Preset ell = makePreset("ell", p, 1, std::nullopt);
    return basePreset(
        "ko",
        adjoinRoot(ell.algebra, ell.distinguished, (p - 1) / 2, "alpha"),
        "alpha",
        "connective real K-theory model: alpha^((p-1)/2) = v1, |alpha| = 4, "
        "wt(alpha) = 1 in Z/((p-1)/2)");
  }
  if (name == "kn") {
    AlgebraBuilder b(CoefficientRing::Kind::Fp, p, 0);
    b.gen("v" + std::to_string(n), 2 * powll(p, n) - 2, 0);
    return basePreset("kn", b.build(), "v" + std::to_string(n),
                      "connective Morava K-theory model: F_p[v_n] "
                      "(F_{p^n} coefficients tracked as rank metadata)",
                      n);
  }
  if (name == "Kn") {
    AlgebraBuilder b(CoefficientRing::Kind::Fp, p, 0);
    b.gen("v" + std::to_string(n), 2 * powll(p, n) - 2, 0, GenKind::Laurent);
    return basePreset("Kn", b.build(), "v" + std::to_string(n),
                      "periodic Morava K-theory model: F_p[v_n^+-] "
                      "(F_{p^n} coefficients tracked as rank metadata)",
                      n);
  }
  if (name == "En_hat") {
    AlgebraBuilder b(CoefficientRing::Kind::ZpLocal, p, 0);
    if (n > 1 && !cap) {
      fail("MissingCap",
           "En_hat with n > 1 has degree-0 generators; pass a cap");
    }
    for (long long i = 1; i < n; ++i) {
      b.gen("u" + std::to_string(i), 0, 0, GenKind::Polynomial, cap);
    }
    b.gen("v" + std::to_string(n), 2 * powll(p, n) - 2, 0, GenKind::Laurent);
    return basePreset(
        "En_hat", b.build(), "v" + std::to_string(n),
        "Johnson-Wilson model: Z_(p)[u_1..u_(n-1)][v_n^+-], uncompleted; "
        "the conventional degree -2 class is the inverse of the root after "
        "adjunction (sign-flip view documented)");
  }
  if (name == "two_periodic_K") {
    Preset kn = makePreset("Kn", p, n, std::nullopt);
    long long m = powll(p, n) - 1;
    Preset out = basePreset(
        "two_periodic_K", adjoinRoot(kn.algebra, kn.distinguished, m, "u"),
        "u",
        "two-periodic Morava K-theory model: u^(p^n-1) = v_n, |u| = 2, "
        "wt(u) = 1 in Z/(p^n-1); the conventional degree -2 class is u^(-1)",
        n);
    return out;
  }
  fail("UnknownPreset", "no preset named '" + name + "'");
}

std::vector<std::string> presetNames() {
  return {"ell", "ku", "ko", "kn", "Kn", "En_hat", "two_periodic_K"};
}

} // namespace rootadj
