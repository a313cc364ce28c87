#include "rootadj/presentation.hpp"

#include <algorithm>

#include "rootadj/errors.hpp"

namespace rootadj {

std::string kindName(GenKind kind) {
  switch (kind) {
    case GenKind::Polynomial: return "polynomial";
    case GenKind::Laurent: return "laurent";
    case GenKind::Exterior: return "exterior";
    case GenKind::Truncated: return "truncated";
  }
  return "?";
}

GenKind genKindFromString(const std::string& s) {
  if (s == "polynomial") return GenKind::Polynomial;
  if (s == "laurent") return GenKind::Laurent;
  if (s == "exterior") return GenKind::Exterior;
  if (s == "truncated") return GenKind::Truncated;
  fail("ParseError", "unknown generator kind '" + s + "'");
}

int PresentedAlgebra::genIndex(const std::string& name) const {
  for (int i = 0; i < genCount(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return -1;
}

int PresentedAlgebra::requireGen(const std::string& name) const {
  int i = genIndex(name);
  if (i < 0) fail("UnknownGenerator", "no generator named '" + name + "'");
  return i;
}

Bidegree PresentedAlgebra::genBidegree(int i) const {
  return Bidegree{gens_[i].deg, weights_.normalize(gens_[i].wt)};
}

const RootRelation* PresentedAlgebra::rootFor(int i) const {
  for (const auto& r : roots_) {
    if (r.genIndex == i) return &r;
  }
  return nullptr;
}

namespace {

void validateName(const std::string& name) {
  if (name.empty()) fail("BadGeneratorName", "empty generator name");
  for (char c : name) {
    if (c == '*' || c == '^' || c == ' ' || c == '\t' || c == '\n' ||
        c == ',') {
      fail("BadGeneratorName",
           "generator name '" + name + "' contains a reserved character");
    }
  }
  if (name == "1") fail("BadGeneratorName", "'1' is reserved for the unit");
}

} // namespace

PresentedAlgebra makeAlgebra(const PresentationSpec& spec) {
  CoefficientRing coeffs(spec.coeffKind, spec.p);
  WeightMonoid weights(spec.weightModulus);
  PresentedAlgebra alg(coeffs, weights);

  for (const auto& g : spec.gens) {
    validateName(g.name);
    if (alg.genIndex(g.name) >= 0) {
      fail("DuplicateName", "generator '" + g.name + "' declared twice");
    }
    bool odd = ((g.deg % 2) + 2) % 2 == 1;
    if (odd && g.kind != GenKind::Exterior) {
      fail("OddDegreeNonExterior",
           "odd-degree generator '" + g.name + "' must be exterior");
    }
    if (!odd && g.kind == GenKind::Exterior) {
      fail("EvenDegreeExterior",
           "exterior generator '" + g.name + "' must have odd degree");
    }
    if (g.kind == GenKind::Truncated && g.truncation < 2) {
      fail("BadTruncation",
           "truncated generator '" + g.name + "' needs exponent bound >= 2");
    }
    if (g.cap && *g.cap < 0) {
      fail("MissingCap", "cap on '" + g.name + "' must be non-negative");
    }
    GeneratorSpec stored = g;
    stored.wt = weights.normalize(g.wt);
    alg.gens_.push_back(stored);
  }

  for (const auto& r : spec.roots) {
    int zi = alg.genIndex(r.gen);
    if (zi < 0) {
      fail("BadRootRelation", "root relation on unknown generator '" + r.gen + "'");
    }
    if (r.power < 1) {
      fail("BadRootRelation", "root power must be >= 1 on '" + r.gen + "'");
    }
    if (alg.rootFor(zi) != nullptr) {
      fail("BadRootRelation", "two root relations on '" + r.gen + "'");
    }
    if (alg.gens_[zi].kind != GenKind::Polynomial) {
      fail("BadRootRelation",
           "root generator '" + r.gen + "' must be polynomial");
    }
    // Resolve the target over the prefix of earlier generators only.
    std::vector<Term> raw;
    for (const auto& rt : r.target) {
      Term t;
      t.coeff = coeffs.normalize(rt.coeff);
      t.exps.assign(alg.gens_.size(), 0);
      for (const auto& [name, e] : rt.exps) {
        int gi = alg.genIndex(name);
        if (gi < 0) {
          fail("BadRootRelation",
               "root target uses unknown generator '" + name + "'");
        }
        if (gi >= zi) {
          fail("BadRootRelation", "root target of '" + r.gen +
                                      "' must only use earlier generators");
        }
        t.exps[gi] = e;
      }
      raw.push_back(std::move(t));
    }
    RootRelation rel;
    rel.genIndex = zi;
    rel.power = r.power;
    rel.target = normalizeTerms(alg, std::move(raw));
    auto targetDeg = bidegreeOf(alg, rel.target);
    if (!targetDeg) {
      fail("BadRootRelation",
           "root target of '" + r.gen + "' must be homogeneous and nonzero");
    }
    Bidegree zdeg = alg.genBidegree(zi);
    if (zdeg.deg * r.power != targetDeg->deg ||
        weights.scale(zdeg.wt, r.power) != targetDeg->wt) {
      fail("BadRootRelation",
           "bidegree mismatch in '" + r.gen + "^" + std::to_string(r.power) +
               " = target': " + std::to_string(r.power) + "*" +
               formatBidegree(zdeg) + " != " + formatBidegree(*targetDeg));
    }
    alg.roots_.push_back(std::move(rel));
  }

  // Degree-0 free generators need a cap unless a root rewrite already
  // bounds their exponents.
  for (int i = 0; i < alg.genCount(); ++i) {
    const auto& g = alg.gens_[i];
    if (g.deg == 0 &&
        (g.kind == GenKind::Polynomial || g.kind == GenKind::Laurent) &&
        !g.cap && alg.rootFor(i) == nullptr) {
      fail("MissingCap", "degree-0 " + kindName(g.kind) + " generator '" +
                             g.name + "' needs an enumeration cap");
    }
  }

  return alg;
}

Element resolveElement(const PresentedAlgebra& alg, const RawElement& raw) {
  std::vector<Term> terms;
  for (const auto& rt : raw) {
    Term t;
    t.coeff = alg.coeffs().normalize(rt.coeff);
    t.exps.assign(alg.genCount(), 0);
    for (const auto& [name, e] : rt.exps) {
      t.exps[alg.requireGen(name)] = e;
    }
    terms.push_back(std::move(t));
  }
  return normalizeTerms(alg, std::move(terms));
}

AlgebraBuilder::AlgebraBuilder(CoefficientRing::Kind kind, long long p,
                               long long modulus) {
  spec_.coeffKind = kind;
  spec_.p = p;
  spec_.weightModulus = modulus;
}

AlgebraBuilder& AlgebraBuilder::gen(const std::string& name, long long deg,
                                    long long wt, GenKind kind,
                                    std::optional<long long> cap,
                                    long long truncation) {
  GeneratorSpec g;
  g.name = name;
  g.deg = deg;
  g.wt = wt;
  g.kind = kind;
  g.cap = cap;
  g.truncation = truncation;
  spec_.gens.push_back(std::move(g));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::root(const std::string& gen, long long power,
                                     const RawElement& target) {
  RawRoot r;
  r.gen = gen;
  r.power = power;
  r.target = target;
  spec_.roots.push_back(std::move(r));
  return *this;
}

PresentedAlgebra AlgebraBuilder::build() const { return makeAlgebra(spec_); }

} // namespace rootadj
