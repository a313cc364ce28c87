#include "rootadj/element.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rootadj/errors.hpp"
#include "rootadj/presentation.hpp"

namespace rootadj {

namespace {

bool oddDeg(const PresentedAlgebra& alg, int i) {
  return ((alg.gens()[i].deg % 2) + 2) % 2 == 1;
}

/// Merges two normal-ordered monomials.  Returns false for an exterior
/// square; otherwise fills the merged exponent vector and the Koszul sign
/// picked up by interleaving the odd factors.
bool mergeMonomials(const PresentedAlgebra& alg, const std::vector<int>& a,
                    const std::vector<int>& b, std::vector<int>& out,
                    int& sign) {
  const int n = alg.genCount();
  out.assign(n, 0);
  long long inversions = 0;
  // Odd generators are exterior, so exponents are 0/1 and each list of odd
  // factors is just a set of indices.  Each odd factor of b moving left
  // past an odd factor of a with larger index costs one transposition.
  std::vector<int> aOdd, bOdd;
  for (int i = 0; i < n; ++i) {
    out[i] = a[i] + b[i];
    if (oddDeg(alg, i)) {
      if (a[i] && b[i]) return false; // exterior square
      if (a[i]) aOdd.push_back(i);
      if (b[i]) bOdd.push_back(i);
    }
  }
  std::size_t j = 0;
  for (int ai : aOdd) {
    while (j < bOdd.size() && bOdd[j] < ai) ++j;
    inversions += static_cast<long long>(j);
  }
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

} // namespace

Element zeroElement() { return Element{}; }

Element unitElement(const PresentedAlgebra& alg) {
  Element e;
  e.terms.push_back(Term{Rational(1), std::vector<int>(alg.genCount(), 0)});
  return e;
}

Element scalarElement(const PresentedAlgebra& alg, const Rational& c) {
  Rational n = alg.coeffs().normalize(c);
  if (n.isZero()) return zeroElement();
  Element e;
  e.terms.push_back(Term{n, std::vector<int>(alg.genCount(), 0)});
  return e;
}

Element generatorElement(const PresentedAlgebra& alg, int genIndex) {
  if (genIndex < 0 || genIndex >= alg.genCount()) {
    fail("UnknownGenerator", "generator index out of range");
  }
  Element e;
  std::vector<int> exps(alg.genCount(), 0);
  exps[genIndex] = 1;
  e.terms.push_back(Term{Rational(1), std::move(exps)});
  return e;
}

Element normalizeTerms(const PresentedAlgebra& alg, std::vector<Term> raw) {
  std::map<std::vector<int>, Rational> acc;
  std::deque<Term> work(raw.begin(), raw.end());
  while (!work.empty()) {
    Term t = std::move(work.front());
    work.pop_front();
    if (t.coeff.isZero()) continue;
    if (static_cast<int>(t.exps.size()) != alg.genCount()) {
      fail("InternalError", "exponent vector length mismatch");
    }
    bool dead = false;
    for (int i = 0; i < alg.genCount() && !dead; ++i) {
      if (oddDeg(alg, i) && (t.exps[i] < 0 || t.exps[i] > 1)) dead = true;
      if (alg.gens()[i].kind == GenKind::Truncated &&
          t.exps[i] >= alg.gens()[i].truncation) {
        dead = true;
      }
      if ((alg.gens()[i].kind == GenKind::Polynomial ||
           alg.gens()[i].kind == GenKind::Truncated ||
           alg.gens()[i].kind == GenKind::Exterior) &&
          t.exps[i] < 0) {
        fail("NegativeExponent",
             "negative exponent on non-Laurent generator '" +
                 alg.gens()[i].name + "'");
      }
    }
    if (dead) continue;

    // Rewrite the latest-declared root generator whose exponent reaches its
    // power; the target only involves earlier generators, so this
    // terminates.
    const RootRelation* hit = nullptr;
    for (const auto& r : alg.roots()) {
      if (t.exps[r.genIndex] >= r.power) {
        if (!hit || r.genIndex > hit->genIndex) hit = &r;
      }
    }
    if (hit != nullptr) {
      t.exps[hit->genIndex] -= static_cast<int>(hit->power);
      for (const auto& s : hit->target.terms) {
        std::vector<int> merged;
        int sign = 1;
        if (!mergeMonomials(alg, t.exps, s.exps, merged, sign)) continue;
        Rational c = alg.coeffs().mul(t.coeff, s.coeff);
        if (sign < 0) c = alg.coeffs().negate(c);
        work.push_back(Term{c, std::move(merged)});
      }
      continue;
    }

    auto it = acc.find(t.exps);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exps), t.coeff);
    } else {
      it->second = alg.coeffs().add(it->second, t.coeff);
    }
  }

  Element out;
  for (auto& [exps, c] : acc) {
    if (!c.isZero()) out.terms.push_back(Term{c, exps});
  }
  return out;
}

Element add(const PresentedAlgebra& alg, const Element& x, const Element& y) {
  std::vector<Term> raw = x.terms;
  raw.insert(raw.end(), y.terms.begin(), y.terms.end());
  return normalizeTerms(alg, std::move(raw));
}

Element negate(const PresentedAlgebra& alg, const Element& x) {
  return scale(alg, Rational(-1), x);
}

Element scale(const PresentedAlgebra& alg, const Rational& c, const Element& x) {
  std::vector<Term> raw;
  for (const auto& t : x.terms) {
    raw.push_back(Term{alg.coeffs().mul(c, t.coeff), t.exps});
  }
  return normalizeTerms(alg, std::move(raw));
}

Element multiply(const PresentedAlgebra& alg, const Element& x,
                 const Element& y) {
  std::vector<Term> raw;
  for (const auto& a : x.terms) {
    for (const auto& b : y.terms) {
      std::vector<int> merged;
      int sign = 1;
      if (!mergeMonomials(alg, a.exps, b.exps, merged, sign)) continue;
      Rational c = alg.coeffs().mul(a.coeff, b.coeff);
      if (sign < 0) c = alg.coeffs().negate(c);
      raw.push_back(Term{c, std::move(merged)});
    }
  }
  return normalizeTerms(alg, std::move(raw));
}

Element power(const PresentedAlgebra& alg, const Element& x, long long n) {
  if (n == 0) return unitElement(alg);
  if (n > 0) {
    Element acc = unitElement(alg);
    for (long long i = 0; i < n; ++i) acc = multiply(alg, acc, x);
    return acc;
  }
  // Inversion: only unit * invertible monomial.
  if (x.terms.size() != 1) {
    fail("NonInvertibleImage", "cannot invert a sum of monomials");
  }
  const Term& t = x.terms.front();
  if (!alg.coeffs().invertible(t.coeff)) {
    fail("NonInvertibleImage", "cannot invert non-unit coefficient " +
                                   t.coeff.toString());
  }
  std::vector<int> inv(alg.genCount(), 0);
  for (int i = 0; i < alg.genCount(); ++i) {
    if (t.exps[i] == 0) continue;
    if (alg.gens()[i].kind != GenKind::Laurent) {
      fail("NonInvertibleImage", "generator '" + alg.gens()[i].name +
                                     "' is not invertible");
    }
    inv[i] = -t.exps[i];
  }
  Element invOnce;
  invOnce.terms.push_back(Term{alg.coeffs().inverse(t.coeff), std::move(inv)});
  return power(alg, invOnce, -n);
}

Bidegree bidegreeOfMonomial(const PresentedAlgebra& alg,
                            const std::vector<int>& exps) {
  long long deg = 0;
  long long wt = 0;
  for (int i = 0; i < alg.genCount(); ++i) {
    deg += static_cast<long long>(exps[i]) * alg.gens()[i].deg;
    wt += static_cast<long long>(exps[i]) * alg.gens()[i].wt;
  }
  return Bidegree{deg, alg.weights().normalize(wt)};
}

std::optional<Bidegree> bidegreeOf(const PresentedAlgebra& alg,
                                   const Element& x) {
  if (x.isZero()) return std::nullopt;
  Bidegree b = bidegreeOfMonomial(alg, x.terms.front().exps);
  for (const auto& t : x.terms) {
    if (bidegreeOfMonomial(alg, t.exps) != b) return std::nullopt;
  }
  return b;
}

bool equal(const PresentedAlgebra& alg, const Element& x, const Element& y) {
  Element d = add(alg, x, negate(alg, y));
  return d.isZero();
}

std::string monomialLabel(const PresentedAlgebra& alg,
                          const std::vector<int>& exps) {
  std::string out;
  for (int i = 0; i < alg.genCount(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += alg.gens()[i].name;
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string toString(const PresentedAlgebra& alg, const Element& x) {
  if (x.isZero()) return "0";
  std::string out;
  for (const auto& t : x.terms) {
    if (!out.empty()) out += " + ";
    if (t.coeff.isOne()) {
      out += monomialLabel(alg, t.exps);
    } else {
      out += t.coeff.toString() + "*" + monomialLabel(alg, t.exps);
    }
  }
  return out;
}

} // namespace rootadj
