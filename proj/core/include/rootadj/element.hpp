#ifndef ROOTADJ_ELEMENT_HPP
#define ROOTADJ_ELEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "rootadj/grading.hpp"
#include "rootadj/rational.hpp"

namespace rootadj {

class PresentedAlgebra;

/// coefficient * monomial, the monomial an exponent vector over the
/// algebra's generators in declaration order.
struct Term {
  Rational coeff;
  std::vector<int> exps;
};

/// Finite sum of terms.  A normalized element has no zero coefficients, no
/// duplicate monomials, exterior exponents <= 1, root-generator exponents
/// below their root power, and terms sorted by the monomial order
/// (lexicographic on the exponent vector in generator order).
struct Element {
  std::vector<Term> terms;

  bool isZero() const { return terms.empty(); }
};

Element zeroElement();
Element unitElement(const PresentedAlgebra& alg);
Element generatorElement(const PresentedAlgebra& alg, int genIndex);
Element scalarElement(const PresentedAlgebra& alg, const Rational& c);

/// Normalizes a raw term list: applies root rewrites z^m -> a, kills
/// exterior squares, combines duplicates, sorts.
Element normalizeTerms(const PresentedAlgebra& alg, std::vector<Term> raw);

Element add(const PresentedAlgebra& alg, const Element& x, const Element& y);
Element negate(const PresentedAlgebra& alg, const Element& x);
Element scale(const PresentedAlgebra& alg, const Rational& c, const Element& x);

/// Graded-commutative product with Koszul signs; total on valid elements.
Element multiply(const PresentedAlgebra& alg, const Element& x, const Element& y);

/// x^n.  Negative n requires x to be a unit multiple of an invertible
/// monomial (all Laurent exponents).
Element power(const PresentedAlgebra& alg, const Element& x, long long n);

Bidegree bidegreeOfMonomial(const PresentedAlgebra& alg,
                            const std::vector<int>& exps);

/// Bidegree of a homogeneous nonzero element; nullopt for zero or mixed.
std::optional<Bidegree> bidegreeOf(const PresentedAlgebra& alg,
                                   const Element& x);

bool equal(const PresentedAlgebra& alg, const Element& x, const Element& y);

/// "1", "v1^2", "sigma2*d(sigma2)", ...
std::string monomialLabel(const PresentedAlgebra& alg,
                          const std::vector<int>& exps);

std::string toString(const PresentedAlgebra& alg, const Element& x);

} // namespace rootadj

#endif
