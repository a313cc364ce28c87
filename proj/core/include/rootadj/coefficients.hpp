#ifndef ROOTADJ_COEFFICIENTS_HPP
#define ROOTADJ_COEFFICIENTS_HPP

#include <string>

#include "rootadj/rational.hpp"

namespace rootadj {

/// Ground ring of a presentation: either the prime field F_p or the
/// p-local integers Z_(p), for an odd prime p.
///
/// Scalars of both rings are carried as Rational values in canonical form:
/// F_p scalars are residues 0..p-1 over denominator 1, Z_(p) scalars are
/// reduced fractions whose denominator is coprime to p.
class CoefficientRing {
public:
  enum class Kind { Fp, ZpLocal };

  CoefficientRing(Kind kind, long long p);

  Kind kind() const { return kind_; }
  long long p() const { return p_; }
  bool isField() const { return kind_ == Kind::Fp; }

  /// Canonical form of an arbitrary rational in this ring; rejects inputs
  /// whose denominator is divisible by p.
  Rational normalize(const Rational& x) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational negate(const Rational& a) const;

  /// Units: nonzero residues in F_p; fractions with p-coprime numerator
  /// in Z_(p).
  bool invertible(const Rational& x) const;
  Rational inverse(const Rational& x) const;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

  std::string name() const;

  bool operator==(const CoefficientRing& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

private:
  Kind kind_;
  long long p_;
};

bool isPrime(long long n);

} // namespace rootadj

#endif
