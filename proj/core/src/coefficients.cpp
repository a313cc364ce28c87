#include "rootadj/coefficients.hpp"

#include "rootadj/errors.hpp"

namespace rootadj {

bool isPrime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

long long modPow(long long base, long long exp, long long mod) {
  long long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % mod);
    base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

long long modInverse(long long a, long long p) {
  // p prime, a not divisible by p
  return modPow(a, p - 2, p);
}

} // namespace

CoefficientRing::CoefficientRing(Kind kind, long long p) : kind_(kind), p_(p) {
  if (p < 3 || !isPrime(p)) {
    fail("BadPrime", "coefficient prime must be an odd prime >= 3, got " +
                         std::to_string(p));
  }
}

Rational CoefficientRing::normalize(const Rational& x) const {
  if (x.den() % p_ == 0) {
    fail("InvalidCoefficient", "denominator of " + x.toString() +
                                   " is divisible by p = " + std::to_string(p_));
  }
  if (kind_ == Kind::ZpLocal) return x;
  long long n = x.num() % p_;
  if (n < 0) n += p_;
  if (n == 0) return Rational(0);
  long long d = x.den() % p_;
  long long r = static_cast<long long>(
      static_cast<__int128>(n) * modInverse(d, p_) % p_);
  return Rational(r);
}

Rational CoefficientRing::add(const Rational& a, const Rational& b) const {
  return normalize(a + b);
}

Rational CoefficientRing::mul(const Rational& a, const Rational& b) const {
  return normalize(a * b);
}

Rational CoefficientRing::negate(const Rational& a) const {
  return normalize(-a);
}

bool CoefficientRing::invertible(const Rational& x) const {
  Rational c = normalize(x);
  if (c.isZero()) return false;
  if (kind_ == Kind::Fp) return true;
  return c.num() % p_ != 0;
}

Rational CoefficientRing::inverse(const Rational& x) const {
  if (!invertible(x)) {
    fail("NotInvertible",
         x.toString() + " is not a unit in " + name());
  }
  return normalize(normalize(x).inverse());
}

std::string CoefficientRing::name() const {
  if (kind_ == Kind::Fp) return "F_" + std::to_string(p_);
  return "Z_(" + std::to_string(p_) + ")";
}

} // namespace rootadj
