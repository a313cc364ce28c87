#include "rootadj/rational.hpp"

#include <cstdlib>
#include <limits>

#include "rootadj/errors.hpp"

namespace rootadj {

namespace {

__int128 gcdWide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    fail("ArithmeticOverflow", "rational out of 64-bit range");
  }
  return static_cast<long long>(v);
}

} // namespace

Rational Rational::fromWide(__int128 n, __int128 d) {
  if (d == 0) fail("DivisionByZero", "rational with zero denominator");
  if (n == 0) return Rational();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcdWide(n, d);
  Rational r;
  r.num_ = narrow(n / g);
  r.den_ = narrow(d / g);
  return r;
}

Rational::Rational(long long n, long long d) {
  *this = fromWide(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return fromWide(static_cast<__int128>(num_) * o.den_ +
                      static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return *this + (-o);
}

Rational Rational::operator*(const Rational& o) const {
  return fromWide(static_cast<__int128>(num_) * o.num_,
                  static_cast<__int128>(den_) * o.den_);
}

Rational Rational::inverse() const {
  if (num_ == 0) fail("DivisionByZero", "inverse of zero");
  return fromWide(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

std::string Rational::toString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  auto parseInt = [](const std::string& s) {
    if (s.empty()) fail("ParseError", "empty integer literal");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail("ParseError", "bad integer literal '" + s + "'");
    }
    if (pos != s.size()) fail("ParseError", "bad integer literal '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(parseInt(text));
  return Rational(parseInt(text.substr(0, slash)),
                  parseInt(text.substr(slash + 1)));
}

} // namespace rootadj
