#ifndef ROOTADJ_RATIONAL_HPP
#define ROOTADJ_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace rootadj {

/// Exact rational on 64-bit numerator/denominator.  Always reduced, with
/// denominator > 0.  Intermediates are computed in 128 bits and an overflow
/// of the reduced result is a hard error rather than a wrap-around.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isOne() const { return num_ == 1 && den_ == 1; }
  bool isInteger() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  /// Multiplicative inverse; error on zero.
  Rational inverse() const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  /// "3", "-1/2", ...
  std::string toString() const;

  /// Parses "n" or "n/d".
  static Rational parse(const std::string& text);

private:
  static Rational fromWide(__int128 n, __int128 d);

  long long num_;
  long long den_;
};

} // namespace rootadj

#endif
