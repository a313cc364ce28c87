#ifndef ROOTADJ_GRADING_HPP
#define ROOTADJ_GRADING_HPP

#include <compare>
#include <string>

#include "rootadj/errors.hpp"

namespace rootadj {

/// Weight indexing monoid: Z when modulus() == 0, Z/m when modulus() == m > 0.
class WeightMonoid {
public:
  WeightMonoid() : m_(0) {}
  explicit WeightMonoid(long long m) : m_(m) {
    if (m < 0) fail("BadModulus", "weight modulus must be >= 0");
  }

  long long modulus() const { return m_; }
  bool isZ() const { return m_ == 0; }

  /// Canonical representative: the integer itself for Z, 0..m-1 for Z/m.
  long long normalize(long long w) const {
    if (m_ == 0) return w;
    long long r = w % m_;
    return r < 0 ? r + m_ : r;
  }

  long long add(long long a, long long b) const { return normalize(a + b); }
  long long scale(long long w, long long s) const { return normalize(w * s); }

  bool operator==(const WeightMonoid& o) const { return m_ == o.m_; }

private:
  long long m_;
};

/// (homotopy degree, weight class).  Weights add under products; the Koszul
/// sign rule reads the degree component only.
struct Bidegree {
  long long deg = 0;
  long long wt = 0;

  auto operator<=>(const Bidegree&) const = default;
};

inline std::string formatBidegree(const Bidegree& b) {
  return "(" + std::to_string(b.deg) + "," + std::to_string(b.wt) + ")";
}

} // namespace rootadj

#endif
