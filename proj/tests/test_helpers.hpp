#ifndef ROOTADJ_TEST_HELPERS_HPP
#define ROOTADJ_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "rootadj/basis_table.hpp"

namespace rootadj::testing {

inline RawElement rawGen(const std::string& name, int e = 1) {
  RawTerm t;
  t.coeff = Rational(1);
  t.exps[name] = e;
  return {t};
}

/// Z_(p)[v1] with |v1| = 2p-2, the ell model.
inline PresentedAlgebra ellAlgebra(long long p) {
  AlgebraBuilder b(CoefficientRing::Kind::ZpLocal, p, 0);
  b.gen("v1", 2 * p - 2, 0);
  return b.build();
}

/// Random homogeneous element: a coefficient combination of the basis
/// monomials at one randomly chosen bidegree of the window.
inline Element randomHomogeneous(const PresentedAlgebra& alg,
                                 const BasisTable& table, std::mt19937& rng) {
  std::vector<Bidegree> keys;
  for (const auto& [b, labels] : table.entries) {
    if (!labels.empty()) keys.push_back(b);
  }
  if (keys.empty()) return zeroElement();
  std::uniform_int_distribution<std::size_t> pickKey(0, keys.size() - 1);
  Bidegree at = keys[pickKey(rng)];

  // Rebuild monomials at this bidegree by re-enumerating exponents from the
  // labels.
  const auto& labels = table.entries.at(at);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> terms;
  for (const auto& label : labels) {
    int c = coeff(rng);
    if (c == 0) continue;
    Term t;
    t.coeff = Rational(c);
    t.exps.assign(alg.genCount(), 0);
    if (label != "1") {
      std::size_t pos = 0;
      while (pos < label.size()) {
        std::size_t star = label.find('*', pos);
        std::string factor = label.substr(
            pos, star == std::string::npos ? std::string::npos : star - pos);
        std::size_t caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
        t.exps[alg.requireGen(name)] = e;
        if (star == std::string::npos) break;
        pos = star + 1;
      }
    }
    terms.push_back(std::move(t));
  }
  return normalizeTerms(alg, std::move(terms));
}

} // namespace rootadj::testing

#endif
