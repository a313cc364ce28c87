#include "rootadj/algebra_map.hpp"

#include "rootadj/errors.hpp"

namespace rootadj {

AlgebraMap makeAlgebraMap(const PresentedAlgebra& source,
                          const PresentedAlgebra& target,
                          const std::map<std::string, Element>& assignment) {
  if (!(source.coeffs() == target.coeffs())) {
    fail("DegreeMismatch", "source and target coefficient rings differ");
  }
  if (!(source.weights() == target.weights())) {
    fail("ModulusMismatch", "source and target weight moduli differ");
  }
  AlgebraMap f{source, target, {}};
  f.images.reserve(source.genCount());
  for (int i = 0; i < source.genCount(); ++i) {
    const GeneratorSpec& g = source.gens()[i];
    auto it = assignment.find(g.name);
    if (it == assignment.end()) {
      fail("UnknownGenerator", "no image assigned to '" + g.name + "'");
    }
    const Element& img = it->second;
    auto bd = bidegreeOf(target, img);
    if (!bd) {
      fail("DegreeMismatch",
           "image of '" + g.name + "' must be homogeneous and nonzero");
    }
    if (*bd != source.genBidegree(i)) {
      fail("DegreeMismatch", "image of '" + g.name + "' has bidegree " +
                                 formatBidegree(*bd) + ", expected " +
                                 formatBidegree(source.genBidegree(i)));
    }
    if (g.kind == GenKind::Laurent) {
      // Needed so negative exponents push forward; power() re-checks, this
      // surfaces the problem at construction time.
      try {
        power(target, img, -1);
      } catch (const Error&) {
        fail("NonInvertibleImage",
             "Laurent generator '" + g.name + "' needs an invertible image");
      }
    }
    f.images.push_back(img);
  }
  for (const auto& r : source.roots()) {
    Element lhs = power(target, f.images[r.genIndex], r.power);
    Element rhs = applyMap(f, r.target);
    if (!equal(target, lhs, rhs)) {
      fail("MapRootMismatch",
           "image of '" + source.gens()[r.genIndex].name +
               "' does not satisfy the root relation in the target");
    }
  }
  return f;
}

AlgebraMap identityMap(const PresentedAlgebra& alg) {
  std::map<std::string, Element> assignment;
  for (int i = 0; i < alg.genCount(); ++i) {
    assignment[alg.gens()[i].name] = generatorElement(alg, i);
  }
  return makeAlgebraMap(alg, alg, assignment);
}

Element applyMap(const AlgebraMap& f, const Element& x) {
  Element out = zeroElement();
  for (const auto& t : x.terms) {
    Element acc = scalarElement(f.target, t.coeff);
    for (int i = 0; i < f.source.genCount(); ++i) {
      if (t.exps[i] == 0) continue;
      acc = multiply(f.target, acc, power(f.target, f.images[i], t.exps[i]));
      if (acc.isZero()) break;
    }
    out = add(f.target, out, acc);
  }
  return out;
}

} // namespace rootadj
