#ifndef ROOTADJ_ALGEBRA_MAP_HPP
#define ROOTADJ_ALGEBRA_MAP_HPP

#include <map>
#include <string>
#include <vector>

#include "rootadj/presentation.hpp"

namespace rootadj {

/// Bidegree-preserving generator assignment, extended multiplicatively
/// (with Koszul signs) and coefficient-linearly over the whole algebra.
struct AlgebraMap {
  PresentedAlgebra source;
  PresentedAlgebra target;
  std::vector<Element> images; // per source generator, in declaration order
};

/// Validates an assignment: every source generator mapped to a homogeneous
/// target element of the same bidegree, Laurent generators to invertible
/// monomials, root relations respected (image of z^m equals image of a).
/// Errors: DegreeMismatch, ModulusMismatch, NonInvertibleImage,
/// MapRootMismatch, UnknownGenerator.
AlgebraMap makeAlgebraMap(const PresentedAlgebra& source,
                          const PresentedAlgebra& target,
                          const std::map<std::string, Element>& assignment);

AlgebraMap identityMap(const PresentedAlgebra& alg);

Element applyMap(const AlgebraMap& f, const Element& x);

} // namespace rootadj

#endif
