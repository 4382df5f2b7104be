#pragma once

#include <vector>

#include "fibcensus/intvec.hpp"
#include "fibcensus/unipoly.hpp"

namespace fibcensus {

struct TeichTerm {
  IntVec exponents;
  Coord coeff;
};

// Multivariate integer Laurent polynomial, the dilatation oracle attached to
// a fibered face. Terms are kept sorted by exponent vector; at least two
// terms, all coefficients nonzero, no duplicate exponent vectors.
class TeichPoly {
 public:
  TeichPoly(int b1, std::vector<TeichTerm> terms);

  int b1() const { return b1_; }
  const std::vector<TeichTerm>& terms() const { return terms_; }

 private:
  int b1_;
  std::vector<TeichTerm> terms_;
};

// p_eta(x) = sum_a c_a x^<eta,a>, with equal exponents merged and the result
// shifted so the lowest exponent is 0. Throws "degenerate specialization"
// when every term cancels.
UniPoly specialize(const TeichPoly& theta, const IntVec& eta);

}  // namespace fibcensus
