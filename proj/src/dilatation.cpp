#include "fibcensus/dilatation.hpp"

#include <cmath>
#include <limits>

namespace fibcensus {

RootInterval dilatation(const TeichPoly& theta, const IntVec& eta, const mpq_class& tol) {
  return perron_root(specialize(theta, eta), tol);
}

RealInterval scaled_log_interval(const RootInterval& r, double factor) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double lo = factor * r.log_lo();
  double hi = factor * r.log_hi();
  return RealInterval{std::nextafter(lo, -inf), std::nextafter(hi, inf)};
}

RealInterval normalized_dilatation(const NormData& nd, const FiberedFace& face,
                                   const TeichPoly& theta, const IntVec& eta,
                                   const mpq_class& tol) {
  if (!in_open_cone(nd, face, eta))
    throw domain_error("class " + to_string(eta) + " is not in the open cone of the face");
  RootInterval r = dilatation(theta, eta, tol);
  return scaled_log_interval(r, static_cast<double>(nd.norm(eta)));
}

}  // namespace fibcensus
