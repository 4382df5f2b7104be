#pragma once

#include "fibcensus/conegeom.hpp"
#include "fibcensus/root_isolation.hpp"
#include "fibcensus/teichpoly.hpp"

namespace fibcensus {

struct RealInterval {
  double lo = 0.0, hi = 0.0;

  bool overlaps(const RealInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  double width() const { return hi - lo; }
};

// Stretch factor along eta: largest real root of the specialization.
RootInterval dilatation(const TeichPoly& theta, const IntVec& eta, const mpq_class& tol);

// norm(eta) * log(dilatation), outward-rounded. Constant on rays through the
// open cone; eta must lie in the open cone of the face.
RealInterval normalized_dilatation(const NormData& nd, const FiberedFace& face,
                                   const TeichPoly& theta, const IntVec& eta,
                                   const mpq_class& tol);

// factor * [log lo, log hi] of a root interval, outward-rounded.
RealInterval scaled_log_interval(const RootInterval& r, double factor);

}  // namespace fibcensus
