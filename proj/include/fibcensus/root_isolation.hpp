#pragma once

#include <gmpxx.h>

#include "fibcensus/rational.hpp"
#include "fibcensus/unipoly.hpp"

namespace fibcensus {

// Certified enclosure of the largest real root of an integer polynomial.
// Endpoints are exact rationals; the doubles are directed roundings of them.
struct RootInterval {
  mpq_class lo, hi;  // 1 < lo <= hi

  double lo_double() const { return to_double_down(lo); }
  double hi_double() const { return to_double_up(hi); }

  // Outward bounds for log of the enclosed root.
  double log_lo() const { return log_down(lo_double()); }
  double log_hi() const { return log_up(hi_double()); }

  mpq_class width() const { return hi - lo; }
};

// Isolates the largest real root of p, which must be strictly greater
// than 1. The returned interval has width <= tol, brackets the root by exact
// sign evaluation, and carries a certificate that no real root lies above it
// (derivative positivity, with an exact Sturm count as fallback). Repeated
// roots are handled by working on the square-free part. Throws domain_error
// "not a dilatation polynomial: ..." when no root > 1 exists.
RootInterval perron_root(const UniPoly& p, const mpq_class& tol);

}  // namespace fibcensus
