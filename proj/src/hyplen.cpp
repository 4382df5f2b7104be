#include "fibcensus/hyplen.hpp"

#include <cmath>

#include "fibcensus/errors.hpp"

namespace fibcensus {

double collar_F(double x) {
  if (!(x > 0)) throw domain_error("collar function needs x > 0");
  return 2.0 * std::asinh(1.0 / std::sinh(x / 2.0));
}

double collar_lower_bound(double l_alpha, long intersections) {
  if (!(l_alpha > 0)) throw domain_error("curve length must be positive");
  if (intersections < 0) throw domain_error("intersection number must be nonnegative");
  if (intersections == 0) return 0.0;
  return static_cast<double>(intersections) * collar_F(l_alpha);
}

double epsilon_thick(double L, double tol) {
  if (!(L > 0)) throw domain_error("L must be positive");
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  const double factor = std::exp(3.0 * L);
  auto h = [&](double x) { return collar_F(x) - factor * x; };
  // F(x)/x is strictly decreasing, so h has a single root below the collar
  // fixed point 2*asinh(1), where h is already negative.
  double hi = 2.0 * std::asinh(1.0);
  double lo = hi;
  while (h(lo) <= 0.0) lo /= 2.0;
  for (int i = 0; i < 200 && hi - lo > tol * lo; ++i) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

ExtremalBracket extremal_bounds(double l) {
  if (!(l > 0)) throw domain_error("hyperbolic length must be positive");
  return ExtremalBracket{l / M_PI, (l / 2.0) * std::exp(l / 2.0)};
}

ExtremalBracket modulus_bounds(double l) {
  ExtremalBracket e = extremal_bounds(l);
  return ExtremalBracket{1.0 / e.upper, 1.0 / e.lower};
}

double wolpert_factor(double l, double dist) {
  if (!(l > 0)) throw domain_error("curve length must be positive");
  if (dist < 0) throw domain_error("distance must be nonnegative");
  return std::exp(dist) * l;
}

}  // namespace fibcensus
