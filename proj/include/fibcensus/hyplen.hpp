#pragma once

namespace fibcensus {

enum class LengthKind { hyperbolic, extremal, modulus };

struct LengthValue {
  double value;
  LengthKind kind;
};

// Collar function 2*asinh(1/sinh(x/2)): strictly decreasing involution with
// fixed point 2*asinh(1).
double collar_F(double x);

// Lower bound for the length of a curve crossing a geodesic of length l_alpha
// the given number of times: intersections * F(l_alpha).
double collar_lower_bound(double l_alpha, long intersections);

// The unique root of F(x) = e^{3L} x. F(x) > e^{3L} x holds strictly for all
// x below the returned value, so this is the sharpest admissible thickness
// threshold for the given L.
double epsilon_thick(double L, double tol = 1e-15);

struct ExtremalBracket {
  double lower, upper;  // l/pi <= extremal length <= (l/2) e^{l/2}
};

ExtremalBracket extremal_bounds(double hyperbolic_length);

// Modulus is the reciprocal of extremal length, so the bracket flips.
ExtremalBracket modulus_bounds(double hyperbolic_length);

// e^{dist} * l; lengths grow at most exponentially in the Teichmueller
// distance moved.
double wolpert_factor(double l, double dist);

}  // namespace fibcensus
