#pragma once

#include <gmpxx.h>

#include <string>

namespace fibcensus {

// Parses "p/q", plain integers, and decimal/scientific literals ("0.25",
// "1e-9", "-2.5e-3") into an exact rational. Throws domain_error on garbage.
mpq_class parse_rational(const std::string& s);

// Canonical text form: reduced "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const mpq_class& q);

// Directed conversions: the returned double is guaranteed <= (resp. >=) the
// exact rational value. mpq_get_d truncates toward zero, so positives need a
// bump only on the upper side.
double to_double_down(const mpq_class& q);
double to_double_up(const mpq_class& q);

// log with the result widened outward by 2 ulps, covering libm rounding.
double log_down(double x);
double log_up(double x);

}  // namespace fibcensus
