#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibcensus/errors.hpp"

namespace fibcensus {

using Coord = std::int64_t;

// Integer coordinate vector. Used both for cohomology classes and for the
// dual vertices / functionals that act on them.
using IntVec = std::vector<Coord>;

Coord dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
Coord gcd_all(const IntVec& v);  // nonnegative; 0 only for the zero vector

IntVec add(const IntVec& a, const IntVec& b);
IntVec scale(Coord k, const IntVec& v);
IntVec negate(const IntVec& v);

// "(a,b,c)" — used in error messages and reports.
std::string to_string(const IntVec& v);

}  // namespace fibcensus
