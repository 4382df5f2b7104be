#include "fibcensus/intvec.hpp"

#include <numeric>
#include <sstream>

namespace fibcensus {

Coord dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw domain_error("dimension mismatch: " + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()));
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (Coord c : v)
    if (c != 0) return false;
  return true;
}

Coord gcd_all(const IntVec& v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, c);
  return g;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw domain_error("dimension mismatch in add");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec scale(Coord k, const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

IntVec negate(const IntVec& v) { return scale(-1, v); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fibcensus
