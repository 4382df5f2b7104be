#include "fibcensus/conegeom.hpp"

#include <algorithm>
#include <cstdlib>

#include "fibcensus/smallmat.hpp"

namespace fibcensus {

NormData::NormData(int b1, std::vector<IntVec> dual_vertices)
    : b1_(b1), dual_vertices_(std::move(dual_vertices)) {
  if (b1_ <= 0) throw domain_error("b1 must be positive");
  if (dual_vertices_.empty()) throw domain_error("dual vertex set is empty");
  for (const IntVec& v : dual_vertices_) {
    if (static_cast<int>(v.size()) != b1_)
      throw domain_error("dual vertex " + to_string(v) + " has wrong length");
    if (is_zero(v)) throw domain_error("dual vertex set contains the zero vector");
  }
  for (const IntVec& v : dual_vertices_) {
    IntVec nv = negate(v);
    if (std::find(dual_vertices_.begin(), dual_vertices_.end(), nv) ==
        dual_vertices_.end())
      throw domain_error("dual vertex set not symmetric: missing " + to_string(nv));
  }
  if (rank(dual_vertices_) != b1_)
    throw domain_error("dual vertices do not span; norm would be degenerate");
}

Coord NormData::norm(const IntVec& eta) const {
  if (static_cast<int>(eta.size()) != b1_)
    throw domain_error("dimension mismatch: class has length " +
                       std::to_string(eta.size()) + ", expected " +
                       std::to_string(b1_));
  Coord best = 0;  // the zero class pairs to 0 with everything
  for (const IntVec& v : dual_vertices_) best = std::max(best, dot(eta, v));
  return best;
}

FiberedFace make_face(const NormData& nd, IntVec psi) {
  if (static_cast<int>(psi.size()) != nd.b1())
    throw domain_error("face functional has wrong length");
  for (Coord c : psi)
    if (c % 2 != 0) throw domain_error("face even-integrality violated: " + to_string(psi));
  if (std::find(nd.dual_vertices().begin(), nd.dual_vertices().end(), psi) ==
      nd.dual_vertices().end())
    throw domain_error("face functional " + to_string(psi) + " is not a dual vertex");
  return FiberedFace{std::move(psi)};
}

bool in_open_cone(const NormData& nd, const FiberedFace& face, const IntVec& eta) {
  if (is_zero(eta)) throw domain_error("zero class has no cone");
  Coord at_psi = dot(eta, face.psi);
  for (const IntVec& v : nd.dual_vertices()) {
    if (v == face.psi) continue;
    if (dot(eta, v) >= at_psi) return false;
  }
  return true;
}

bool is_primitive(const IntVec& eta) {
  if (is_zero(eta)) throw domain_error("zero vector is neither primitive nor imprimitive");
  return gcd_all(eta) == 1;
}

Coord genus_of_closed_fiber(const NormData& nd, const FiberedFace& face, const IntVec& eta) {
  if (!is_primitive(eta))
    throw domain_error("class " + to_string(eta) + " is imprimitive (gcd " +
                       std::to_string(gcd_all(eta)) + ")");
  if (!in_open_cone(nd, face, eta))
    throw domain_error("class " + to_string(eta) + " is not in the open cone");
  Coord n = nd.norm(eta);
  if (n % 2 != 0)
    throw domain_error("odd norm " + std::to_string(n) + " on a cone class; data corrupt");
  return (n + 2) / 2;
}

Coord genus_of_punctured_fiber(const NormData& nd, const FiberedFace& face,
                               const std::vector<IntVec>& boundary_functionals,
                               const IntVec& eta) {
  if (!is_primitive(eta))
    throw domain_error("class " + to_string(eta) + " is imprimitive");
  if (!in_open_cone(nd, face, eta))
    throw domain_error("class " + to_string(eta) + " is not in the open cone");
  Coord n = nd.norm(eta);
  Coord punctures = 0;
  for (const IntVec& b : boundary_functionals) punctures += std::llabs(dot(b, eta));
  Coord twice_genus = n - punctures + 2;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw domain_error("boundary functionals incompatible with norm at " + to_string(eta));
  return twice_genus / 2;
}

}  // namespace fibcensus
