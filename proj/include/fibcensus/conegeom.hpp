#pragma once

#include <vector>

#include "fibcensus/intvec.hpp"

namespace fibcensus {

// Polyhedral norm on the integer lattice, given by the vertex set of the dual
// ball: norm(eta) = max_v <eta, v>. The vertex set must be symmetric under
// negation and span the ambient space, which makes the support function a
// genuine norm on integral classes.
class NormData {
 public:
  NormData(int b1, std::vector<IntVec> dual_vertices);

  int b1() const { return b1_; }
  const std::vector<IntVec>& dual_vertices() const { return dual_vertices_; }

  Coord norm(const IntVec& eta) const;

 private:
  int b1_;
  std::vector<IntVec> dual_vertices_;
};

// A top-dimensional face of the dual-unit-ball picture, identified by its
// supporting functional psi. psi must be one of the dual vertices and have
// all coordinates even, so that <eta, psi> lands in 2Z for integral eta.
struct FiberedFace {
  IntVec psi;
};

// Constructs and checks a face against nd (psi listed among the dual
// vertices, all coordinates even).
FiberedFace make_face(const NormData& nd, IntVec psi);

// True iff psi is the unique maximizing dual vertex at eta. Ties with any
// other vertex mean eta sits on the cone boundary and are rejected.
bool in_open_cone(const NormData& nd, const FiberedFace& face, const IntVec& eta);

// gcd of all coordinates is 1. Throws on the zero vector.
bool is_primitive(const IntVec& eta);

// Genus of the connected surface dual to a primitive class in the open cone
// of a closed manifold: (norm + 2) / 2.
Coord genus_of_closed_fiber(const NormData& nd, const FiberedFace& face, const IntVec& eta);

// Cusped variant: genus = (norm - sum_i |<b_i, eta>| + 2) / 2 where the b_i
// are the face's boundary functionals. Throws if the result is not a
// nonnegative integer.
Coord genus_of_punctured_fiber(const NormData& nd, const FiberedFace& face,
                               const std::vector<IntVec>& boundary_functionals,
                               const IntVec& eta);

}  // namespace fibcensus
