#pragma once

#include <string>
#include <vector>

#include "fibcensus/dilatation.hpp"
#include "fibcensus/manifold.hpp"
#include "fibcensus/smallmat.hpp"

namespace fibcensus {

// One census row candidate. normalized is genus * log(lambda), the quantity
// compared against the length budget L.
struct FiberRecord {
  IntVec cls;
  Coord norm = 0;
  Coord genus = 0;
  RootInterval lambda;
  RealInterval normalized;
  std::string status;  // empty when the dilatation computation succeeded
};

// Integral norm isometries acting on classes; the adjoint of each element
// permutes the dual vertex set. Always contains +/- identity.
struct SymmetryGroup {
  std::vector<IntMat> elements;
  int order() const { return static_cast<int>(elements.size()); }
};

// Exhaustive search over images of an independent spanning subset of dual
// vertices; candidates are kept when integral, unimodular, and dual-set
// permuting.
SymmetryGroup symmetry_group(const NormData& nd);

// Number of orbits of the record classes under G (lexicographically minimal
// representative hashing). Records must all have the same genus.
long long orbit_count(const std::vector<FiberRecord>& records, const SymmetryGroup& G);
long long orbit_count_classes(const std::vector<IntVec>& classes, const SymmetryGroup& G);

struct GenusRow {
  Coord g = 0;
  std::vector<FiberRecord> included;   // normalized.hi <= L, certain members
  std::vector<FiberRecord> undecided;  // interval straddles L
  std::vector<FiberRecord> failed;     // per-record dilatation errors
  long long orbits = 0;
  long long upper_bound = 0;  // ball count at radius 6g-6
};

struct CensusResult {
  std::vector<GenusRow> rows;
  int group_order = 0;
};

// Enumerates primitive classes in the declared cube regions slice by slice,
// certifies genus * log(lambda) against L, quotients by the symmetry group,
// and reports the per-genus ball-count upper bound.
CensusResult run_census(const ManifoldFile& mf, double L, Coord g_lo, Coord g_hi,
                        const mpq_class& tol, int jobs = 1);

// Single-manifold upper bound count_ball_points(nd, 6g-6); throws if the
// provided census raw count exceeds it.
long long upper_bound_report(const ManifoldFile& mf, Coord g, long long census_raw,
                             int jobs = 1);

struct PennerFamily {
  Coord start_genus = 0;  // first g with (g-1) S + Sigma primitive and in the cone
  std::vector<FiberRecord> records;
};

// The family (g-1) * S + Sigma for g up to g_max. S must lie in the open
// cone of the face and Sigma in the kernel of its functional.
PennerFamily penner_family(const ManifoldFile& mf, int face_index, const IntVec& S,
                           const IntVec& Sigma, Coord g_max, const mpq_class& tol,
                           int jobs = 1);

}  // namespace fibcensus
