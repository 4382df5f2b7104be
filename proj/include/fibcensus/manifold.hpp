#pragma once

#include <string>
#include <vector>

#include "fibcensus/conegeom.hpp"
#include "fibcensus/lattice.hpp"
#include "fibcensus/teichpoly.hpp"

namespace fibcensus {

// One fibered face: its supporting functional, the dilatation polynomial
// bound to it, the cube regions the census searches, and (cusped manifolds
// only) the boundary pairing functionals.
struct FaceData {
  IntVec psi;
  TeichPoly poly;
  std::vector<CubeRegion> cubes;
  std::vector<IntVec> boundary_functionals;

  FaceData(IntVec psi_, TeichPoly poly_, std::vector<CubeRegion> cubes_,
           std::vector<IntVec> functionals)
      : psi(std::move(psi_)),
        poly(std::move(poly_)),
        cubes(std::move(cubes_)),
        boundary_functionals(std::move(functionals)) {}
};

class ManifoldFile {
 public:
  // Validates all cross-cutting invariants; prefer load_manifold /
  // parse_manifold, which add location information to failures.
  ManifoldFile(std::string name, bool closed, int b1, std::vector<IntVec> dual_vertices,
               std::vector<FaceData> faces);

  const std::string& name() const { return name_; }
  bool closed() const { return closed_; }
  int b1() const { return norm_.b1(); }
  const NormData& norm_data() const { return norm_; }
  const std::vector<FaceData>& faces() const { return faces_; }
  FiberedFace face(int i) const;

 private:
  std::string name_;
  bool closed_;
  NormData norm_;
  std::vector<FaceData> faces_;
};

// Throws validation_error with "path:line:col" for parse failures and a
// JSON-path-style location for invariant violations.
ManifoldFile load_manifold(const std::string& path);
ManifoldFile parse_manifold(const std::string& json_text, const std::string& source);

// Canonical serialization: fixed key order, sorted vertex/term lists,
// rationals as "p/q" strings. parse(canonical_text(m)) == m byte-for-byte
// under re-serialization.
std::string canonical_text(const ManifoldFile& mf);
void save_manifold(const ManifoldFile& mf, const std::string& path);

// Resolves a manifold path: the path itself, then $FIBERED_CENSUS_DATA/path.
std::string resolve_manifold_path(const std::string& path);

}  // namespace fibcensus
