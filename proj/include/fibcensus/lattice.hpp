#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "fibcensus/conegeom.hpp"

namespace fibcensus {

// Axis-aligned d-cube inside a fibered face. The center lies in the face's
// affine hyperplane <psi, x> = 1; the cube extends only along coordinates on
// which psi vanishes, so every scaled copy stays in a single norm level set.
struct CubeRegion {
  int face_index = 0;
  std::vector<mpq_class> center;
  mpq_class radius;
  std::vector<int> axes;

  int dimension() const { return static_cast<int>(axes.size()); }
};

// Checks the geometry above plus the defining invariant: the closed cube is
// contained in the open cone of the face (every vertex passes the strict
// cone test after clearing denominators). Throws domain_error.
void validate_cube(const NormData& nd, const FiberedFace& face, const CubeRegion& cube);

struct CountReport {
  Coord g = 0;
  long long total = 0;
  // The elementwise count is independent of the Moebius route and is only
  // attempted below a slice-size budget; it is never silently replaced.
  std::optional<long long> primitive_exact;
  long long primitive_ie = 0;
  std::optional<double> lower_bound;  // present when the cube dimension is >= 2
};

// Largest slice (total points) on which count_report runs the elementwise
// primitive count.
inline constexpr long long kExactCountBudget = 40'000'000;

// Integer points of (2g-2) * cube, lexicographic. Empty when a fixed
// coordinate of the scaled cube misses the integer lattice.
std::vector<IntVec> enumerate_cube(const CubeRegion& cube, Coord g);

long long cube_total_count(const CubeRegion& cube, Coord g);
long long primitive_count_exact(const CubeRegion& cube, Coord g);

// Moebius sum over square-free divisors of g-1; agrees with the exact count.
long long primitive_count_ie(const CubeRegion& cube, Coord g);

// All four numbers at once (single report row).
CountReport count_report(const CubeRegion& cube, Coord g);

// C * ((4g-4) r)^d with C = 2 - zeta(d), the series constant summed with a
// tail bound of 1e-13. Requires d >= 2.
double lower_bound_poly(int d, const mpq_class& r, Coord g);

// Exact number of integral classes with norm <= r, by box-bounded
// enumeration with per-axis constraint propagation from the dual vertices.
long long count_ball_points(const NormData& nd, Coord r, int jobs = 1);

}  // namespace fibcensus
