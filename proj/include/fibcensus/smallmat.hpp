#pragma once

#include <vector>

#include "fibcensus/intvec.hpp"

namespace fibcensus {

// Exact integer linear algebra for the handful-of-dimensions matrices that
// appear here (b1 is small). Rows are IntVecs.
using IntMat = std::vector<IntVec>;

// Rank of the row span.
int rank(const IntMat& rows);

// Determinant of a square matrix (Bareiss, exact in int64 for our sizes).
Coord det(const IntMat& m);

// Adjugate: adj(m) * m = det(m) * I.
IntMat adjugate(const IntMat& m);

// Matrix product and matrix-vector application (rows act on column vectors).
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& v);
IntMat identity(int n);

// Picks a maximal linearly independent subset of the given vectors, in input
// order. Size equals rank.
std::vector<int> independent_subset(const std::vector<IntVec>& vecs);

}  // namespace fibcensus
