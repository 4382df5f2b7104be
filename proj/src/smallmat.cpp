#include "fibcensus/smallmat.hpp"

#include <cstdlib>
#include <utility>

namespace fibcensus {

namespace {

using I128 = __int128;

// Bareiss fraction-free elimination. Intermediate entries are minors of the
// input, so I128 is ample for the small integer matrices used here.
std::pair<int, I128> bareiss(std::vector<std::vector<I128>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  I128 prev = 1;
  int r = 0;
  int sign = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return {r, sign * prev};
}

std::vector<std::vector<I128>> widen(const IntMat& m) {
  std::vector<std::vector<I128>> w(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    w[i].assign(m[i].begin(), m[i].end());
  return w;
}

}  // namespace

int rank(const IntMat& rows) {
  if (rows.empty()) return 0;
  return bareiss(widen(rows)).first;
}

Coord det(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  for (const IntVec& row : m)
    if (static_cast<int>(row.size()) != n) throw domain_error("det: matrix not square");
  if (n == 0) return 1;
  auto [r, d] = bareiss(widen(m));
  if (r < n) return 0;
  if (d > I128(INT64_MAX) || d < I128(INT64_MIN)) throw domain_error("det: overflow");
  return static_cast<Coord>(d);
}

IntMat adjugate(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  IntMat adj(n, IntVec(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMat minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVec row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Coord cof = det(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int mcols = k ? static_cast<int>(b[0].size()) : 0;
  IntMat r(n, IntVec(mcols, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t)
      for (int j = 0; j < mcols; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

IntVec mat_apply(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

IntMat identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<int> independent_subset(const std::vector<IntVec>& vecs) {
  std::vector<int> picked;
  IntMat acc;
  int r = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    acc.push_back(vecs[i]);
    int nr = rank(acc);
    if (nr > r) {
      r = nr;
      picked.push_back(static_cast<int>(i));
    } else {
      acc.pop_back();
    }
  }
  return picked;
}

}  // namespace fibcensus
