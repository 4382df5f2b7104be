#include "fibcensus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

#include "fibcensus/smallmat.hpp"

namespace fibcensus {

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

Coord mpq_floor(const mpq_class& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw domain_error("value out of coordinate range");
  return z.get_si();
}

Coord mpq_ceil(const mpq_class& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw domain_error("value out of coordinate range");
  return z.get_si();
}

struct Slice {
  bool empty = true;
  IntVec base;                                    // non-axis coordinates filled
  std::vector<std::pair<Coord, Coord>> ranges;    // per cube axis, inclusive
};

Slice cube_slice(const CubeRegion& cube, Coord g) {
  if (g < 2) throw domain_error("slice genus must be at least 2");
  const Coord s = 2 * g - 2;
  const int b1 = static_cast<int>(cube.center.size());
  Slice out;
  out.base.assign(b1, 0);
  std::vector<bool> is_axis(b1, false);
  for (int a : cube.axes) is_axis[a] = true;
  for (int j = 0; j < b1; ++j) {
    if (is_axis[j]) continue;
    mpq_class v = mpq_class(s) * cube.center[j];
    if (v.get_den() != 1) return out;  // scaled center off the lattice: empty slice
    if (!v.get_num().fits_slong_p()) throw domain_error("scaled center out of range");
    out.base[j] = v.get_num().get_si();
  }
  for (int a : cube.axes) {
    mpq_class lo = mpq_class(s) * (cube.center[a] - cube.radius);
    mpq_class hi = mpq_class(s) * (cube.center[a] + cube.radius);
    Coord l = mpq_ceil(lo), h = mpq_floor(hi);
    if (l > h) return out;
    out.ranges.emplace_back(l, h);
  }
  out.empty = false;
  return out;
}

long long range_size(const std::pair<Coord, Coord>& r) { return r.second - r.first + 1; }

// Number of multiples of k in [lo, hi].
long long multiples_in(Coord k, Coord lo, Coord hi) {
  long long c = floor_div(hi, k) - ceil_div(lo, k) + 1;
  return c > 0 ? c : 0;
}

std::vector<Coord> prime_factors(Coord n) {
  std::vector<Coord> ps;
  for (Coord p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

long long count_primitive_rec(const Slice& sl, std::size_t level, Coord gcd_so_far) {
  if (gcd_so_far == 1) {
    long long prod = 1;
    for (std::size_t i = level; i < sl.ranges.size(); ++i) prod *= range_size(sl.ranges[i]);
    return prod;
  }
  if (level == sl.ranges.size()) return 0;  // gcd > 1 and nothing left to vary
  long long cnt = 0;
  const auto& [lo, hi] = sl.ranges[level];
  for (Coord n = lo; n <= hi; ++n)
    cnt += count_primitive_rec(sl, level + 1, std::gcd(gcd_so_far, n));
  return cnt;
}

}  // namespace

void validate_cube(const NormData& nd, const FiberedFace& face, const CubeRegion& cube) {
  const int b1 = nd.b1();
  if (static_cast<int>(cube.center.size()) != b1)
    throw domain_error("cube center has wrong length");
  if (cube.radius <= 0) throw domain_error("cube radius must be positive");
  mpq_class pairing = 0;
  for (int j = 0; j < b1; ++j) pairing += mpq_class(face.psi[j]) * cube.center[j];
  if (pairing != 1)
    throw domain_error("cube center does not lie in the face hyperplane (psi-pairing != 1)");
  std::vector<bool> seen(b1, false);
  for (int a : cube.axes) {
    if (a < 0 || a >= b1) throw domain_error("cube axis index out of range");
    if (seen[a]) throw domain_error("duplicate cube axis");
    seen[a] = true;
    if (face.psi[a] != 0)
      throw domain_error("cube axis " + std::to_string(a) + " leaves the face hyperplane");
  }
  // every vertex of the closed cube must pass the strict cone test
  const int d = cube.dimension();
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<mpq_class> vert(cube.center);
    for (int i = 0; i < d; ++i)
      vert[cube.axes[i]] += (mask & (1 << i)) ? cube.radius : -cube.radius;
    mpz_class lcm = 1;
    for (const mpq_class& q : vert)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec w(b1);
    for (int j = 0; j < b1; ++j) {
      mpz_class z = vert[j].get_num() * (lcm / vert[j].get_den());
      if (!z.fits_slong_p()) throw domain_error("cube vertex out of range");
      w[j] = z.get_si();
    }
    if (!in_open_cone(nd, face, w))
      throw domain_error("cube vertex " + to_string(w) + " is not inside the open face");
  }
}

std::vector<IntVec> enumerate_cube(const CubeRegion& cube, Coord g) {
  Slice sl = cube_slice(cube, g);
  std::vector<IntVec> out;
  if (sl.empty) return out;
  long long total = 1;
  for (const auto& r : sl.ranges) total *= range_size(r);
  if (total > 50'000'000) throw domain_error("cube slice too large to materialize");
  out.reserve(static_cast<std::size_t>(total));
  IntVec point = sl.base;
  const int d = cube.dimension();
  std::vector<Coord> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = sl.ranges[i].first;
  while (true) {
    for (int i = 0; i < d; ++i) point[cube.axes[i]] = cur[i];
    out.push_back(point);
    int i = d - 1;
    for (; i >= 0; --i) {
      if (cur[i] < sl.ranges[i].second) {
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = sl.ranges[j].first;
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

long long cube_total_count(const CubeRegion& cube, Coord g) {
  Slice sl = cube_slice(cube, g);
  if (sl.empty) return 0;
  long long total = 1;
  for (const auto& r : sl.ranges) total *= range_size(r);
  return total;
}

long long primitive_count_exact(const CubeRegion& cube, Coord g) {
  Slice sl = cube_slice(cube, g);
  if (sl.empty) return 0;
  Coord g0 = 0;
  for (Coord c : sl.base) g0 = std::gcd(g0, c);
  return count_primitive_rec(sl, 0, g0);
}

long long primitive_count_ie(const CubeRegion& cube, Coord g) {
  Slice sl = cube_slice(cube, g);
  if (sl.empty) return 0;
  // any common divisor divides the fixed coordinate g-1, so Moebius over the
  // square-free divisors of g-1 suffices
  std::vector<Coord> ps = prime_factors(g - 1);
  const int m = static_cast<int>(ps.size());
  long long sum = 0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Coord k = 1;
    int bits = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) {
        k *= ps[i];
        ++bits;
      }
    bool ok = true;
    for (Coord c : sl.base)
      if (c % k != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    long long term = 1;
    for (const auto& [lo, hi] : sl.ranges) term *= multiples_in(k, lo, hi);
    sum += (bits % 2 == 0) ? term : -term;
  }
  return sum;
}

CountReport count_report(const CubeRegion& cube, Coord g) {
  CountReport r;
  r.g = g;
  r.total = cube_total_count(cube, g);
  if (r.total <= kExactCountBudget) r.primitive_exact = primitive_count_exact(cube, g);
  r.primitive_ie = primitive_count_ie(cube, g);
  if (cube.dimension() >= 2) r.lower_bound = lower_bound_poly(cube.dimension(), cube.radius, g);
  return r;
}

double lower_bound_poly(int d, const mpq_class& r, Coord g) {
  if (d < 2) throw domain_error("lower bound constant needs dimension >= 2");
  static std::map<int, double> cache;
  double C;
  if (auto it = cache.find(d); it != cache.end()) {
    C = it->second;
  } else {
    // 2 - zeta(d): partial sum plus the integral bracket
    //   (N+1)^{1-d}/(d-1) <= tail <= N^{1-d}/(d-1),
    // with N chosen so the bracket width N^{-d} is below 1e-12.
    const long N = std::max(1000L, static_cast<long>(std::ceil(std::pow(1e12, 1.0 / d))));
    long double sum = 0.0L;
    for (long n = N; n >= 2; --n) sum += std::pow(static_cast<long double>(n), -d);
    long double tail_lo = std::pow(static_cast<long double>(N + 1), 1 - d) / (d - 1);
    long double tail_hi = std::pow(static_cast<long double>(N), 1 - d) / (d - 1);
    C = static_cast<double>(1.0L - sum - (tail_lo + tail_hi) / 2);
    cache[d] = C;
  }
  double edge = (4.0 * static_cast<double>(g) - 4.0) * r.get_d();
  return C * std::pow(edge, d);
}

namespace {

struct BallSearch {
  const NormData* nd;
  Coord r;
  std::vector<Coord> box;                  // per-axis bound |eta_j| <= box[j]
  std::vector<std::vector<Coord>> slack;   // per dual vertex, suffix slack from axis t on
};

long long ball_count_rec(const BallSearch& bs, int level, std::vector<Coord>& partial,
                         IntVec& eta) {
  const int b1 = bs.nd->b1();
  const auto& duals = bs.nd->dual_vertices();
  Coord lo = -bs.box[level], hi = bs.box[level];
  for (std::size_t v = 0; v < duals.size(); ++v) {
    const Coord vt = duals[v][level];
    const Coord budget = bs.r - partial[v] + bs.slack[v][level + 1];
    if (vt == 0) {
      if (budget < 0) return 0;  // cannot recover even with maximal later coords
      continue;
    }
    if (vt > 0)
      hi = std::min(hi, floor_div(budget, vt));
    else
      lo = std::max(lo, ceil_div(budget, vt));
    if (lo > hi) return 0;
  }
  if (level == b1 - 1) return hi - lo + 1;  // slack is zero here: ranges are exact
  long long cnt = 0;
  for (Coord x = lo; x <= hi; ++x) {
    eta[level] = x;
    for (std::size_t v = 0; v < duals.size(); ++v) partial[v] += duals[v][level] * x;
    cnt += ball_count_rec(bs, level + 1, partial, eta);
    for (std::size_t v = 0; v < duals.size(); ++v) partial[v] -= duals[v][level] * x;
  }
  return cnt;
}

}  // namespace

long long count_ball_points(const NormData& nd, Coord r, int jobs) {
  if (r < 0) throw domain_error("ball radius must be nonnegative");
  const int b1 = nd.b1();
  const auto& duals = nd.dual_vertices();

  // bounding box from an independent subset: |eta_j| <= r * rowsum|V^{-1}|
  std::vector<int> idx = independent_subset(duals);
  IntMat V(b1);
  for (int i = 0; i < b1; ++i) V[i] = duals[idx[i]];
  Coord dv = det(V);
  IntMat adj = adjugate(V);
  BallSearch bs;
  bs.nd = &nd;
  bs.r = r;
  bs.box.resize(b1);
  for (int j = 0; j < b1; ++j) {
    Coord rowsum = 0;
    for (int i = 0; i < b1; ++i) rowsum += std::llabs(adj[j][i]);
    bs.box[j] = floor_div(r * rowsum, std::llabs(dv));
  }
  bs.slack.resize(duals.size());
  for (std::size_t v = 0; v < duals.size(); ++v) {
    bs.slack[v].assign(b1 + 1, 0);
    for (int t = b1 - 1; t >= 0; --t)
      bs.slack[v][t] = bs.slack[v][t + 1] + bs.box[t] * std::llabs(duals[v][t]);
  }

  if (b1 == 1 || jobs <= 1) {
    std::vector<Coord> partial(duals.size(), 0);
    IntVec eta(b1, 0);
    return ball_count_rec(bs, 0, partial, eta);
  }

  // split the first axis across workers; the sum is order-independent
  const Coord lo = -bs.box[0], hi = bs.box[0];
  const long long span = hi - lo + 1;
  const int nworkers = static_cast<int>(std::min<long long>(jobs, span));
  std::vector<long long> out(nworkers, 0);
  std::vector<std::thread> threads;
  for (int w = 0; w < nworkers; ++w) {
    threads.emplace_back([&, w]() {
      std::vector<Coord> partial(duals.size(), 0);
      IntVec eta(b1, 0);
      long long c = 0;
      for (Coord x = lo + w; x <= hi; x += nworkers) {
        eta[0] = x;
        for (std::size_t v = 0; v < duals.size(); ++v) partial[v] = duals[v][0] * x;
        // reuse the recursion from level 1 with partial sums seeded by x
        c += ball_count_rec(bs, 1, partial, eta);
        std::fill(partial.begin(), partial.end(), 0);
      }
      out[w] = c;
    });
  }
  for (auto& t : threads) t.join();
  long long total = 0;
  for (long long c : out) total += c;
  return total;
}

}  // namespace fibcensus
