#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fibcensus/lattice.hpp"

using namespace fibcensus;

namespace {

NormData square_norm() { return NormData(2, {{2, 0}, {-2, 0}, {0, 2}, {0, -2}}); }

CubeRegion spec_cube() {
  CubeRegion c;
  c.center = {mpq_class(1, 2), mpq_class(0)};
  c.radius = mpq_class(1, 4);
  c.axes = {1};
  return c;
}

// independent elementwise oracle over the raw ranges
long long brute_primitive(const CubeRegion& cube, Coord g) {
  long long n = 0;
  for (const IntVec& p : enumerate_cube(cube, g))
    if (gcd_all(p) == 1) ++n;
  return n;
}

}  // namespace

TEST_CASE("cube slices match the hand enumeration") {
  CubeRegion c = spec_cube();
  auto pts5 = enumerate_cube(c, 5);
  REQUIRE(pts5.size() == 5);
  CHECK(pts5.front() == IntVec{4, -2});
  CHECK(pts5.back() == IntVec{4, 2});
  for (std::size_t i = 1; i < pts5.size(); ++i) CHECK(pts5[i - 1] < pts5[i]);  // lex order
  CHECK(enumerate_cube(c, 2) == std::vector<IntVec>{{1, 0}});
  auto pts3 = enumerate_cube(c, 3);
  CHECK(pts3 == std::vector<IntVec>{{2, -1}, {2, 0}, {2, 1}});
  CHECK_THROWS_AS(enumerate_cube(c, 1), domain_error);
}

TEST_CASE("primitive counts on the bundled cube") {
  CubeRegion c = spec_cube();
  CHECK(primitive_count_exact(c, 5) == 2);  // only (4,+-1) survive
  CHECK(primitive_count_exact(c, 2) == 1);
  CHECK(primitive_count_exact(c, 3) == 2);
  CHECK(primitive_count_ie(c, 5) == 2);
  CHECK(primitive_count_ie(c, 2) == 1);     // Moebius sum over {1}
  CHECK(primitive_count_ie(c, 7) == primitive_count_exact(c, 7));
}

TEST_CASE("off-lattice fixed coordinates give empty slices") {
  CubeRegion c3;
  c3.center = {mpq_class(1, 2), mpq_class(1, 3), mpq_class(0)};
  c3.radius = mpq_class(1, 4);
  c3.axes = {2};
  CHECK(cube_total_count(c3, 2) == 0);  // 2 * 1/3 is not integral
  CHECK(cube_total_count(c3, 4) == 3);  // 6 * 1/3 = 2; axis range {-1,0,1}
  CHECK(primitive_count_ie(c3, 4) == primitive_count_exact(c3, 4));
}

TEST_CASE("exact and Moebius primitive counts agree on random cubes") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dd(1, 3), num(-3, 3), den(5, 12);
  for (int trial = 0; trial < 25; ++trial) {
    int d = dd(rng);
    CubeRegion c;
    c.center.push_back(mpq_class(1, 2));
    for (int j = 0; j < d; ++j) {
      mpq_class t(num(rng), den(rng));
      t.canonicalize();
      c.center.push_back(t);
      c.axes.push_back(j + 1);
    }
    c.radius = mpq_class(1 + (rng() % 3), 2 + (rng() % 5));
    c.radius.canonicalize();
    for (Coord g : {2, 3, 4, 5, 6, 7, 9, 12, 13, 30, 31, 60, 61}) {
      if (cube_total_count(c, g) > 200000) continue;  // keep the brute oracle honest but cheap
      long long ie = primitive_count_ie(c, g);
      long long ex = primitive_count_exact(c, g);
      CHECK(ie == ex);
      CHECK(ex == brute_primitive(c, g));
      CHECK(ex <= cube_total_count(c, g));
    }
  }
}

TEST_CASE("series constants for the lower bound") {
  // oracle: closed forms 2 - pi^2/6 and 2 - pi^4/90
  double c2 = lower_bound_poly(2, mpq_class(1), 2) / std::pow(4.0, 2);
  double c4 = lower_bound_poly(4, mpq_class(1), 2) / std::pow(4.0, 4);
  CHECK(std::fabs(c2 - 0.35506593315177356) < 1e-12);
  CHECK(std::fabs(c4 - 0.91767676628886181) < 1e-12);
  CHECK(lower_bound_poly(4, mpq_class(0), 17) == 0.0);
  CHECK_THROWS_AS(lower_bound_poly(1, mpq_class(1, 4), 5), domain_error);
}

TEST_CASE("ball counts on the square norm") {
  NormData nd = square_norm();
  CHECK(count_ball_points(nd, 2) == 9);
  CHECK(count_ball_points(nd, 0) == 1);
  CHECK(count_ball_points(nd, 4) == 25);
  CHECK(count_ball_points(nd, 6) == 49);
  CHECK_THROWS_AS(count_ball_points(nd, -1), domain_error);
}

TEST_CASE("ball counts against a brute-force box oracle") {
  NormData nd(2, {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {2, 2}, {-2, -2}});
  for (Coord r : {0, 1, 2, 3, 4, 5, 8, 13}) {
    long long brute = 0;
    for (Coord x = -r; x <= r; ++x)
      for (Coord y = -r; y <= r; ++y)
        if (nd.norm({x, y}) <= r) ++brute;
    CHECK(count_ball_points(nd, r) == brute);
  }
}

TEST_CASE("ball counts are monotone and scale like the dimension") {
  NormData nd = square_norm();
  long long prev = 0;
  for (Coord r = 0; r <= 40; r += 2) {
    long long c = count_ball_points(nd, r);
    CHECK(c >= prev);
    prev = c;
  }
  double ratio = static_cast<double>(count_ball_points(nd, 200)) /
                 static_cast<double>(count_ball_points(nd, 100));
  CHECK(ratio > 3.8);  // -> 2^b1 = 4
  CHECK(ratio < 4.2);
}

TEST_CASE("parallel ball counting is deterministic") {
  NormData nd(3, {{2, 0, 0}, {-2, 0, 0}, {0, 2, 0}, {0, -2, 0}, {0, 0, 2}, {0, 0, -2}});
  long long seq = count_ball_points(nd, 30, 1);
  CHECK(seq == count_ball_points(nd, 30, 2));
  CHECK(seq == count_ball_points(nd, 30, 7));
  CHECK(seq == 31LL * 31 * 31);
}

TEST_CASE("cube validation enforces the face geometry") {
  NormData nd = square_norm();
  FiberedFace f = make_face(nd, {2, 0});
  CubeRegion good = spec_cube();
  CHECK_NOTHROW(validate_cube(nd, f, good));

  CubeRegion bad = good;
  bad.radius = mpq_class(1, 2);  // vertex (1/2, 1/2) ties with the other face
  CHECK_THROWS_AS(validate_cube(nd, f, bad), domain_error);

  bad = good;
  bad.center[0] = mpq_class(1, 3);  // psi-pairing != 1
  CHECK_THROWS_AS(validate_cube(nd, f, bad), domain_error);

  bad = good;
  bad.axes = {0};  // leaves the hyperplane
  CHECK_THROWS_AS(validate_cube(nd, f, bad), domain_error);

  bad = good;
  bad.radius = mpq_class(-1, 4);
  CHECK_THROWS_AS(validate_cube(nd, f, bad), domain_error);
}
