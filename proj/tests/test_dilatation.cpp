#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "fibcensus/dilatation.hpp"

using namespace fibcensus;

namespace {

const mpq_class kTol = mpq_class(1, 1000000000);

// t^2 - t(u + 1 + 1/u) + 1 on two variables (t, u)
TeichPoly theta_star() {
  return TeichPoly(2, {{{2, 0}, 1}, {{1, 1}, -1}, {{1, 0}, -1}, {{1, -1}, -1}, {{0, 0}, 1}});
}

NormData square_norm() { return NormData(2, {{2, 0}, {-2, 0}, {0, 2}, {0, -2}}); }

}  // namespace

TEST_CASE("specialization collapses exponents along the class") {
  TeichPoly th = theta_star();
  CHECK(specialize(th, {1, 0}) == UniPoly::from_ints({1, -3, 1}));
  CHECK(specialize(th, {2, 0}) == UniPoly::from_ints({1, 0, -3, 0, 1}));
  CHECK(specialize(th, {2, 1}) == UniPoly::from_ints({1, -1, -1, -1, 1}));
}

TEST_CASE("specialization shifts the lowest exponent to zero") {
  // terms at (-2, 0) and (1, 0): along (1,0) exponents -2 and 1 -> 0 and 3
  TeichPoly th(2, {{{-2, 0}, 5}, {{1, 0}, 7}});
  UniPoly p = specialize(th, {1, 0});
  CHECK(p.degree() == 3);
  CHECK(p.coeffs()[0] == 5);
  CHECK(p.coeffs()[3] == 7);
}

TEST_CASE("full cancellation is a degenerate specialization") {
  TeichPoly th(2, {{{1, 1}, 1}, {{1, -1}, -1}});
  CHECK_THROWS_WITH_AS(specialize(th, {1, 0}), doctest::Contains("degenerate"),
                       domain_error);
  CHECK_THROWS_AS(specialize(th, {0, 0}), domain_error);
}

TEST_CASE("monomial specializations are rejected downstream") {
  TeichPoly th(2, {{{1, 1}, 1}, {{1, -1}, 1}});  // collapses to 2 x^e along (1,0)
  CHECK_THROWS_AS(dilatation(th, {1, 0}, kTol), domain_error);
}

TEST_CASE("dilatation values on the bundled two-variable polynomial") {
  TeichPoly th = theta_star();
  RootInterval r1 = dilatation(th, {1, 0}, kTol);
  CHECK(r1.lo_double() <= 2.618033988749895);
  CHECK(2.618033988749895 <= r1.hi_double());
  RootInterval r2 = dilatation(th, {2, 0}, kTol);
  CHECK(r2.lo_double() <= 1.618033988749895);
  CHECK(1.618033988749895 <= r2.hi_double());
  RootInterval r3 = dilatation(th, {3, 0}, kTol);
  CHECK(r3.lo_double() <= 1.3782407724892102);
  CHECK(1.3782407724892102 <= r3.hi_double());
}

TEST_CASE("structural homogeneity: p_{k eta}(x) = p_eta(x^k)") {
  TeichPoly th = theta_star();
  std::mt19937 rng(17);
  std::uniform_int_distribution<Coord> cd(-4, 4);
  int done = 0;
  while (done < 40) {
    IntVec eta{cd(rng), cd(rng)};
    if (is_zero(eta)) continue;
    UniPoly base;
    try {
      base = specialize(th, eta);
    } catch (const domain_error&) {
      continue;
    }
    for (int k = 1; k <= 6; ++k) {
      IntVec keta = scale(k, eta);
      CHECK(specialize(th, keta) == compose_power(base, k));
    }
    ++done;
  }
}

TEST_CASE("root homogeneity within combined tolerance") {
  TeichPoly th = theta_star();
  RootInterval base = dilatation(th, {1, 0}, kTol);
  double lam = 0.5 * (base.lo_double() + base.hi_double());
  for (int k = 1; k <= 10; ++k) {
    RootInterval rk = dilatation(th, {static_cast<Coord>(k), 0}, kTol);
    double expected = std::pow(lam, 1.0 / k);
    CHECK(std::fabs(0.5 * (rk.lo_double() + rk.hi_double()) - expected) < 1e-6);
  }
}

TEST_CASE("normalized dilatation is constant on rays") {
  NormData nd = square_norm();
  FiberedFace f = make_face(nd, {2, 0});
  TeichPoly th = theta_star();
  RealInterval first = normalized_dilatation(nd, f, th, {1, 0}, kTol);
  CHECK(first.lo <= 1.9248473002384138);
  CHECK(1.9248473002384138 <= first.hi);
  for (Coord k = 2; k <= 10; ++k) {
    RealInterval rk = normalized_dilatation(nd, f, th, {k, 0}, kTol);
    CHECK(rk.overlaps(first));
  }
}

TEST_CASE("normalized dilatation requires the open cone") {
  NormData nd = square_norm();
  FiberedFace f = make_face(nd, {2, 0});
  CHECK_THROWS_AS(normalized_dilatation(nd, f, theta_star(), {1, 1}, kTol), domain_error);
}

TEST_CASE("normalized dilatation blows up toward the cone boundary") {
  NormData nd = square_norm();
  FiberedFace f = make_face(nd, {2, 0});
  TeichPoly th = theta_star();
  // classes (i+1, i) approach the boundary ray through (1,1)
  double prev = 0.0;
  for (Coord i = 1; i <= 24; ++i) {
    RealInterval v = normalized_dilatation(nd, f, th, {i + 1, i}, kTol);
    CHECK(v.lo > prev);  // monotone growth along the sequence
    prev = v.lo;
  }
  CHECK(prev > 4.5);  // i=24 sits near 4.80, already 2.5x the ray value
  RealInterval far = normalized_dilatation(nd, f, th, {201, 200}, kTol);
  CHECK(far.lo > 7.8);  // keeps climbing (about 7.88 at i=200)
}
