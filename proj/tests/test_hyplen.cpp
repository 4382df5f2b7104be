#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "fibcensus/errors.hpp"
#include "fibcensus/hyplen.hpp"

using namespace fibcensus;

namespace {
const double kFixedPoint = 1.7627471740390861;  // 2 asinh(1)
}

TEST_CASE("collar function fixed point and involution") {
  CHECK(collar_F(kFixedPoint) == doctest::Approx(kFixedPoint).epsilon(1e-14));
  CHECK(std::fabs(collar_F(collar_F(2.0)) - 2.0) < 1e-12);
  for (double x = 1e-6; x < 50.0; x *= 2.3)
    CHECK(std::fabs(collar_F(collar_F(x)) - x) < 1e-12 * std::max(1.0, x));
  CHECK(collar_F(1e-6) > 25.0);
  CHECK_THROWS_AS(collar_F(0.0), domain_error);
  CHECK_THROWS_AS(collar_F(-1.0), domain_error);
}

TEST_CASE("collar function is strictly decreasing") {
  double prev = collar_F(1e-5);
  for (double x = 2e-5; x < 40.0; x *= 1.07) {
    double v = collar_F(x);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("collar value frozen against the series oracle") {
  CHECK(collar_F(1.0) == doctest::Approx(2.8136582274945905).epsilon(1e-14));
  CHECK(collar_F(2.0) == doctest::Approx(1.5438736658106094).epsilon(1e-14));
}

TEST_CASE("crossing-curve lower bound") {
  CHECK(collar_lower_bound(1.0, 0) == 0.0);
  CHECK(collar_lower_bound(kFixedPoint, 1) == doctest::Approx(kFixedPoint).epsilon(1e-14));
  CHECK(collar_lower_bound(1.0, 3) == doctest::Approx(3 * 2.8136582274945905).epsilon(1e-14));
  CHECK_THROWS_AS(collar_lower_bound(-1.0, 1), domain_error);
  CHECK_THROWS_AS(collar_lower_bound(1.0, -1), domain_error);
}

TEST_CASE("thickness threshold solves F(x) = e^{3L} x") {
  for (double L : {0.1, 0.5, 0.962, 1.0, 2.0, 5.0}) {
    double eps = epsilon_thick(L);
    CHECK(std::fabs(collar_F(eps) - std::exp(3 * L) * eps) < 1e-10);
    // strictness below the root
    double below = 0.99 * eps;
    CHECK(collar_F(below) > std::exp(3 * L) * below);
  }
  // frozen regression constants from the bisection oracle
  CHECK(epsilon_thick(0.962) == doctest::Approx(0.29220480576709411).epsilon(1e-10));
  CHECK(epsilon_thick(0.1) == doctest::Approx(1.5108016472052733).epsilon(1e-10));
  CHECK(epsilon_thick(5.0) == doctest::Approx(8.0263137576584594e-6).epsilon(1e-9));
}

TEST_CASE("thickness threshold decreases in L and limits to the fixed point") {
  CHECK(epsilon_thick(1.0) < epsilon_thick(0.5));
  CHECK(epsilon_thick(0.5) < epsilon_thick(0.25));
  CHECK(std::fabs(epsilon_thick(1e-9) - kFixedPoint) < 1e-6);
}

TEST_CASE("extremal length brackets and modulus reciprocity") {
  ExtremalBracket e = extremal_bounds(2.0);
  CHECK(e.lower == doctest::Approx(2.0 / M_PI).epsilon(1e-15));
  CHECK(e.upper == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  for (double l : {0.01, 1.0, 10.0}) {
    ExtremalBracket b = extremal_bounds(l);
    CHECK(b.lower < b.upper);
    ExtremalBracket m = modulus_bounds(l);
    CHECK(m.lower == doctest::Approx(1.0 / b.upper).epsilon(1e-15));
    CHECK(m.upper == doctest::Approx(1.0 / b.lower).epsilon(1e-15));
  }
  CHECK_THROWS_AS(extremal_bounds(0.0), domain_error);
}

TEST_CASE("length distortion under bounded moves") {
  CHECK(wolpert_factor(1.0, 0.0) == 1.0);
  CHECK(wolpert_factor(1.0, 0.962 / 2) == doctest::Approx(std::exp(0.481)).epsilon(1e-15));
  // k repeated moves equal one move of k times the distance
  double once = wolpert_factor(wolpert_factor(wolpert_factor(2.0, 0.3), 0.3), 0.3);
  CHECK(once == doctest::Approx(wolpert_factor(2.0, 0.9)).epsilon(1e-14));
  CHECK_THROWS_AS(wolpert_factor(1.0, -0.1), domain_error);
}

TEST_CASE("thick-part contradiction chain for short curves") {
  // for l below the threshold, F(l) beats the largest possible stretched
  // length e^{3L} l >= (e^{L/g})^{3g} l
  for (double L : {0.3, 0.962, 1.7}) {
    double eps = epsilon_thick(L);
    for (double frac : {0.99, 0.5, 0.1}) {
      double l = frac * eps;
      CHECK(collar_F(l) > std::exp(3 * L) * l);
      for (long g : {2L, 5L, 40L}) {
        double stretched = std::pow(std::exp(L / g), 3.0 * g) * l;
        CHECK(std::exp(3 * L) * l >= stretched * (1 - 1e-12));
        CHECK(collar_F(l) > stretched);
      }
    }
  }
}

TEST_CASE("length values carry their unit tag") {
  LengthValue v{1.5, LengthKind::hyperbolic};
  CHECK(v.value == 1.5);
  CHECK(v.kind == LengthKind::hyperbolic);
}
