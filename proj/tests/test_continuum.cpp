#include <cmath>
#include <numbers>

#include "congest/continuum.hpp"
#include "doctest.h"

using namespace congest;

namespace {
constexpr double kPi = std::numbers::pi;
const SpaceSpec kHyp2{2, CurvatureSign::negative, 1.0};
const SpaceSpec kEuc2{2, CurvatureSign::zero, 0.0};
const SpaceSpec kEuc3{3, CurvatureSign::zero, 0.0};
const SpaceSpec kSph2{2, CurvatureSign::positive, 1.0};
}  // namespace

TEST_CASE("space validation") {
  CHECK_THROWS_AS(SpaceSpec({1, CurvatureSign::zero, 0.0}).validate(), UnsupportedDimension);
  CHECK_THROWS_AS(SpaceSpec({2, CurvatureSign::negative, 0.0}).validate(), ValidationError);
  CHECK_NOTHROW(kHyp2.validate());
}

TEST_CASE("quadrature basics") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return x * x; }, -1.0, 2.0).value == doctest::Approx(3.0));
  CHECK(integrate([](double) { return 1.0; }, 0.0, 0.0).value == 0.0);
  // oscillation the panel budget cannot resolve
  QuadSpec tight{1e-13, 8};
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1e4 * x); }, 0.0, 1.0, tight),
                  QuadratureNotConverged);
}

TEST_CASE("ball volumes against closed forms") {
  CHECK(ball_volume(kEuc2, 2.0) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(ball_volume(kEuc3, 1.5) == doctest::Approx(4.0 / 3.0 * kPi * std::pow(1.5, 3)).epsilon(1e-14));
  CHECK(ball_volume(SpaceSpec{4, CurvatureSign::zero, 0.0}, 1.0) ==
        doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
  CHECK(ball_volume(kHyp2, 3.0) == doctest::Approx(2.0 * kPi * (std::cosh(3.0) - 1.0)).epsilon(1e-14));
  CHECK(ball_volume(SpaceSpec{3, CurvatureSign::negative, 1.0}, 2.0) ==
        doctest::Approx(kPi * (std::sinh(4.0) - 4.0)).epsilon(1e-13));
  // curvature scale: H^2 with k=2 at radius R has area 2 pi (cosh(2R)-1)/4
  CHECK(ball_volume(SpaceSpec{2, CurvatureSign::negative, 2.0}, 1.0) ==
        doctest::Approx(2.0 * kPi * (std::cosh(2.0) - 1.0) / 4.0).epsilon(1e-13));
  CHECK(ball_volume(kSph2, kPi) == doctest::Approx(4.0 * kPi).epsilon(1e-13));  // whole sphere
  CHECK(ball_volume(kSph2, kPi / 2) == doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(ball_volume(SpaceSpec{3, CurvatureSign::positive, 1.0}, kPi) ==
        doctest::Approx(2.0 * kPi * kPi).epsilon(1e-13));
  CHECK_THROWS_AS(ball_volume(kEuc2, -1.0), RadiusOutOfRange);
  CHECK_THROWS_AS(ball_volume(kSph2, 4.0), RadiusOutOfRange);
}

TEST_CASE("sphere surfaces") {
  CHECK(sphere_surface(0) == doctest::Approx(2.0));
  CHECK(sphere_surface(1) == doctest::Approx(2.0 * kPi));
  CHECK(sphere_surface(2) == doctest::Approx(4.0 * kPi));
  CHECK(sphere_surface(3) == doctest::Approx(2.0 * kPi * kPi));
}

TEST_CASE("exit lengths at the radial endpoints") {
  for (const SpaceSpec& sp : {kHyp2, kEuc2, kSph2}) {
    const double R = sp.sign == CurvatureSign::positive ? 2.5 : 4.0;
    for (double a : {0.0, 0.7, R / 2}) {
      CHECK(exit_length(sp, R, a, 0.0) == doctest::Approx(R - a).epsilon(1e-12));
      CHECK(exit_length(sp, R, a, kPi) == doctest::Approx(R + a).epsilon(1e-12));
    }
    CHECK(exit_length(sp, R, 0.0, 1.234) == doctest::Approx(R).epsilon(1e-12));
  }
  CHECK_THROWS_AS(exit_length(kEuc2, 1.0, 2.0, 0.0), PointOutsideBall);
  CHECK_THROWS_AS(exit_length(kEuc2, 1.0, 0.5, 4.0), ValidationError);
}

TEST_CASE("euclidean exit length closed form") {
  CHECK(exit_length(kEuc2, 10.0, 5.0, kPi / 2) == doctest::Approx(std::sqrt(75.0)).epsilon(1e-14));
  CHECK(exit_length(kEuc2, 2.0, 1.0, kPi / 3) ==
        doctest::Approx(-std::cos(kPi / 3) + std::sqrt(4.0 - std::sin(kPi / 3) * std::sin(kPi / 3))));
}

TEST_CASE("exit length solves the boundary equation in every class") {
  // the exit point must sit at distance exactly R from the center
  // (hyperbolic/spherical law of cosines along the ray)
  for (const SpaceSpec& sp : {kHyp2, kSph2}) {
    // spherical radius below pi/2 so every ray reaches the boundary
    const double R = sp.sign == CurvatureSign::positive ? 1.2 : 5.0;
    for (double a : {0.3, 0.6, 1.0})
      for (double th : {0.0, 0.4, kPi / 2, 2.2, kPi}) {
        const double e = exit_length(sp, R, a, th);
        CHECK(e >= -1e-12);
        CHECK(e <= R + a + 1e-9);
        double end;
        if (sp.sign == CurvatureSign::negative)
          end = std::acosh(std::cosh(a) * std::cosh(e) + std::sinh(a) * std::sinh(e) * std::cos(th));
        else
          end = std::acos(std::clamp(std::cos(a) * std::cos(e) - std::sin(a) * std::sin(e) * std::cos(th), -1.0, 1.0));
        CHECK(end == doctest::Approx(R).epsilon(1e-9));
      }
  }
}

TEST_CASE("spherical rays that never exit are capped at the antipode") {
  // R > pi/2: the great circle through a = 2.0 at theta = pi/2 stays inside
  const double e = exit_length(kSph2, 2.8, 2.0, kPi / 2);
  CHECK(e == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("hyperbolic full chord matches the half-chord closed form") {
  const double R = 3.0;
  for (double a : {0.2, 1.0, 2.0})
    for (double th : {0.3, 0.7, kPi / 2, 1.9}) {
      const double c = full_chord(kHyp2, R, a, th);
      const double expect =
          2.0 * std::acosh(std::cosh(R) / std::sqrt(1.0 + std::sinh(a) * std::sinh(a) *
                                                              std::sin(th) * std::sin(th)));
      CHECK(c == doctest::Approx(expect).epsilon(1e-11));
    }
}

TEST_CASE("full chords shrink as the point moves outward") {
  // monotonicity is the hyperbolic corollary; it also holds in the flat case
  for (const SpaceSpec& sp : {kHyp2, kEuc2}) {
    const double R = 4.0;
    for (double th : {0.4, kPi / 2}) {
      double prev = full_chord(sp, R, 0.0, th);
      CHECK(prev == doctest::Approx(2.0 * R).epsilon(1e-10));
      for (double a : {0.5, 1.0, 1.5, 2.0}) {
        const double c = full_chord(sp, R, a, th);
        CHECK(c <= prev + 1e-10);
        prev = c;
      }
    }
  }
  CHECK(full_chord(kSph2, 1.2, 0.0, 0.8) == doctest::Approx(2.4).epsilon(1e-10));
}

TEST_CASE("hyperbolic density closed form at the center") {
  // n=2, k=1: mu(0) = 2 pi (sinh 2R - 2 sinh R) / vol(B_R)^2
  for (double R : {2.0, 3.0, 5.0}) {
    const double vol = 2.0 * kPi * (std::cosh(R) - 1.0);
    const double expect = 2.0 * kPi * (std::sinh(2.0 * R) - 2.0 * std::sinh(R)) / (vol * vol);
    CHECK(mu_density(kHyp2, R, 0.0).value == doctest::Approx(expect).epsilon(1e-7));
  }
  // R -> infinity limit is 1/pi
  CHECK(mu_density(kHyp2, 12.0, 0.0).value == doctest::Approx(1.0 / kPi).epsilon(1e-4));
}

TEST_CASE("euclidean density closed form at the center") {
  for (double R : {1.0, 2.0, 7.0})
    CHECK(mu_density(kEuc2, R, 0.0).value == doctest::Approx(2.0 / (kPi * R)).epsilon(1e-8));
}

TEST_CASE("density decreases from the center outward") {
  for (const SpaceSpec& sp : {kHyp2, kEuc2, kSph2}) {
    const double R = sp.sign == CurvatureSign::positive ? 2.5 : 3.0;
    double prev = mu_density(sp, R, 0.0).value;
    for (double frac : {0.25, 0.5, 0.75, 0.95}) {
      const double cur = mu_density(sp, R, frac * R).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("full-sphere density is position independent") {
  const SpaceSpec sph3{3, CurvatureSign::positive, 1.0};
  const double at0 = mu_density_full_sphere(sph3, 0.0).value;
  CHECK(at0 > 0.0);
  for (double a : {0.5, 1.0, 2.0, 3.0})
    CHECK(mu_density_full_sphere(sph3, a).value == doctest::Approx(at0).epsilon(1e-12));
  CHECK_THROWS_AS(mu_density_full_sphere(kEuc2, 0.5), ValidationError);
}

TEST_CASE("lambda of the whole euclidean disk is the mean chord length") {
  // mean distance between two uniform points in the unit disk: 128/(45 pi)
  const DensityValue lam = lambda_ball(kEuc2, 1.0, {0.0, 1.0});
  CHECK(lam.value == doctest::Approx(128.0 / (45.0 * kPi)).epsilon(1e-7));
}

TEST_CASE("lambda scales linearly under rescaling of the euclidean picture") {
  const double l1 = lambda_ball(kEuc2, 4.0, {0.0, 1.0}).value;
  const double l2 = lambda_ball(kEuc2, 8.0, {0.0, 2.0}).value;
  CHECK(l2 == doctest::Approx(2.0 * l1).epsilon(1e-6));
}

TEST_CASE("off-center lambda decreases with the offset") {
  for (const SpaceSpec& sp : {kHyp2, kEuc2}) {
    double prev = lambda_ball(sp, 6.0, {0.0, 0.5}).value;
    for (double rho : {1.0, 2.0, 3.5, 5.0}) {
      const double cur = lambda_ball(sp, 6.0, {rho, 0.5}).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("off-center lambda is continuous at rho = 0") {
  for (const SpaceSpec& sp : {kHyp2, kEuc2}) {
    const double centered = lambda_ball(sp, 5.0, {0.0, 1.0}).value;
    const double nudged = lambda_ball(sp, 5.0, {1e-4, 1.0}).value;
    CHECK(nudged == doctest::Approx(centered).epsilon(1e-4));
  }
}

TEST_CASE("ball configuration validation") {
  CHECK_THROWS_AS(lambda_ball(kEuc2, 2.0, {0.0, 3.0}), BallNotContained);
  CHECK_THROWS_AS(lambda_ball(kEuc2, 2.0, {1.5, 1.0}), BallNotContained);
  CHECK_THROWS_AS(lambda_ball(kEuc2, 2.0, {0.0, -1.0}), ValidationError);
  CHECK_THROWS_AS(lambda_ball(kEuc3, 2.0, {0.5, 0.5}), UnsupportedDimension);
}

TEST_CASE("monte carlo agrees with quadrature in all three classes") {
  struct Case {
    SpaceSpec sp;
    double R;
    BallConfig ball;
  };
  const Case cases[] = {
      {kHyp2, 4.0, {0.0, 1.0}},
      {kHyp2, 4.0, {2.0, 0.7}},
      {kEuc2, 3.0, {1.0, 1.0}},
      {SpaceSpec{2, CurvatureSign::positive, 0.5}, 3.0, {0.8, 0.9}},
  };
  for (const Case& c : cases) {
    const DensityValue lam = lambda_ball(c.sp, c.R, c.ball, {1e-7, 1 << 16});
    const MCEstimate mc = mc_transit(c.sp, c.R, c.ball, 400000, 12345);
    CHECK(std::abs(mc.mean - lam.value) <= 4.0 * mc.std_error + 1e-6);
    CHECK(mc.transit_fraction > 0.0);
    CHECK(mc.transit_fraction <= 1.0);
  }
}

TEST_CASE("monte carlo is reproducible and validated") {
  const MCEstimate a = mc_transit(kEuc2, 2.0, {0.5, 0.5}, 50000, 9);
  const MCEstimate b = mc_transit(kEuc2, 2.0, {0.5, 0.5}, 50000, 9);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const MCEstimate c = mc_transit(kEuc2, 2.0, {0.5, 0.5}, 50000, 10);
  CHECK(a.mean != c.mean);
  CHECK_THROWS_AS(mc_transit(kEuc2, 2.0, {0.5, 0.5}, 100, 1), BadSampleCount);
  CHECK_THROWS_AS(mc_transit(kEuc3, 2.0, {0.0, 0.5}, 5000, 1), UnsupportedDimension);
}

TEST_CASE("continuum inertia") {
  // p = 0 recovers the ball volume from any basepoint
  for (const SpaceSpec& sp : {kHyp2, kEuc2, kEuc3}) {
    const double vol = ball_volume(sp, 2.0);
    for (double a : {0.0, 0.5, 1.5})
      CHECK(continuum_inertia(sp, 2.0, a, 0.0).value == doctest::Approx(vol).epsilon(1e-8));
  }
  // flat disk, center, p = 2: pi R^4 / 2
  CHECK(continuum_inertia(kEuc2, 2.0, 0.0, 2.0).value == doctest::Approx(8.0 * kPi).epsilon(1e-9));
  // the center minimizes inertia
  for (const SpaceSpec& sp : {kHyp2, kEuc2}) {
    const double at0 = continuum_inertia(sp, 3.0, 0.0, 2.0).value;
    double prev = at0;
    for (double a : {1.0, 2.0, 2.9}) {
      const double cur = continuum_inertia(sp, 3.0, a, 2.0).value;
      CHECK(cur > prev);
      prev = cur;
    }
  }
  CHECK_THROWS_AS(continuum_inertia(kEuc2, 2.0, 0.0, -1.0), ValidationError);
}
