#pragma once

#include <cstddef>
#include <cstdint>

#include "congest/errors.hpp"
#include "congest/quadrature.hpp"

namespace congest {

enum class CurvatureSign { negative, zero, positive };

/// Simply connected n-dimensional model space of constant curvature
/// -k^2, 0 or +k^2.
struct SpaceSpec {
  int dim = 2;
  CurvatureSign sign = CurvatureSign::negative;
  double k = 1.0;  // curvature scale, ignored when sign == zero

  void validate() const;
};

/// Generalized sine: sinh(kx)/k, x, or sin(kx)/k.
double generalized_sin(const SpaceSpec& space, double x);

/// Surface volume of the unit m-sphere, 2 pi^((m+1)/2) / Gamma((m+1)/2).
double sphere_surface(int m);

/// Volume of a metric ball of radius R.
double ball_volume(const SpaceSpec& space, double R);

/// Distance from a point at radius `a` to the boundary of the ball of
/// radius R along the geodesic ray making angle `theta` with the outward
/// radial direction (so exit(0) = R - a and exit(pi) = R + a).
double exit_length(const SpaceSpec& space, double R, double a, double theta);

/// Length of the full chord through the point at radius `a` whose two rays
/// make angles theta and pi - theta with the outward radial direction.
double full_chord(const SpaceSpec& space, double R, double a, double theta);

struct DensityValue {
  double value = 0.0;
  double abs_err = 0.0;
};

/// Mean geodesic traffic density at radius `a` inside the ball of radius R
/// under the uniform endpoint measure:
///   mu(a) = W(n)/vol^2 * int_0^pi sin^(n-2)(theta) G(theta) dtheta,
///   G(theta) = int int sh(x+y)^(n-1) dx dy over [0,e(theta)] x [0,e(pi-theta)].
DensityValue mu_density(const SpaceSpec& space, double R, double a, const QuadSpec& spec = {});

/// Same density on the complete sphere (positive curvature only): every
/// geodesic ray runs a half great circle, so both exit lengths are pi/k
/// independent of position and direction.
DensityValue mu_density_full_sphere(const SpaceSpec& space, double a, const QuadSpec& spec = {});

/// Small ball centered at distance rho from the origin. rho > 0 is
/// supported in dimension 2 only.
struct BallConfig {
  double rho = 0.0;
  double r = 1.0;
};

/// Expected length of the geodesic between two uniform points that falls
/// inside the given ball: lambda(B) = int_B mu.
DensityValue lambda_ball(const SpaceSpec& space, double R, const BallConfig& ball,
                         const QuadSpec& spec = {});

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double transit_fraction = 0.0;  // pairs whose geodesic meets the ball
  std::size_t samples = 0;
};

/// Monte Carlo estimate of lambda(B) in dimension 2: endpoints are sampled
/// uniformly in the ball of radius R and the geodesic-ball intersection
/// length is computed in closed form. Deterministic for a given seed.
MCEstimate mc_transit(const SpaceSpec& space, double R, const BallConfig& ball,
                      std::size_t samples, std::uint64_t seed = 0);

/// Continuum inertia of the point at radius a:
///   phi^(p)(a) = W(n) int_0^pi sin^(n-2)(theta) int_0^e(theta) t^p sh(t)^(n-1) dt dtheta.
/// p = 0 recovers the ball volume.
DensityValue continuum_inertia(const SpaceSpec& space, double R, double a, double p,
                               const QuadSpec& spec = {});

}  // namespace congest
