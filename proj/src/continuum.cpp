#include "congest/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "congest/rng.hpp"

namespace congest {

namespace {

constexpr double kPi = std::numbers::pi;

// Cosine counterpart of generalized_sin (cosh(kx), 1, cos(kx)).
double generalized_cos(const SpaceSpec& sp, double x) {
  switch (sp.sign) {
    case CurvatureSign::negative: return std::cosh(sp.k * x);
    case CurvatureSign::zero: return 1.0;
    case CurvatureSign::positive: return std::cos(sp.k * x);
  }
  return 1.0;
}

void check_radius(const SpaceSpec& sp, double R, bool allow_full = false) {
  if (!(R > 0.0)) throw RadiusOutOfRange("ball radius must be positive");
  if (sp.sign == CurvatureSign::positive) {
    const double limit = kPi / sp.k;
    if (allow_full ? R > limit * (1.0 + 1e-12) : R >= limit)
      throw RadiusOutOfRange("spherical ball radius must satisfy k*R < pi");
  }
}

void check_point(double R, double a) {
  if (!(a >= 0.0) || a > R * (1.0 + 1e-12))
    throw PointOutsideBall("point radius must lie in [0, R]");
}

QuadSpec child(const QuadSpec& spec) {
  QuadSpec c = spec;
  c.rel_tol = std::max(spec.rel_tol * 0.1, 1e-12);
  return c;
}

// G(e1, e2) = int_0^{e1+e2} w(u) gs(u)^(n-1) du with the overlap weight
// w(u) = min(u, e1, e2, e1+e2-u), split at its kinks.
double chord_kernel(const SpaceSpec& sp, double e1, double e2, const QuadSpec& spec,
                    double& err) {
  const int m = sp.dim - 1;
  const double lo = std::min(e1, e2), hi = std::max(e1, e2), top = e1 + e2;
  auto gsm = [&](double u) { return std::pow(generalized_sin(sp, u), m); };
  double total = 0.0;
  if (lo > 0.0) {
    auto r1 = integrate([&](double u) { return u * gsm(u); }, 0.0, lo, spec);
    auto r3 = integrate([&](double u) { return (top - u) * gsm(u); }, hi, top, spec);
    total += r1.value + r3.value;
    err += r1.abs_err + r3.abs_err;
  }
  if (hi > lo) {
    auto r2 = integrate([&](double u) { return lo * gsm(u); }, lo, hi, spec);
    total += r2.value;
    err += r2.abs_err;
  }
  return total;
}

// Half-angle of the circle of radius `a` about the origin cut by the ball
// of radius r centered at distance rho (dimension 2).
double cap_angle(const SpaceSpec& sp, double rho, double a, double r) {
  if (a <= 1e-14) return rho < r ? kPi : 0.0;
  double c;
  switch (sp.sign) {
    case CurvatureSign::negative:
      c = (std::cosh(sp.k * rho) * std::cosh(sp.k * a) - std::cosh(sp.k * r)) /
          (std::sinh(sp.k * rho) * std::sinh(sp.k * a));
      break;
    case CurvatureSign::zero:
      c = (rho * rho + a * a - r * r) / (2.0 * rho * a);
      break;
    case CurvatureSign::positive:
      c = (std::cos(sp.k * r) - std::cos(sp.k * rho) * std::cos(sp.k * a)) /
          (std::sin(sp.k * rho) * std::sin(sp.k * a));
      break;
    default: c = 1.0;
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

void check_ball(const SpaceSpec& sp, double R, const BallConfig& ball) {
  if (!(ball.r > 0.0)) throw ValidationError("ball radius r must be positive");
  if (!(ball.rho >= 0.0)) throw ValidationError("ball offset rho must be non-negative");
  if (ball.rho + ball.r > R * (1.0 + 1e-12))
    throw BallNotContained("offset ball must lie inside the ambient ball");
  if (ball.rho > 0.0 && sp.dim != 2)
    throw UnsupportedDimension("off-center balls are supported in dimension 2 only");
}

}  // namespace

void SpaceSpec::validate() const {
  if (dim < 2) throw UnsupportedDimension("space dimension must be at least 2");
  if (sign != CurvatureSign::zero && !(k > 0.0))
    throw ValidationError("curvature scale k must be positive");
}

double generalized_sin(const SpaceSpec& space, double x) {
  switch (space.sign) {
    case CurvatureSign::negative: return std::sinh(space.k * x) / space.k;
    case CurvatureSign::zero: return x;
    case CurvatureSign::positive: return std::sin(space.k * x) / space.k;
  }
  return x;
}

double sphere_surface(int m) {
  if (m < 0) throw UnsupportedDimension("sphere dimension must be non-negative");
  return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

double ball_volume(const SpaceSpec& space, double R) {
  space.validate();
  check_radius(space, R, /*allow_full=*/true);
  const int n = space.dim;

  // J_m = int_0^R generalized_sin(x)^m dx by the standard reduction.
  std::vector<double> J(static_cast<std::size_t>(n), 0.0);
  if (space.sign == CurvatureSign::zero) {
    for (int m = 0; m < n; ++m) J[static_cast<std::size_t>(m)] = std::pow(R, m + 1) / (m + 1);
  } else {
    const double eps = space.sign == CurvatureSign::negative ? 1.0 : -1.0;
    const double k2 = space.k * space.k;
    const double s = generalized_sin(space, R);
    const double c = generalized_cos(space, R);
    J[0] = R;
    for (int m = 1; m < n; ++m) {
      const double boundary = (m == 1) ? c - 1.0 : std::pow(s, m - 1) * c;
      double v = boundary / (m * eps * k2);
      if (m >= 2) v -= (m - 1) * J[static_cast<std::size_t>(m - 2)] / (m * eps * k2);
      J[static_cast<std::size_t>(m)] = v;
    }
  }
  return sphere_surface(n - 1) * J[static_cast<std::size_t>(n - 1)];
}

double exit_length(const SpaceSpec& space, double R, double a, double theta) {
  space.validate();
  check_radius(space, R, /*allow_full=*/true);
  check_point(R, a);
  if (!(theta >= -1e-12) || theta > kPi * (1.0 + 1e-12))
    throw ValidationError("direction angle must lie in [0, pi]");
  theta = std::clamp(theta, 0.0, kPi);
  a = std::min(a, R);

  const double k = space.k;
  switch (space.sign) {
    case CurvatureSign::zero: {
      const double s = a * std::sin(theta);
      return -a * std::cos(theta) + std::sqrt(std::max(R * R - s * s, 0.0));
    }
    case CurvatureSign::negative: {
      const double A = std::cosh(k * a);
      const double B = std::sinh(k * a) * std::cos(theta);
      const double C = std::cosh(k * R);
      const double D = std::sqrt(std::max(A * A - B * B, 1.0));
      const double e = std::acosh(std::max(C / D, 1.0)) - std::atanh(B / A);
      return std::max(e, 0.0) / k;
    }
    case CurvatureSign::positive: {
      // smallest positive root of A cos(k e) - B sin(k e) = C
      const double A = std::cos(k * a);
      const double B = std::sin(k * a) * std::cos(theta);
      const double C = std::cos(k * R);
      const double rho = std::hypot(A, B);
      // distance along the ray oscillates within [acos(rho), pi - acos(rho)];
      // if the ball boundary is beyond that reach the ray never exits, and
      // the geodesic stops minimizing at the antipode
      if (C < -rho) return kPi / k;
      const double phi = std::atan2(B, A);
      const double base = std::acos(std::clamp(C / rho, -1.0, 1.0));
      double best = std::numeric_limits<double>::infinity();
      for (int m = -1; m <= 1; ++m)
        for (double sgn : {-1.0, 1.0}) {
          const double x = sgn * base - phi + 2.0 * kPi * m;
          if (x >= -1e-12 && x < best) best = std::max(x, 0.0);
        }
      return best / k;
    }
  }
  return 0.0;
}

double full_chord(const SpaceSpec& space, double R, double a, double theta) {
  return exit_length(space, R, a, theta) + exit_length(space, R, a, kPi - theta);
}

namespace {

DensityValue density_from_exits(const SpaceSpec& sp, double vol,
                                const std::function<std::pair<double, double>(double)>& exits,
                                const QuadSpec& spec) {
  const int n = sp.dim;
  const QuadSpec inner = child(spec);
  double inner_err = 0.0;
  auto integrand = [&](double theta) {
    const auto [e1, e2] = exits(theta);
    const double g = chord_kernel(sp, e1, e2, child(inner), inner_err);
    return n == 2 ? g : std::pow(std::sin(theta), n - 2) * g;
  };
  const QuadResult outer = integrate(integrand, 0.0, kPi, spec);
  const double w = sphere_surface(n - 2);
  DensityValue dv;
  dv.value = w * outer.value / (vol * vol);
  dv.abs_err = w * (outer.abs_err + inner_err) / (vol * vol);
  return dv;
}

}  // namespace

DensityValue mu_density(const SpaceSpec& space, double R, double a, const QuadSpec& spec) {
  space.validate();
  check_radius(space, R);
  check_point(R, a);
  const double vol = ball_volume(space, R);
  return density_from_exits(
      space, vol,
      [&](double theta) {
        return std::make_pair(exit_length(space, R, a, theta),
                              exit_length(space, R, a, kPi - theta));
      },
      spec);
}

DensityValue mu_density_full_sphere(const SpaceSpec& space, double a, const QuadSpec& spec) {
  space.validate();
  if (space.sign != CurvatureSign::positive)
    throw ValidationError("the full-sphere density requires positive curvature");
  const double half = kPi / space.k;
  check_point(half, a);
  const double vol = ball_volume(space, half);
  return density_from_exits(
      space, vol, [&](double) { return std::make_pair(half, half); }, spec);
}

DensityValue lambda_ball(const SpaceSpec& space, double R, const BallConfig& ball,
                         const QuadSpec& spec) {
  space.validate();
  check_radius(space, R);
  check_ball(space, R, ball);
  const int n = space.dim;
  const QuadSpec mu_spec = child(spec);
  double mu_err = 0.0;

  DensityValue dv;
  if (ball.rho == 0.0) {
    const double shell = sphere_surface(n - 1);
    auto integrand = [&](double a) {
      const DensityValue mu = mu_density(space, R, a, mu_spec);
      mu_err += mu.abs_err;
      return mu.value * shell * std::pow(generalized_sin(space, a), n - 1);
    };
    const QuadResult res = integrate(integrand, 0.0, ball.r, spec);
    dv.value = res.value;
    dv.abs_err = res.abs_err;
  } else {
    const double lo = std::max(0.0, ball.rho - ball.r);
    const double hi = ball.rho + ball.r;
    auto integrand = [&](double a) {
      const DensityValue mu = mu_density(space, R, a, mu_spec);
      mu_err += mu.abs_err;
      const double delta = cap_angle(space, ball.rho, a, ball.r);
      return mu.value * 2.0 * delta * generalized_sin(space, a);
    };
    const QuadResult res = integrate(integrand, lo, hi, spec);
    dv.value = res.value;
    dv.abs_err = res.abs_err;
  }
  dv.abs_err += mu_err;
  return dv;
}

namespace {

struct Vec3 {
  double x0, x1, x2;
};

double mink(const Vec3& a, const Vec3& b) { return a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2; }
double dot3(const Vec3& a, const Vec3& b) { return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2; }

double overlap(double lo1, double hi1, double lo2, double hi2) {
  return std::max(0.0, std::min(hi1, hi2) - std::max(lo1, lo2));
}

// Length of the geodesic segment between polar points (a1,p1), (a2,p2)
// falling inside the ball of radius r centered at polar (rho, 0).
double segment_in_ball(const SpaceSpec& sp, double a1, double p1, double a2, double p2,
                       double rho, double r) {
  const double k = sp.k;
  switch (sp.sign) {
    case CurvatureSign::zero: {
      const double x1 = a1 * std::cos(p1), y1 = a1 * std::sin(p1);
      const double x2 = a2 * std::cos(p2), y2 = a2 * std::sin(p2);
      const double dx = x2 - x1, dy = y2 - y1;
      const double len2 = dx * dx + dy * dy;
      if (len2 <= 0.0) return 0.0;
      const double fx = x1 - rho, fy = y1;
      const double bq = fx * dx + fy * dy;
      const double cq = fx * fx + fy * fy - r * r;
      const double disc = bq * bq - len2 * cq;
      if (disc <= 0.0) return 0.0;
      const double sq = std::sqrt(disc);
      const double t1 = (-bq - sq) / len2, t2 = (-bq + sq) / len2;
      return overlap(t1, t2, 0.0, 1.0) * std::sqrt(len2);
    }
    case CurvatureSign::negative: {
      const Vec3 X1{std::cosh(k * a1), std::sinh(k * a1) * std::cos(p1), std::sinh(k * a1) * std::sin(p1)};
      const Vec3 X2{std::cosh(k * a2), std::sinh(k * a2) * std::cos(p2), std::sinh(k * a2) * std::sin(p2)};
      const Vec3 C{std::cosh(k * rho), std::sinh(k * rho), 0.0};
      const double ip = mink(X1, X2);
      if (ip <= 1.0 + 1e-15) return 0.0;
      const double U = std::acosh(ip);
      const double norm = std::sqrt(ip * ip - 1.0);
      const Vec3 V{(X2.x0 - ip * X1.x0) / norm, (X2.x1 - ip * X1.x1) / norm,
                   (X2.x2 - ip * X1.x2) / norm};
      const double A = mink(X1, C), B = mink(V, C);
      const double D = std::sqrt(std::max(A * A - B * B, 1.0));
      const double T = std::cosh(k * r);
      if (D > T) return 0.0;
      const double u0 = std::atanh(std::clamp(-B / A, -1.0 + 1e-15, 1.0 - 1e-15));
      const double w = std::acosh(std::max(T / D, 1.0));
      return overlap(u0 - w, u0 + w, 0.0, U) / k;
    }
    case CurvatureSign::positive: {
      const Vec3 X1{std::cos(k * a1), std::sin(k * a1) * std::cos(p1), std::sin(k * a1) * std::sin(p1)};
      const Vec3 X2{std::cos(k * a2), std::sin(k * a2) * std::cos(p2), std::sin(k * a2) * std::sin(p2)};
      const Vec3 C{std::cos(k * rho), std::sin(k * rho), 0.0};
      const double ip = std::clamp(dot3(X1, X2), -1.0, 1.0);
      const double U = std::acos(ip);
      if (U <= 1e-15) return 0.0;
      const double norm = std::sin(U);
      const Vec3 V{(X2.x0 - ip * X1.x0) / norm, (X2.x1 - ip * X1.x1) / norm,
                   (X2.x2 - ip * X1.x2) / norm};
      const double A = dot3(X1, C), B = dot3(V, C);
      const double amp = std::hypot(A, B);
      const double T = std::cos(k * r);
      if (amp < 1e-300) return T <= 0.0 ? U / k : 0.0;
      if (T > amp) return 0.0;
      if (T <= -amp) return U / k;
      const double psi = std::atan2(B, A);
      const double w = std::acos(std::clamp(T / amp, -1.0, 1.0));
      double total = 0.0;
      for (int m = -1; m <= 1; ++m)
        total += overlap(psi - w + 2.0 * kPi * m, psi + w + 2.0 * kPi * m, 0.0, U);
      return total / k;
    }
  }
  return 0.0;
}

double radius_from_uniform(const SpaceSpec& sp, double R, double u) {
  switch (sp.sign) {
    case CurvatureSign::negative:
      return std::acosh(1.0 + u * (std::cosh(sp.k * R) - 1.0)) / sp.k;
    case CurvatureSign::zero:
      return R * std::sqrt(u);
    case CurvatureSign::positive:
      return std::acos(std::clamp(1.0 - u * (1.0 - std::cos(sp.k * R)), -1.0, 1.0)) / sp.k;
  }
  return R * std::sqrt(u);
}

}  // namespace

MCEstimate mc_transit(const SpaceSpec& space, double R, const BallConfig& ball,
                      std::size_t samples, std::uint64_t seed) {
  space.validate();
  if (space.dim != 2) throw UnsupportedDimension("Monte Carlo transit is implemented for dimension 2");
  check_radius(space, R);
  check_ball(space, R, ball);
  if (samples < 1000) throw BadSampleCount("at least 1000 sample pairs are required");

  const CounterRng rng{seed};
  double sum = 0.0, sum_sq = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t c = 4 * static_cast<std::uint64_t>(i);
    const double a1 = radius_from_uniform(space, R, rng.uniform(c));
    const double p1 = 2.0 * kPi * rng.uniform(c + 1);
    const double a2 = radius_from_uniform(space, R, rng.uniform(c + 2));
    const double p2 = 2.0 * kPi * rng.uniform(c + 3);
    const double len = segment_in_ball(space, a1, p1, a2, p2, ball.rho, ball.r);
    sum += len;
    sum_sq += len * len;
    if (len > 0.0) ++hits;
  }
  MCEstimate est;
  est.samples = samples;
  const double n = static_cast<double>(samples);
  est.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
  est.std_error = std::sqrt(var / n);
  est.transit_fraction = static_cast<double>(hits) / n;
  return est;
}

DensityValue continuum_inertia(const SpaceSpec& space, double R, double a, double p,
                               const QuadSpec& spec) {
  space.validate();
  check_radius(space, R);
  check_point(R, a);
  if (!(p >= 0.0)) throw ValidationError("inertia exponent p must be non-negative");
  const int n = space.dim;
  const QuadSpec inner = child(spec);
  double inner_err = 0.0;
  auto integrand = [&](double theta) {
    const double e = exit_length(space, R, a, theta);
    const QuadResult radial = integrate(
        [&](double t) { return std::pow(t, p) * std::pow(generalized_sin(space, t), n - 1); },
        0.0, e, inner);
    inner_err += radial.abs_err;
    return n == 2 ? radial.value : std::pow(std::sin(theta), n - 2) * radial.value;
  };
  const QuadResult outer = integrate(integrand, 0.0, kPi, spec);
  const double w = sphere_surface(n - 2);
  DensityValue dv;
  dv.value = w * outer.value;
  dv.abs_err = w * (outer.abs_err + inner_err);
  return dv;
}

}  // namespace congest
