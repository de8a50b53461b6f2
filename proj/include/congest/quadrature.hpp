#pragma once

#include <cstddef>
#include <functional>

#include "congest/errors.hpp"

namespace congest {

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;    // accumulated error estimate
  std::size_t evals = 0;   // integrand evaluations
};

struct QuadSpec {
  double rel_tol = 1e-8;
  std::size_t max_panels = 1 << 16;  // subdivision cap, then QuadratureNotConverged
};

/// Adaptive 15-point Gauss-Legendre integration of f over [a, b] by interval
/// bisection: a panel is accepted when its estimate agrees with the sum of
/// its halves to the relative tolerance (scaled by the running total).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec = {});

}  // namespace congest
