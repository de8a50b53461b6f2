#include "congest/quadrature.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace congest {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
constexpr double kNode[8] = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601700,
    0.8482065834104272,
    0.9372733924007059,
    0.9879925180204854,
};
constexpr double kWeight[8] = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = kWeight[0] * f(c);
  for (int i = 1; i < 8; ++i)
    sum += kWeight[i] * (f(c - h * kNode[i]) + f(c + h * kNode[i]));
  return sum * h;
}

struct Panel {
  double a, b, estimate;
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec) {
  QuadResult res;
  if (a == b) return res;

  std::vector<Panel> stack;
  stack.push_back({a, b, gl15(f, a, b)});
  res.evals += 15;

  double total = stack.back().estimate;  // running whole-interval estimate
  std::size_t panels = 1;

  while (!stack.empty()) {
    if (panels > spec.max_panels)
      throw QuadratureNotConverged("adaptive quadrature exceeded the panel budget");
    const Panel p = stack.back();
    stack.pop_back();

    const double mid = 0.5 * (p.a + p.b);
    const double left = gl15(f, p.a, mid);
    const double right = gl15(f, mid, p.b);
    res.evals += 30;
    const double refined = left + right;
    const double err = std::abs(refined - p.estimate);
    const double scale = std::max(std::abs(total), std::abs(refined));

    if (err <= spec.rel_tol * std::max(scale, 1e-300) || (p.b - p.a) < 1e-14 * std::abs(b - a)) {
      res.value += refined;
      res.abs_err += err;
    } else {
      total += refined - p.estimate;
      stack.push_back({p.a, mid, left});
      stack.push_back({mid, p.b, right});
      panels += 2;
    }
  }
  return res;
}

}  // namespace congest
