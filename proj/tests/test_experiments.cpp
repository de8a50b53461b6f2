#include <cmath>
#include <sstream>

#include "congest/experiments.hpp"
#include "congest/io.hpp"
#include "doctest.h"

using namespace congest;

TEST_CASE("log-log fit recovers exact power laws") {
  std::vector<ScalingPoint> pts;
  for (double n : {10.0, 20.0, 40.0, 80.0}) pts.push_back({n, 3.0 * std::pow(n, 1.5)});
  const ScalingFit fit = fit_loglog(pts);
  CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit slope is invariant under axis rescaling") {
  std::vector<ScalingPoint> a, b;
  for (double n : {3.0, 9.0, 27.0}) {
    a.push_back({n, std::pow(n, 2.0) * 0.7});
    b.push_back({10.0 * n, 5.0 * std::pow(n, 2.0) * 0.7});
  }
  CHECK(fit_loglog(a).slope == doctest::Approx(fit_loglog(b).slope).epsilon(1e-12));
}

TEST_CASE("fit validation") {
  CHECK_THROWS_AS(fit_loglog({{1.0, 1.0}}), ValidationError);
  CHECK_THROWS_AS(fit_loglog({{1.0, 1.0}, {2.0, -1.0}}), ValidationError);
  CHECK_THROWS_AS(fit_loglog({{2.0, 1.0}, {2.0, 3.0}}), ValidationError);
}

TEST_CASE("path sweep has exact peak betweenness") {
  // on a path of N vertices the peak is at the middle:
  // beta = 2((i+1)(N-i) - 1) maximized over i
  DiscreteSweepSpec spec;
  spec.family = "path";
  spec.sizes = {4, 9};
  const auto pts = discrete_scaling(spec);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].size == 5.0);
  CHECK(pts[0].value == doctest::Approx(2.0 * (3.0 * 3.0 - 1.0)));
  CHECK(pts[1].size == 10.0);
  CHECK(pts[1].value == doctest::Approx(2.0 * (5.0 * 6.0 - 1.0)));
}

TEST_CASE("sweep families scale as expected") {
  DiscreteSweepSpec lat;
  lat.family = "lattice";
  lat.sizes = {8, 12, 16, 24};
  lat.threads = 4;
  const double lat_slope = fit_loglog(discrete_scaling(lat)).slope;
  CHECK(lat_slope > 1.35);
  CHECK(lat_slope < 1.65);

  DiscreteSweepSpec ring;
  ring.family = "ring";
  ring.valence = 7;
  ring.sizes = {2, 3, 4, 5};
  ring.threads = 4;
  const double ring_slope = fit_loglog(discrete_scaling(ring)).slope;
  CHECK(ring_slope > 1.6);
  CHECK(ring_slope < 2.4);
}

TEST_CASE("sweep budget and validation") {
  DiscreteSweepSpec spec;
  spec.family = "lattice";
  spec.sizes = {8, 200};
  CHECK_THROWS_AS(discrete_scaling(spec), BudgetExceeded);
  spec.family = "nope";
  spec.sizes = {2, 3};
  CHECK_THROWS_AS(discrete_scaling(spec), ValidationError);
  spec.family = "ring";
  spec.sizes = {3};
  CHECK_THROWS_AS(discrete_scaling(spec), ValidationError);
}

TEST_CASE("continuum sweep reproduces the euclidean decay") {
  ContinuumSweepSpec spec;
  spec.space = {2, CurvatureSign::zero, 0.0};
  spec.radii = {10.0, 20.0, 40.0};
  spec.ball_radius = 1.0;
  spec.quad = {1e-6, 1 << 16};
  const ScalingFit fit = fit_loglog(continuum_scaling(spec));
  CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("graph analysis of a ring instance") {
  auto [g, emb] = ring_growth({7, 3});
  const GraphAnalysis a = analyze_graph(g, &emb, 4);
  CHECK(a.n == 85);
  CHECK(a.has_curvature);
  CHECK(a.kappa_center == doctest::Approx(-0.3454855931874709));
  CHECK(a.spikiness > 1.0);
  CHECK(a.max_vertex_tau > 0.0);
  CHECK(a.set_distance <= 2.0);  // busiest vertices sit at or next to the centroid
  const GraphAnalysis plain = analyze_graph(g, nullptr, 2);
  CHECK_FALSE(plain.has_curvature);
  CHECK(plain.max_vertex_tau == a.max_vertex_tau);
}

TEST_CASE("sweep output is byte identical across runs") {
  DiscreteSweepSpec spec;
  spec.family = "lattice";
  spec.sizes = {4, 6, 8};
  auto render = [&](int threads) {
    spec.threads = threads;
    std::ostringstream ss;
    write_points_csv(ss, discrete_scaling(spec), "sweep");
    return ss.str();
  };
  const std::string once = render(1);
  CHECK(once == render(1));
  CHECK(once == render(4));
}
