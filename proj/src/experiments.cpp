#include "congest/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace congest {

ScalingFit fit_loglog(const std::vector<ScalingPoint>& points) {
  if (points.size() < 2) throw ValidationError("a scaling fit needs at least two points");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    if (!(p.size > 0.0) || !(p.value > 0.0))
      throw ValidationError("scaling points must have positive size and value");
    xs.push_back(std::log(p.size));
    ys.push_back(std::log(p.value));
    sx += xs.back();
    sy += ys.back();
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("scaling points must span more than one size");
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

std::vector<ScalingPoint> discrete_scaling(const DiscreteSweepSpec& spec) {
  if (spec.sizes.size() < 2) throw ValidationError("a sweep needs at least two sizes");
  std::vector<ScalingPoint> points;
  for (int s : spec.sizes) {
    WeightedGraph g;
    if (spec.family == "ring") {
      g = ring_growth({spec.valence, s}).first;
    } else if (spec.family == "lattice") {
      g = lattice({spec.dim, s});
    } else if (spec.family == "path") {
      if (s < 1) throw ValidationError("path edge count must be >= 1");
      std::vector<Edge> edges;
      for (int i = 0; i < s; ++i) edges.push_back({i, i + 1, 1.0});
      g = WeightedGraph::from_edges(edges);
    } else {
      throw ValidationError("unknown sweep family: " + spec.family);
    }
    if (static_cast<std::size_t>(g.vertex_count()) > spec.vertex_budget)
      throw BudgetExceeded("instance of " + std::to_string(g.vertex_count()) +
                           " vertices exceeds the sweep budget of " +
                           std::to_string(spec.vertex_budget));
    points.push_back({static_cast<double>(g.vertex_count()), max_beta_centrality(g, spec.threads)});
  }
  return points;
}

std::vector<ScalingPoint> continuum_scaling(const ContinuumSweepSpec& spec) {
  if (spec.radii.size() < 2) throw ValidationError("a sweep needs at least two radii");
  std::vector<ScalingPoint> points;
  for (double R : spec.radii) {
    const DensityValue lam = lambda_ball(spec.space, R, {0.0, spec.ball_radius}, spec.quad);
    points.push_back({R, lam.value});
  }
  return points;
}

GraphAnalysis analyze_graph(const WeightedGraph& g, const PlanarEmbedding* emb, int threads,
                            const TripleSampleSpec& triples) {
  GeodesicData gd(g, threads);
  const Demand dem = Demand::uniform();
  const TrafficReport traffic = vertex_traffic(gd, dem, threads);
  const InertiaReport inertia = graph_inertia(gd, 2.0);
  const CongestionInertiaReport rep = congestion_inertia_report(traffic, inertia, gd);

  GraphAnalysis out;
  out.n = g.vertex_count();
  out.max_vertex_tau = *std::max_element(traffic.vertex_tau.begin(), traffic.vertex_tau.end());
  out.spikiness = rep.spikiness;
  out.spearman = rep.spearman;
  out.set_distance = rep.set_distance;
  out.delta = gromov_delta(gd, triples).delta;
  if (emb != nullptr && emb->has(0)) {
    out.kappa_center = vertex_curvature(g, *emb, 0).kappa;
    out.has_curvature = true;
  }
  return out;
}

std::vector<ValenceComparison> valence_sweep(int threads) {
  // layer counts picked so the three vertex counts land near each other
  // (169, 232 and 161 vertices).
  const std::vector<std::pair<int, int>> picks = {{6, 7}, {7, 4}, {8, 3}};
  std::vector<ValenceComparison> out;
  for (const auto& [d, layers] : picks) {
    auto [g, emb] = ring_growth({d, layers});
    ValenceComparison vc;
    vc.valence = d;
    vc.layers = layers;
    vc.analysis = analyze_graph(g, &emb, threads);
    out.push_back(std::move(vc));
  }
  return out;
}

}  // namespace congest
