#pragma once

#include <utility>
#include <vector>

#include "congest/geodesics.hpp"

namespace congest {

/// Per-vertex traffic summary under a demand measure. beta is the
/// (fractional) betweenness centrality with endpoints included; vertex_tau
/// is the traffic rate sum over incident edges.
struct TrafficReport {
  int n = 0;
  std::vector<double> edge_tau;
  std::vector<double> beta;
  std::vector<double> vertex_tau;
};

/// tau(e) = sum over ordered pairs s!=t of Lambda_d(s,t) * sigma_st(e)/sigma_st,
/// i.e. fractional edge betweenness under uniform geodesic randomization.
/// threads > 1 uses a fixed-chunk reduction so the result is bit-identical
/// for any thread count.
std::vector<double> edge_traffic(const GeodesicData& gd, const Demand& dem, int threads = 1);

TrafficReport vertex_traffic(const GeodesicData& gd, const Demand& dem, int threads = 1);

/// Lambda_t(X) = sum_{e in X} l(e) tau(e) for an edge-id set X.
double subgraph_load(const GeodesicData& gd, const Demand& dem, const std::vector<int>& edge_ids,
                     int threads = 1);

/// Edges incident to v and their total length.
std::pair<std::vector<int>, double> star(const WeightedGraph& g, int v);

/// max_v beta_c(v) under uniform demand, computed per-source without
/// materializing all-pairs data (used by the scaling experiments).
double max_beta_centrality(const WeightedGraph& g, int threads = 1);

}  // namespace congest
