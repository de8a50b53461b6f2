#pragma once

#include <cstddef>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

/// Single-source shortest-path data: distances, real-valued geodesic counts
/// sigma, the predecessor DAG in CSR form, and the settle order
/// (non-decreasing distance, ties by vertex id).
struct ShortestPathTree {
  std::vector<double> dist;
  std::vector<double> sigma;
  std::vector<int> pred_offset;  // size n+1
  std::vector<int> preds;        // concatenated predecessor lists, sorted
  std::vector<int> order;        // settle order, order[0] == source
};

/// Dijkstra with geodesic counting. Distance ties are detected with a
/// 1e-12 relative tolerance; predecessor lists are sorted by vertex id so
/// the DAG is deterministic.
ShortestPathTree single_source(const WeightedGraph& g, int s);

/// All-pairs geodesic data for a connected graph.
class GeodesicData {
 public:
  explicit GeodesicData(WeightedGraph g, int threads = 1);

  const WeightedGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }

  const ShortestPathTree& tree(int s) const { return trees_[static_cast<std::size_t>(s)]; }
  double dist(int u, int v) const { return trees_[static_cast<std::size_t>(u)].dist[static_cast<std::size_t>(v)]; }
  double sigma(int u, int v) const {
    return u == v ? 1.0 : trees_[static_cast<std::size_t>(u)].sigma[static_cast<std::size_t>(v)];
  }

 private:
  WeightedGraph graph_;
  std::vector<ShortestPathTree> trees_;
};

/// All geodesics s -> t as vertex sequences, reconstructed from the
/// predecessor DAG. Throws PathLimitExceeded past `limit` paths.
std::vector<std::vector<int>> enumerate_geodesics(const GeodesicData& gd, int s, int t,
                                                  std::size_t limit = 1000000);

/// The lexicographically minimal geodesic s -> t (greedy smallest-id step).
std::vector<int> lexmin_geodesic(const GeodesicData& gd, int s, int t);

}  // namespace congest
