#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "congest/errors.hpp"

namespace congest {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

/// Undirected weighted graph with normalized vertex ids 0..N-1.
/// Construction rejects non-positive weights, self-loops and duplicates;
/// edges are stored with u < v and sorted, so the edge list is deterministic
/// for a given input set.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Builds from an arbitrary edge list; vertex ids are remapped to a
  /// contiguous 0..N-1 range preserving numeric order.
  static WeightedGraph from_edges(const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  /// (neighbor, edge id) pairs, sorted by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int v) const;

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// Edge id joining u and v, or -1.
  int edge_between(int u, int v) const;

  /// Original (pre-normalization) id of vertex v; identity when input ids
  /// were already contiguous.
  std::int64_t original_id(int v) const { return original_ids_.empty() ? v : original_ids_[static_cast<std::size_t>(v)]; }

  std::vector<std::string> labels;  // optional, may be empty

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<std::int64_t> original_ids_;
};

/// Demand measure Lambda_d over ordered vertex pairs. Uniform mode means
/// Lambda_d(s,t) = 1 for all s != t and never materializes a matrix.
class Demand {
 public:
  static Demand uniform() { return Demand(); }
  static Demand from_matrix(int n, std::vector<double> entries);

  bool is_uniform() const { return uniform_; }
  int size() const { return n_; }  // 0 in uniform mode

  double operator()(int s, int t) const {
    if (s == t) return 0.0;
    if (uniform_) return 1.0;
    return entries_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(t)];
  }

  /// sum_t Lambda_d(s,t); n is the graph order (needed in uniform mode).
  double out_weight(int s, int n) const;

  /// Throws DemandShapeMismatch unless the matrix (if any) matches n vertices.
  void check_shape(int n) const;

 private:
  Demand() = default;
  bool uniform_ = true;
  int n_ = 0;
  std::vector<double> entries_;
};

}  // namespace congest
