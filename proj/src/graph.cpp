#include "congest/graph.hpp"

#include <algorithm>
#include <map>

namespace congest {

WeightedGraph WeightedGraph::from_edges(const std::vector<Edge>& edges) {
  WeightedGraph g;
  std::map<std::int64_t, int> remap;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0) throw UnknownVertex("negative vertex id");
    remap.emplace(e.u, 0);
    remap.emplace(e.v, 0);
  }
  bool contiguous = true;
  {
    int next = 0;
    for (auto& [orig, id] : remap) {
      id = next++;
      if (orig != id) contiguous = false;
    }
  }
  g.n_ = static_cast<int>(remap.size());
  if (!contiguous) {
    g.original_ids_.resize(remap.size());
    for (const auto& [orig, id] : remap) g.original_ids_[static_cast<std::size_t>(id)] = orig;
  }

  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    int u = remap.at(e.u), v = remap.at(e.v);
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0)) throw NonPositiveWeight("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has non-positive weight");
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v, e.w});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v)
      throw DuplicateEdge("duplicate edge (" + std::to_string(g.edges_[i].u) + "," + std::to_string(g.edges_[i].v) + ")");
  }

  g.adj_.assign(static_cast<std::size_t>(g.n_), {});
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges_[static_cast<std::size_t>(id)];
    g.adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
    g.adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw UnknownVertex("vertex " + std::to_string(v) + " out of range");
}

const std::vector<std::pair<int, int>>& WeightedGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int WeightedGraph::edge_between(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  for (const auto& [nbr, id] : adj_[static_cast<std::size_t>(u)])
    if (nbr == v) return id;
  return -1;
}

Demand Demand::from_matrix(int n, std::vector<double> entries) {
  if (n <= 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DemandShapeMismatch("demand matrix must be n*n");
  for (int s = 0; s < n; ++s) entries[static_cast<std::size_t>(s) * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] = 0.0;
  for (double x : entries)
    if (x < 0.0) throw DemandShapeMismatch("demand entries must be >= 0");
  Demand d;
  d.uniform_ = false;
  d.n_ = n;
  d.entries_ = std::move(entries);
  return d;
}

double Demand::out_weight(int s, int n) const {
  if (uniform_) return static_cast<double>(n - 1);
  double sum = 0.0;
  for (int t = 0; t < n_; ++t) sum += (*this)(s, t);
  return sum;
}

void Demand::check_shape(int n) const {
  if (!uniform_ && n_ != n)
    throw DemandShapeMismatch("demand matrix is " + std::to_string(n_) + "x" + std::to_string(n_) + " but graph has " + std::to_string(n) + " vertices");
}

}  // namespace congest
