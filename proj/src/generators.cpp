#include "congest/generators.hpp"

#include <algorithm>

namespace congest {

namespace {

// Growth bookkeeping: neighbor lists split by role so cyclic orders can be
// assembled once construction finishes.
struct Builder {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> below, above;
  std::vector<int> prev, next, degree;

  int add_vertex() {
    below.emplace_back();
    above.emplace_back();
    prev.push_back(-1);
    next.push_back(-1);
    degree.push_back(0);
    return static_cast<int>(degree.size()) - 1;
  }

  void connect(int u, int v) {
    edges.push_back({u, v, 1.0});
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
};

}  // namespace

std::pair<WeightedGraph, PlanarEmbedding> ring_growth(const RingGrowthSpec& spec) {
  const int d = spec.valence;
  if (d < 5 || d > 12) throw InvalidValence("valence must be in 5..12, got " + std::to_string(d));
  if (spec.layers < 1) throw InvalidValence("layers must be >= 1");

  Builder b;
  const int center = b.add_vertex();

  // layer 1: a triangulated wheel
  std::vector<int> boundary;
  for (int i = 0; i < d; ++i) {
    const int v = b.add_vertex();
    b.connect(center, v);
    b.below[static_cast<std::size_t>(v)] = {center};
    b.above[static_cast<std::size_t>(center)].push_back(v);
    boundary.push_back(v);
  }
  for (int i = 0; i < d; ++i) {
    const int v = boundary[static_cast<std::size_t>(i)];
    const int w = boundary[static_cast<std::size_t>((i + 1) % d)];
    b.connect(v, w);
    b.next[static_cast<std::size_t>(v)] = w;
    b.prev[static_cast<std::size_t>(w)] = v;
  }

  for (int layer = 2; layer <= spec.layers; ++layer) {
    const int m = static_cast<int>(boundary.size());
    std::vector<int> deficit(static_cast<std::size_t>(m));
    bool growable = m >= 2;
    for (int i = 0; i < m; ++i) {
      deficit[static_cast<std::size_t>(i)] = d - b.degree[static_cast<std::size_t>(boundary[static_cast<std::size_t>(i)])];
      if (deficit[static_cast<std::size_t>(i)] < 1) growable = false;
    }
    if (!growable) break;  // construction closed up (happens only for d=5)

    std::vector<int> cycle;
    const int s0 = b.add_vertex();
    b.connect(boundary[0], s0);
    b.below[static_cast<std::size_t>(s0)] = {boundary[0]};
    b.above[static_cast<std::size_t>(boundary[0])].push_back(s0);
    cycle.push_back(s0);
    int shared = s0;

    for (int i = 0; i < m; ++i) {
      const int v = boundary[static_cast<std::size_t>(i)];
      const int delta = deficit[static_cast<std::size_t>(i)];
      // v is already connected to `shared`
      int to_create = (i == m - 1) ? std::max(delta - 2, 0) : delta - 1;
      for (int j = 0; j < to_create; ++j) {
        const int u = b.add_vertex();
        b.connect(v, u);
        b.below[static_cast<std::size_t>(u)] = {v};
        b.above[static_cast<std::size_t>(v)].push_back(u);
        b.connect(cycle.back(), u);
        cycle.push_back(u);
        shared = u;
      }
      if (i < m - 1) {
        const int w = boundary[static_cast<std::size_t>(i + 1)];
        b.connect(w, shared);
        b.below[static_cast<std::size_t>(shared)].push_back(w);
        b.above[static_cast<std::size_t>(w)].push_back(shared);
      } else {
        if (delta >= 2) {
          b.connect(v, s0);
          b.above[static_cast<std::size_t>(v)].push_back(s0);
          auto& bl = b.below[static_cast<std::size_t>(s0)];
          bl.insert(bl.begin(), v);
        }
        if (cycle.size() > 1) b.connect(cycle.back(), s0);
      }
    }
    const int mm = static_cast<int>(cycle.size());
    if (mm > 1) {
      for (int j = 0; j < mm; ++j) {
        const int v = cycle[static_cast<std::size_t>(j)];
        b.next[static_cast<std::size_t>(v)] = cycle[static_cast<std::size_t>((j + 1) % mm)];
        b.prev[static_cast<std::size_t>(v)] = cycle[static_cast<std::size_t>((j - 1 + mm) % mm)];
      }
    }
    boundary = std::move(cycle);
  }

  WeightedGraph g = WeightedGraph::from_edges(b.edges);
  PlanarEmbedding emb(g.vertex_count());
  emb.set_order(center, b.above[static_cast<std::size_t>(center)]);
  for (int v = 1; v < g.vertex_count(); ++v) {
    std::vector<int> order;
    if (b.prev[static_cast<std::size_t>(v)] >= 0) order.push_back(b.prev[static_cast<std::size_t>(v)]);
    for (int u : b.above[static_cast<std::size_t>(v)]) order.push_back(u);
    if (b.next[static_cast<std::size_t>(v)] >= 0 && b.next[static_cast<std::size_t>(v)] != b.prev[static_cast<std::size_t>(v)])
      order.push_back(b.next[static_cast<std::size_t>(v)]);
    for (auto it = b.below[static_cast<std::size_t>(v)].rbegin(); it != b.below[static_cast<std::size_t>(v)].rend(); ++it)
      order.push_back(*it);
    emb.set_order(v, std::move(order));
  }
  emb.validate(g);
  return {std::move(g), std::move(emb)};
}

WeightedGraph lattice(const LatticeSpec& spec) {
  if (spec.dim < 1 || spec.dim > 3) throw UnsupportedDimension("lattice dimension must be 1, 2 or 3");
  if (spec.side < 2) throw InvalidSide("lattice side must be >= 2");
  const int L = spec.side;
  std::vector<Edge> edges;
  if (spec.dim == 1) {
    for (int i = 0; i + 1 < L; ++i) edges.push_back({i, i + 1, 1.0});
  } else if (spec.dim == 2) {
    auto id = [L](int x, int y) { return x * L + y; };
    for (int x = 0; x < L; ++x)
      for (int y = 0; y < L; ++y) {
        if (x + 1 < L) edges.push_back({id(x, y), id(x + 1, y), 1.0});
        if (y + 1 < L) edges.push_back({id(x, y), id(x, y + 1), 1.0});
      }
  } else {
    auto id = [L](int x, int y, int z) { return (x * L + y) * L + z; };
    for (int x = 0; x < L; ++x)
      for (int y = 0; y < L; ++y)
        for (int z = 0; z < L; ++z) {
          if (x + 1 < L) edges.push_back({id(x, y, z), id(x + 1, y, z), 1.0});
          if (y + 1 < L) edges.push_back({id(x, y, z), id(x, y + 1, z), 1.0});
          if (z + 1 < L) edges.push_back({id(x, y, z), id(x, y, z + 1), 1.0});
        }
  }
  return WeightedGraph::from_edges(edges);
}

std::pair<WeightedGraph, PlanarEmbedding> attach_appendix(const WeightedGraph& g,
                                                          const PlanarEmbedding& emb, int at,
                                                          int length) {
  if (at < 0 || at >= g.vertex_count()) throw UnknownVertex("attachment vertex " + std::to_string(at) + " out of range");
  if (length < 1) throw ValidationError("appendix length must be >= 1");

  std::vector<Edge> edges = g.edges();
  const int n = g.vertex_count();
  int tail = at;
  for (int i = 0; i < length; ++i) {
    edges.push_back({tail, n + i, 1.0});
    tail = n + i;
  }
  WeightedGraph out = WeightedGraph::from_edges(edges);

  PlanarEmbedding emb_out(out.vertex_count());
  for (int v = 0; v < n; ++v)
    if (emb.has(v)) emb_out.set_order(v, emb.order(v));
  if (emb.has(at)) {
    std::vector<int> order = emb.order(at);
    order.insert(order.begin(), n);
    emb_out.set_order(at, std::move(order));
  } else {
    std::vector<int> order;
    for (const auto& [nbr, id] : out.neighbors(at)) order.push_back(nbr);
    emb_out.set_order(at, std::move(order));
  }
  for (int i = 0; i < length; ++i) {
    std::vector<int> order;
    order.push_back(i == 0 ? at : n + i - 1);
    if (i + 1 < length) order.push_back(n + i + 1);
    emb_out.set_order(n + i, std::move(order));
  }
  emb_out.validate(out);
  return {std::move(out), std::move(emb_out)};
}

}  // namespace congest
