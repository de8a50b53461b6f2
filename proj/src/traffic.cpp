#include "congest/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace congest {

namespace {

constexpr int kChunk = 64;  // fixed chunk size keeps reductions bit-identical

struct Partial {
  std::vector<double> edge_tau;
  std::vector<double> beta;
};

// Brandes-style dependency accumulation for one source, demand-weighted.
void accumulate_source(const WeightedGraph& g, const ShortestPathTree& t, const Demand& dem,
                       int s, Partial& out) {
  const int n = g.vertex_count();
  std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    const int v = *it;
    if (v == s) break;
    const double coeff = (dem(s, v) + delta[static_cast<std::size_t>(v)]) / t.sigma[static_cast<std::size_t>(v)];
    for (int i = t.pred_offset[static_cast<std::size_t>(v)]; i < t.pred_offset[static_cast<std::size_t>(v) + 1]; ++i) {
      const int p = t.preds[static_cast<std::size_t>(i)];
      const double c = t.sigma[static_cast<std::size_t>(p)] * coeff;
      out.edge_tau[static_cast<std::size_t>(g.edge_between(p, v))] += c;
      delta[static_cast<std::size_t>(p)] += c;
    }
    // interior transits plus the v-as-target endpoint
    out.beta[static_cast<std::size_t>(v)] += delta[static_cast<std::size_t>(v)] + dem(s, v);
  }
  out.beta[static_cast<std::size_t>(s)] += dem.out_weight(s, n);
}

Partial accumulate_all(const GeodesicData& gd, const Demand& dem, int threads) {
  const WeightedGraph& g = gd.graph();
  const int n = g.vertex_count();
  dem.check_shape(n);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, threads);
  const int chunks = (n + kChunk - 1) / kChunk;

  Partial total{std::vector<double>(static_cast<std::size_t>(g.edge_count()), 0.0),
                std::vector<double>(static_cast<std::size_t>(n), 0.0)};

  auto run_chunk = [&](int ci, Partial& p) {
    p.edge_tau.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    p.beta.assign(static_cast<std::size_t>(n), 0.0);
    for (int s = ci * kChunk; s < std::min(n, (ci + 1) * kChunk); ++s)
      accumulate_source(g, gd.tree(s), dem, s, p);
  };
  auto merge = [&](const Partial& p) {
    for (std::size_t i = 0; i < total.edge_tau.size(); ++i) total.edge_tau[i] += p.edge_tau[i];
    for (std::size_t i = 0; i < total.beta.size(); ++i) total.beta[i] += p.beta[i];
  };

  if (threads == 1 || chunks == 1) {
    Partial p;
    for (int ci = 0; ci < chunks; ++ci) {
      run_chunk(ci, p);
      merge(p);
    }
  } else {
    // waves of `threads` chunks, merged in chunk order
    std::vector<Partial> wave(static_cast<std::size_t>(threads));
    for (int base = 0; base < chunks; base += threads) {
      const int count = std::min(threads, chunks - base);
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(count));
      for (int i = 0; i < count; ++i)
        pool.emplace_back([&, i] { run_chunk(base + i, wave[static_cast<std::size_t>(i)]); });
      for (auto& th : pool) th.join();
      for (int i = 0; i < count; ++i) merge(wave[static_cast<std::size_t>(i)]);
    }
  }
  return total;
}

}  // namespace

std::vector<double> edge_traffic(const GeodesicData& gd, const Demand& dem, int threads) {
  return accumulate_all(gd, dem, threads).edge_tau;
}

TrafficReport vertex_traffic(const GeodesicData& gd, const Demand& dem, int threads) {
  const WeightedGraph& g = gd.graph();
  Partial acc = accumulate_all(gd, dem, threads);
  TrafficReport rep;
  rep.n = g.vertex_count();
  rep.edge_tau = std::move(acc.edge_tau);
  rep.beta = std::move(acc.beta);
  rep.vertex_tau.assign(static_cast<std::size_t>(rep.n), 0.0);
  for (int id = 0; id < g.edge_count(); ++id) {
    rep.vertex_tau[static_cast<std::size_t>(g.edge(id).u)] += rep.edge_tau[static_cast<std::size_t>(id)];
    rep.vertex_tau[static_cast<std::size_t>(g.edge(id).v)] += rep.edge_tau[static_cast<std::size_t>(id)];
  }
  if (dem.is_uniform()) {
    // tau(v) = 2 beta_c(v) - 2(N-1) must hold exactly
    for (int v = 0; v < rep.n; ++v) {
      const double expected = 2.0 * rep.beta[static_cast<std::size_t>(v)] - 2.0 * (rep.n - 1);
      if (std::abs(rep.vertex_tau[static_cast<std::size_t>(v)] - expected) >
          1e-9 * std::max(1.0, std::abs(expected)))
        throw NumericError("traffic/betweenness identity violated at vertex " + std::to_string(v));
    }
  }
  return rep;
}

double subgraph_load(const GeodesicData& gd, const Demand& dem, const std::vector<int>& edge_ids,
                     int threads) {
  const WeightedGraph& g = gd.graph();
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) throw UnknownEdge("edge id " + std::to_string(id) + " out of range");
    if (seen[static_cast<std::size_t>(id)]) throw UnknownEdge("edge id " + std::to_string(id) + " repeated in subgraph");
    seen[static_cast<std::size_t>(id)] = 1;
  }
  if (edge_ids.empty()) return 0.0;
  const std::vector<double> tau = edge_traffic(gd, dem, threads);
  double load = 0.0;
  for (int id : edge_ids) load += g.edge(id).w * tau[static_cast<std::size_t>(id)];
  return load;
}

std::pair<std::vector<int>, double> star(const WeightedGraph& g, int v) {
  std::vector<int> ids;
  double len = 0.0;
  for (const auto& [nbr, id] : g.neighbors(v)) {
    ids.push_back(id);
    len += g.edge(id).w;
  }
  std::sort(ids.begin(), ids.end());
  return {ids, len};
}

double max_beta_centrality(const WeightedGraph& g, int threads) {
  const int n = g.vertex_count();
  const Demand dem = Demand::uniform();
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, threads);
  const int chunks = (n + kChunk - 1) / kChunk;

  std::vector<double> beta(static_cast<std::size_t>(n), 0.0);
  auto run_chunk = [&](int ci, Partial& p) {
    p.edge_tau.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    p.beta.assign(static_cast<std::size_t>(n), 0.0);
    for (int s = ci * kChunk; s < std::min(n, (ci + 1) * kChunk); ++s) {
      const ShortestPathTree t = single_source(g, s);
      if (t.order.size() != static_cast<std::size_t>(n)) throw DisconnectedGraph("graph not connected");
      accumulate_source(g, t, dem, s, p);
    }
  };

  if (threads == 1 || chunks == 1) {
    Partial p;
    for (int ci = 0; ci < chunks; ++ci) {
      run_chunk(ci, p);
      for (int v = 0; v < n; ++v) beta[static_cast<std::size_t>(v)] += p.beta[static_cast<std::size_t>(v)];
    }
  } else {
    std::vector<Partial> wave(static_cast<std::size_t>(threads));
    for (int base = 0; base < chunks; base += threads) {
      const int count = std::min(threads, chunks - base);
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(count));
      for (int i = 0; i < count; ++i)
        pool.emplace_back([&, i] { run_chunk(base + i, wave[static_cast<std::size_t>(i)]); });
      for (auto& th : pool) th.join();
      for (int i = 0; i < count; ++i)
        for (int v = 0; v < n; ++v)
          beta[static_cast<std::size_t>(v)] += wave[static_cast<std::size_t>(i)].beta[static_cast<std::size_t>(v)];
    }
  }
  return *std::max_element(beta.begin(), beta.end());
}

}  // namespace congest
