#include "congest/geodesics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

namespace congest {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool close(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return a == b;
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}
}  // namespace

ShortestPathTree single_source(const WeightedGraph& g, int s) {
  const int n = g.vertex_count();
  ShortestPathTree t;
  t.dist.assign(static_cast<std::size_t>(n), kInf);
  t.sigma.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
  t.order.reserve(static_cast<std::size_t>(n));

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<char> settled(static_cast<std::size_t>(n), 0);
  t.dist[static_cast<std::size_t>(s)] = 0.0;
  t.sigma[static_cast<std::size_t>(s)] = 1.0;
  pq.emplace(0.0, s);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (settled[static_cast<std::size_t>(v)]) continue;
    settled[static_cast<std::size_t>(v)] = 1;
    t.order.push_back(v);
    for (const auto& [u, eid] : g.neighbors(v)) {
      const double nd = d + g.edge(eid).w;
      double& du = t.dist[static_cast<std::size_t>(u)];
      if (nd < du && !close(nd, du)) {
        du = nd;
        t.sigma[static_cast<std::size_t>(u)] = t.sigma[static_cast<std::size_t>(v)];
        preds[static_cast<std::size_t>(u)] = {v};
        pq.emplace(nd, u);
      } else if (close(nd, du)) {
        auto& p = preds[static_cast<std::size_t>(u)];
        if (std::find(p.begin(), p.end(), v) == p.end()) {
          p.push_back(v);
          t.sigma[static_cast<std::size_t>(u)] += t.sigma[static_cast<std::size_t>(v)];
        }
      }
    }
  }
  t.pred_offset.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    std::sort(preds[static_cast<std::size_t>(v)].begin(), preds[static_cast<std::size_t>(v)].end());
    t.pred_offset[static_cast<std::size_t>(v) + 1] =
        t.pred_offset[static_cast<std::size_t>(v)] + static_cast<int>(preds[static_cast<std::size_t>(v)].size());
  }
  t.preds.reserve(static_cast<std::size_t>(t.pred_offset.back()));
  for (int v = 0; v < n; ++v)
    t.preds.insert(t.preds.end(), preds[static_cast<std::size_t>(v)].begin(), preds[static_cast<std::size_t>(v)].end());
  return t;
}

GeodesicData::GeodesicData(WeightedGraph g, int threads) : graph_(std::move(g)) {
  const int n = graph_.vertex_count();
  if (n == 0) throw DisconnectedGraph("empty graph");
  trees_.resize(static_cast<std::size_t>(n));
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= n) return;
      trees_[static_cast<std::size_t>(s)] = single_source(graph_, s);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (int v = 0; v < n; ++v)
    if (!std::isfinite(trees_[0].dist[static_cast<std::size_t>(v)]))
      throw DisconnectedGraph("vertex " + std::to_string(v) + " unreachable from vertex 0");
}

namespace {
void expand(const ShortestPathTree& t, int v, std::vector<int>& suffix,
            std::vector<std::vector<int>>& out, std::size_t limit) {
  if (t.pred_offset[static_cast<std::size_t>(v) + 1] == t.pred_offset[static_cast<std::size_t>(v)]) {
    // reached the source
    if (out.size() >= limit) throw PathLimitExceeded("geodesic enumeration limit exceeded");
    std::vector<int> path(suffix.rbegin(), suffix.rend());
    out.push_back(std::move(path));
    return;
  }
  for (int i = t.pred_offset[static_cast<std::size_t>(v)]; i < t.pred_offset[static_cast<std::size_t>(v) + 1]; ++i) {
    suffix.push_back(t.preds[static_cast<std::size_t>(i)]);
    expand(t, t.preds[static_cast<std::size_t>(i)], suffix, out, limit);
    suffix.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> enumerate_geodesics(const GeodesicData& gd, int s, int t, std::size_t limit) {
  const auto& tree = gd.tree(s);
  std::vector<std::vector<int>> out;
  std::vector<int> suffix{t};
  expand(tree, t, suffix, out, limit);
  return out;
}

std::vector<int> lexmin_geodesic(const GeodesicData& gd, int s, int t) {
  std::vector<int> path{s};
  int x = s;
  const double total = gd.dist(s, t);
  while (x != t) {
    int best = -1;
    for (const auto& [y, eid] : gd.graph().neighbors(x)) {
      const double w = gd.graph().edge(eid).w;
      if (close(gd.dist(s, x) + w, gd.dist(s, y)) && close(gd.dist(s, y) + gd.dist(y, t), total)) {
        best = y;  // neighbors are sorted by id, first hit is minimal
        break;
      }
    }
    x = best;
    path.push_back(x);
  }
  return path;
}

}  // namespace congest
