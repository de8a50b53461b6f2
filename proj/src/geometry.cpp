#include "congest/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "congest/rng.hpp"

namespace congest {

namespace {
constexpr double kPi = std::numbers::pi;

void check_triangle(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw TriangleInequalityViolated("triangle sides must be positive");
  const double tol = 1e-9 * std::max({1.0, a, b, c});
  if (a > b + c + tol || b > a + c + tol || c > a + b + tol)
    throw TriangleInequalityViolated("side lengths violate the triangle inequality");
}
}  // namespace

void PlanarEmbedding::validate(const WeightedGraph& g) const {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!has(v)) continue;
    std::vector<int> a = order(v);
    std::vector<int> b;
    for (const auto& [nbr, id] : g.neighbors(v)) b.push_back(nbr);
    std::sort(a.begin(), a.end());
    if (a != b)
      throw ValidationError("embedding order at vertex " + std::to_string(v) +
                            " is not a permutation of its neighbors");
  }
}

double alexandrov_angle(double d_ab, double d_ac, double d_bc) {
  check_triangle(d_ab, d_ac, d_bc);
  const double c = (d_ab * d_ab + d_ac * d_ac - d_bc * d_bc) / (2.0 * d_ab * d_ac);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double heron_area(double d1, double d2, double d3) {
  check_triangle(d1, d2, d3);
  const double s = 0.5 * (d1 + d2 + d3);
  const double rad = s * (s - d1) * (s - d2) * (s - d3);
  return std::sqrt(std::max(rad, 0.0));
}

VertexCurvature vertex_curvature(const WeightedGraph& g, const PlanarEmbedding& emb, int a) {
  if (a < 0 || a >= g.vertex_count()) throw UnknownVertex("vertex " + std::to_string(a) + " out of range");
  if (!emb.has(a)) throw NotInterior("no embedding order recorded at vertex " + std::to_string(a));
  const std::vector<int>& ring = emb.order(a);
  const int deg = static_cast<int>(ring.size());
  VertexCurvature vc;
  vc.vertex = a;
  double angle_sum = 0.0, area_sum = 0.0;
  for (int k = 0; k < deg; ++k) {
    const int b1 = ring[static_cast<std::size_t>(k)];
    const int b2 = ring[static_cast<std::size_t>((k + 1) % deg)];
    const int e1 = g.edge_between(a, b1);
    const int e2 = g.edge_between(a, b2);
    const int e12 = g.edge_between(b1, b2);
    if (e12 < 0)
      throw NotInterior("consecutive neighbors " + std::to_string(b1) + "," + std::to_string(b2) +
                        " of vertex " + std::to_string(a) + " are not adjacent");
    const double alpha = alexandrov_angle(g.edge(e1).w, g.edge(e2).w, g.edge(e12).w);
    const double area = heron_area(g.edge(e1).w, g.edge(e2).w, g.edge(e12).w);
    vc.angles.push_back(alpha);
    vc.areas.push_back(area);
    angle_sum += alpha;
    area_sum += area;
  }
  if (!(area_sum > 0.0)) throw ZeroArea("incident triangles at vertex " + std::to_string(a) + " have zero total area");
  vc.kappa = (2.0 * kPi - angle_sum) / area_sum;
  return vc;
}

namespace {
double inscribed_perimeter(const GeodesicData& gd, const std::vector<int>& side_bc,
                           const std::vector<int>& side_ac, const std::vector<int>& side_ab) {
  double best = std::numeric_limits<double>::infinity();
  for (int x : side_bc)
    for (int y : side_ac)
      for (int z : side_ab) {
        const double p = gd.dist(x, y) + gd.dist(y, z) + gd.dist(z, x);
        best = std::min(best, p);
      }
  return best;
}
}  // namespace

DeltaEstimate gromov_delta(const GeodesicData& gd, const TripleSampleSpec& spec) {
  const int n = gd.vertex_count();
  if (n < 3) throw EmptySample("need at least 3 vertices to form a triple");
  const std::size_t total =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 2) / 6;
  DeltaEstimate est;
  est.exhaustive = total <= spec.budget;

  auto consider = [&](int a, int b, int c) {
    const auto ab = lexmin_geodesic(gd, a, b);
    const auto bc = lexmin_geodesic(gd, b, c);
    const auto ac = lexmin_geodesic(gd, a, c);
    const double d = inscribed_perimeter(gd, bc, ac, ab);
    ++est.triples_examined;
    if (d > est.delta || est.argmax[0] < 0) {
      est.delta = std::max(d, 0.0);
      est.argmax = {a, b, c};
    }
  };

  if (est.exhaustive) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) consider(a, b, c);
  } else {
    CounterRng rng{spec.seed};
    std::uint64_t ctr = 0;
    for (std::size_t i = 0; i < spec.budget; ++i) {
      int a, b, c;
      do {
        a = static_cast<int>(rng.below(ctr++, static_cast<std::uint64_t>(n)));
        b = static_cast<int>(rng.below(ctr++, static_cast<std::uint64_t>(n)));
        c = static_cast<int>(rng.below(ctr++, static_cast<std::uint64_t>(n)));
      } while (a == b || b == c || a == c);
      consider(a, b, c);
    }
  }
  return est;
}

InertiaReport graph_inertia(const GeodesicData& gd, double p) {
  const int n = gd.vertex_count();
  InertiaReport rep;
  rep.p = p;
  rep.phi.assign(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) {
    double sum = 0.0;
    for (int u = 0; u < n; ++u)
      if (u != v) sum += std::pow(gd.dist(v, u), p);
    rep.phi[static_cast<std::size_t>(v)] = sum;
  }
  const double mn = *std::min_element(rep.phi.begin(), rep.phi.end());
  const double tol = 1e-9 * std::max(1.0, mn);
  for (int v = 0; v < n; ++v)
    if (rep.phi[static_cast<std::size_t>(v)] <= mn + tol) rep.centroid.push_back(v);
  return rep;
}

InertiaReport demand_weighted_inertia(const GeodesicData& gd, const Demand& dem, double p) {
  const int n = gd.vertex_count();
  dem.check_shape(n);
  std::vector<double> weight(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) weight[static_cast<std::size_t>(u)] = dem.out_weight(u, n);

  InertiaReport rep;
  rep.p = p;
  rep.phi.assign(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) {
    double sum = 0.0;
    for (int u = 0; u < n; ++u)
      if (u != v) sum += std::pow(gd.dist(v, u), p) * weight[static_cast<std::size_t>(u)];
    rep.phi[static_cast<std::size_t>(v)] = sum;
  }
  const double mn = *std::min_element(rep.phi.begin(), rep.phi.end());
  const double tol = 1e-9 * std::max(1.0, mn);
  for (int v = 0; v < n; ++v)
    if (rep.phi[static_cast<std::size_t>(v)] <= mn + tol) rep.centroid.push_back(v);
  return rep;
}

namespace {
std::vector<double> average_ranks(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[idx[t]] = r;
    i = j + 1;
  }
  return rank;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double num = 0, da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - ma) * (b[i] - mb);
    da += (a[i] - ma) * (a[i] - ma);
    db += (b[i] - mb) * (b[i] - mb);
  }
  if (da == 0.0 || db == 0.0) return 0.0;
  return num / std::sqrt(da * db);
}
}  // namespace

CongestionInertiaReport congestion_inertia_report(const TrafficReport& traffic,
                                                  const InertiaReport& inertia,
                                                  const GeodesicData& gd) {
  const int n = gd.vertex_count();
  if (traffic.n != n || static_cast<int>(inertia.phi.size()) != n)
    throw ValidationError("traffic/inertia reports disagree with the graph size");
  CongestionInertiaReport rep;

  const double mx = *std::max_element(traffic.vertex_tau.begin(), traffic.vertex_tau.end());
  const double tol_t = 1e-9 * std::max(1.0, mx);
  for (int v = 0; v < n; ++v)
    if (traffic.vertex_tau[static_cast<std::size_t>(v)] >= mx - tol_t) rep.argmax_tau.push_back(v);
  rep.argmin_phi = inertia.centroid;

  rep.set_distance = std::numeric_limits<double>::infinity();
  for (int x : rep.argmax_tau)
    for (int y : rep.argmin_phi) rep.set_distance = std::min(rep.set_distance, gd.dist(x, y));

  std::vector<double> neg_phi(inertia.phi.size());
  for (std::size_t i = 0; i < inertia.phi.size(); ++i) neg_phi[i] = -inertia.phi[i];
  rep.spearman = pearson(average_ranks(traffic.vertex_tau), average_ranks(neg_phi));

  std::vector<double> sorted = traffic.vertex_tau;
  std::sort(sorted.begin(), sorted.end());
  const double median = (n % 2 == 1) ? sorted[static_cast<std::size_t>(n / 2)]
                                     : 0.5 * (sorted[static_cast<std::size_t>(n / 2) - 1] + sorted[static_cast<std::size_t>(n / 2)]);
  rep.spikiness = median > 0.0 ? mx / median : 0.0;
  return rep;
}

}  // namespace congest
