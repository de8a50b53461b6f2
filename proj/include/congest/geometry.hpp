#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "congest/geodesics.hpp"
#include "congest/traffic.hpp"

namespace congest {

/// Combinatorial embedding: for each vertex, its incident edges as a cyclic
/// order of neighbor ids. Vertices without a recorded order are "unknown".
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;
  explicit PlanarEmbedding(int n) : order_(static_cast<std::size_t>(n)) {}

  void set_order(int v, std::vector<int> nbrs) { order_.at(static_cast<std::size_t>(v)) = std::move(nbrs); }
  bool has(int v) const {
    return v >= 0 && v < static_cast<int>(order_.size()) && !order_[static_cast<std::size_t>(v)].empty();
  }
  const std::vector<int>& order(int v) const { return order_.at(static_cast<std::size_t>(v)); }
  int size() const { return static_cast<int>(order_.size()); }

  /// Every recorded order must be a permutation of the vertex's neighbor set.
  void validate(const WeightedGraph& g) const;

 private:
  std::vector<std::vector<int>> order_;
};

struct VertexCurvature {
  int vertex = -1;
  std::vector<double> angles;  // alpha_k, radians
  std::vector<double> areas;   // corner triangle areas
  double kappa = 0.0;          // (2*pi - sum alpha) / sum area
};

struct InertiaReport {
  double p = 2.0;
  std::vector<double> phi;    // phi^(p)(v)
  std::vector<int> centroid;  // argmin set, all ties
};

struct DeltaEstimate {
  double delta = 0.0;
  std::size_t triples_examined = 0;
  std::array<int, 3> argmax{-1, -1, -1};
  bool exhaustive = false;
};

struct TripleSampleSpec {
  std::size_t budget = 20000;  // exhaustive below, random sampling above
  std::uint64_t seed = 0;
};

/// Corner angle of a distance triangle by the Euclidean law of cosines,
/// taken at the corner between the sides of lengths d_ab and d_ac.
double alexandrov_angle(double d_ab, double d_ac, double d_bc);

double heron_area(double d1, double d2, double d3);

/// Gauss curvature at an interior vertex of a planar triangulation:
/// angular defect divided by total incident triangle area.
VertexCurvature vertex_curvature(const WeightedGraph& g, const PlanarEmbedding& emb, int a);

/// Inscribed-triangle Gromov delta over sampled vertex triples; one geodesic
/// per side (lexicographically minimal), inscribed points restricted to
/// vertices on those geodesics.
DeltaEstimate gromov_delta(const GeodesicData& gd, const TripleSampleSpec& spec = {});

InertiaReport graph_inertia(const GeodesicData& gd, double p = 2.0);

/// phi^(p)(v) = sum_{v'} d(v,v')^p * (sum_j Lambda_d(v',j)); reduces to
/// (N-1) * graph_inertia under uniform demand.
InertiaReport demand_weighted_inertia(const GeodesicData& gd, const Demand& dem, double p = 2.0);

struct CongestionInertiaReport {
  std::vector<int> argmax_tau;
  std::vector<int> argmin_phi;
  double set_distance = 0.0;       // min graph distance between the two sets
  double spearman = 0.0;           // rank correlation of tau vs -phi
  double spikiness = 0.0;          // max tau / median tau
};

CongestionInertiaReport congestion_inertia_report(const TrafficReport& traffic,
                                                  const InertiaReport& inertia,
                                                  const GeodesicData& gd);

}  // namespace congest
