#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "congest/continuum.hpp"
#include "congest/generators.hpp"
#include "congest/geometry.hpp"
#include "congest/traffic.hpp"

namespace congest {

struct ScalingPoint {
  double size = 0.0;
  double value = 0.0;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;  // in log space
  double r2 = 0.0;
};

/// Least-squares line through (log size, log value). Requires at least two
/// points with positive coordinates.
ScalingFit fit_loglog(const std::vector<ScalingPoint>& points);

/// Peak-congestion sweep over a graph family. For each entry of `sizes` the
/// family parameter means: ring -> layers, lattice -> side, path -> edge
/// count. The measured value is max_v beta_c(v) under uniform demand and the
/// size axis is the vertex count.
struct DiscreteSweepSpec {
  std::string family = "ring";  // "ring", "lattice" or "path"
  int valence = 7;              // ring only
  int dim = 2;                  // lattice only
  std::vector<int> sizes;
  int threads = 1;
  std::size_t vertex_budget = 30000;  // largest instance allowed
};

std::vector<ScalingPoint> discrete_scaling(const DiscreteSweepSpec& spec);

/// lambda of a fixed concentric ball as the ambient radius R grows.
struct ContinuumSweepSpec {
  SpaceSpec space;
  std::vector<double> radii;  // ambient radii R
  double ball_radius = 1.0;
  QuadSpec quad{1e-6, 1 << 16};
};

std::vector<ScalingPoint> continuum_scaling(const ContinuumSweepSpec& spec);

/// Congestion/geometry profile of one graph, used to compare valences.
struct GraphAnalysis {
  int n = 0;
  double max_vertex_tau = 0.0;
  double spikiness = 0.0;      // max tau / median tau
  double spearman = 0.0;       // rank correlation of tau vs -inertia
  double set_distance = 0.0;   // peak-traffic set to inertia-centroid set
  double delta = 0.0;          // inscribed-triangle Gromov delta
  double kappa_center = 0.0;   // curvature at vertex 0 when an embedding is given
  bool has_curvature = false;
};

GraphAnalysis analyze_graph(const WeightedGraph& g, const PlanarEmbedding* emb, int threads = 1,
                            const TripleSampleSpec& triples = {});

/// Ring graphs at valences 6..8 with layer counts chosen so the vertex
/// counts are comparable, analyzed side by side.
struct ValenceComparison {
  int valence = 0;
  int layers = 0;
  GraphAnalysis analysis;
};

std::vector<ValenceComparison> valence_sweep(int threads = 1);

}  // namespace congest
