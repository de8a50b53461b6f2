#pragma once

#include <utility>

#include "congest/geometry.hpp"
#include "congest/graph.hpp"

namespace congest {

struct RingGrowthSpec {
  int valence = 7;  // target interior degree, 5..12
  int layers = 1;   // layers beyond the center
};

struct LatticeSpec {
  int dim = 2;   // 1, 2 or 3
  int side = 2;  // vertices per axis
};

/// Layered planar triangulation with unit weights in which every vertex of
/// a closed layer has degree exactly `valence`. Layer 0 is the center
/// (vertex 0); layer 1 is a triangulated wheel of `valence` neighbors; each
/// further layer is grown counterclockwise, one shared vertex per boundary
/// edge. Returns the graph together with its combinatorial embedding.
std::pair<WeightedGraph, PlanarEmbedding> ring_growth(const RingGrowthSpec& spec);

/// Unit-weight nearest-neighbor grid of side^dim vertices.
WeightedGraph lattice(const LatticeSpec& spec);

/// Hangs a path of `length` unit edges at vertex `at`; the new edge is
/// inserted first in `at`'s cyclic order.
std::pair<WeightedGraph, PlanarEmbedding> attach_appendix(const WeightedGraph& g,
                                                          const PlanarEmbedding& emb, int at,
                                                          int length);

}  // namespace congest
