#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "congest/experiments.hpp"
#include "congest/geometry.hpp"
#include "congest/graph.hpp"

namespace congest {

/// Shortest round-trip decimal form of a double, so emitted files are
/// byte-stable across runs.
std::string format_double(double x);

/// Graph files are tab-separated "u v w" lines; '#' starts a comment and
/// blank lines are skipped. The weight column may be omitted (defaults 1).
WeightedGraph read_graph_tsv(std::istream& in);
void write_graph_tsv(std::ostream& out, const WeightedGraph& g, const std::string& header = "");

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const WeightedGraph& g, const std::string& header = "");

/// Embedding files hold one "v: n1,n2,..." line per vertex with a recorded
/// cyclic order.
PlanarEmbedding read_embedding(std::istream& in, const WeightedGraph& g);
void write_embedding(std::ostream& out, const PlanarEmbedding& emb, const std::string& header = "");

PlanarEmbedding read_embedding_file(const std::string& path, const WeightedGraph& g);
void write_embedding_file(const std::string& path, const PlanarEmbedding& emb, const std::string& header = "");

/// Dense demand matrix as CSV with a header row and leading id column.
Demand read_demand_csv(std::istream& in);
Demand read_demand_file(const std::string& path);

struct MetricRow {
  std::string entity;  // "edge", "vertex", "graph", ...
  std::string id;
  std::string metric;
  double value = 0.0;
};

/// "entity,id,metric,value" rows under a '#' header line.
void write_report_csv(std::ostream& out, const std::vector<MetricRow>& rows, const std::string& header = "");
void write_report_json(std::ostream& out, const std::vector<MetricRow>& rows, const std::string& header = "");

/// Two-column "size,value" sweep output.
void write_points_csv(std::ostream& out, const std::vector<ScalingPoint>& points, const std::string& header = "");
void write_fit_json(std::ostream& out, const ScalingFit& fit, const std::vector<ScalingPoint>& points,
                    const std::string& header = "");

}  // namespace congest
