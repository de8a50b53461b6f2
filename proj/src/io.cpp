#include "congest/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace congest {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ValidationError("cannot parse " + what + " from '" + s + "'");
  return v;
}

long parse_long(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw ValidationError("cannot parse " + what + " from '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "' for reading");
  return f;
}

void put_header(std::ostream& out, const std::string& header) {
  if (!header.empty()) out << "# " << header << "\n";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

WeightedGraph read_graph_tsv(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string su, sv, sw;
    ss >> su >> sv;
    if (sv.empty()) throw ValidationError("graph line " + std::to_string(lineno) + " needs two vertex ids");
    Edge e;
    e.u = static_cast<int>(parse_long(su, "vertex id"));
    e.v = static_cast<int>(parse_long(sv, "vertex id"));
    e.w = (ss >> sw) ? parse_double(sw, "edge weight") : 1.0;
    edges.push_back(e);
  }
  return WeightedGraph::from_edges(edges);
}

void write_graph_tsv(std::ostream& out, const WeightedGraph& g, const std::string& header) {
  put_header(out, header);
  for (const Edge& e : g.edges())
    out << g.original_id(e.u) << "\t" << g.original_id(e.v) << "\t" << format_double(e.w) << "\n";
}

WeightedGraph read_graph_file(const std::string& path) {
  auto f = open_in(path);
  return read_graph_tsv(f);
}

void write_graph_file(const std::string& path, const WeightedGraph& g, const std::string& header) {
  auto f = open_out(path);
  write_graph_tsv(f, g, header);
}

PlanarEmbedding read_embedding(std::istream& in, const WeightedGraph& g) {
  PlanarEmbedding emb(g.vertex_count());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ValidationError("embedding line " + std::to_string(lineno) + " is missing ':'");
    const int v = static_cast<int>(parse_long(trim(line.substr(0, colon)), "vertex id"));
    if (v < 0 || v >= g.vertex_count())
      throw UnknownVertex("embedding vertex " + std::to_string(v) + " out of range");
    std::vector<int> order;
    for (const std::string& part : split(line.substr(colon + 1), ',')) {
      const std::string p = trim(part);
      if (p.empty()) continue;
      order.push_back(static_cast<int>(parse_long(p, "neighbor id")));
    }
    emb.set_order(v, std::move(order));
  }
  emb.validate(g);
  return emb;
}

void write_embedding(std::ostream& out, const PlanarEmbedding& emb, const std::string& header) {
  put_header(out, header);
  for (int v = 0; v < emb.size(); ++v) {
    if (!emb.has(v)) continue;
    out << v << ":";
    const auto& order = emb.order(v);
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? "," : " ") << order[i];
    out << "\n";
  }
}

PlanarEmbedding read_embedding_file(const std::string& path, const WeightedGraph& g) {
  auto f = open_in(path);
  return read_embedding(f, g);
}

void write_embedding_file(const std::string& path, const PlanarEmbedding& emb, const std::string& header) {
  auto f = open_out(path);
  write_embedding(f, emb, header);
}

Demand read_demand_csv(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2) throw DemandShapeMismatch("demand matrix needs a header and at least one row");
  const std::size_t n = split(lines[0], ',').size() - 1;
  if (n == 0 || lines.size() != n + 1)
    throw DemandShapeMismatch("demand matrix must be square with a header row and id column");
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != n + 1)
      throw DemandShapeMismatch("demand row " + std::to_string(i) + " has " +
                                std::to_string(cells.size() - 1) + " entries, expected " +
                                std::to_string(n));
    for (std::size_t j = 1; j < cells.size(); ++j) {
      const double v = parse_double(trim(cells[j]), "demand entry");
      if (v < 0.0) throw ValidationError("demand entries must be non-negative");
      entries.push_back(v);
    }
  }
  return Demand::from_matrix(static_cast<int>(n), std::move(entries));
}

Demand read_demand_file(const std::string& path) {
  auto f = open_in(path);
  return read_demand_csv(f);
}

void write_report_csv(std::ostream& out, const std::vector<MetricRow>& rows, const std::string& header) {
  put_header(out, header);
  out << "entity,id,metric,value\n";
  for (const MetricRow& r : rows)
    out << r.entity << "," << r.id << "," << r.metric << "," << format_double(r.value) << "\n";
}

void write_report_json(std::ostream& out, const std::vector<MetricRow>& rows, const std::string& header) {
  nlohmann::json j;
  if (!header.empty()) j["header"] = header;
  j["rows"] = nlohmann::json::array();
  for (const MetricRow& r : rows)
    j["rows"].push_back({{"entity", r.entity}, {"id", r.id}, {"metric", r.metric}, {"value", r.value}});
  out << j.dump(2) << "\n";
}

void write_points_csv(std::ostream& out, const std::vector<ScalingPoint>& points, const std::string& header) {
  put_header(out, header);
  out << "size,value\n";
  for (const ScalingPoint& p : points)
    out << format_double(p.size) << "," << format_double(p.value) << "\n";
}

void write_fit_json(std::ostream& out, const ScalingFit& fit, const std::vector<ScalingPoint>& points,
                    const std::string& header) {
  nlohmann::json j;
  if (!header.empty()) j["header"] = header;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["r2"] = fit.r2;
  j["points"] = nlohmann::json::array();
  for (const ScalingPoint& p : points) j["points"].push_back({{"size", p.size}, {"value", p.value}});
  out << j.dump(2) << "\n";
}

}  // namespace congest
