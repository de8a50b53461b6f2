#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "congest/cli.hpp"
#include "congest/io.hpp"
#include "doctest.h"

using namespace congest;

namespace {

std::string tmp_path(const std::string& name) { return "/tmp/congest_test_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_double round-trips and stays short") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  for (double x : {3.141592653589793, 1e-300, -7.25, 123456789.123456789})
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
}

TEST_CASE("graph TSV round trip preserves everything") {
  std::istringstream in("# comment line\n0\t1\t0.5\n1\t2\n\n2\t3\t2.25  # trailing\n");
  const WeightedGraph g = read_graph_tsv(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge(1).w == 1.0);  // omitted weight defaults to 1

  std::ostringstream out;
  write_graph_tsv(out, g, "roundtrip");
  std::istringstream back(out.str());
  const WeightedGraph g2 = read_graph_tsv(back);
  REQUIRE(g2.edge_count() == g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(g2.edge(e).u == g.edge(e).u);
    CHECK(g2.edge(e).v == g.edge(e).v);
    CHECK(g2.edge(e).w == g.edge(e).w);
  }
}

TEST_CASE("bad graph files raise validation errors") {
  std::istringstream one_col("0\n");
  CHECK_THROWS_AS(read_graph_tsv(one_col), ValidationError);
  std::istringstream bad_num("0\tx\t1\n");
  CHECK_THROWS_AS(read_graph_tsv(bad_num), ValidationError);
  std::istringstream neg_w("0\t1\t-3\n");
  CHECK_THROWS_AS(read_graph_tsv(neg_w), NonPositiveWeight);
}

TEST_CASE("embedding round trip") {
  const WeightedGraph g = WeightedGraph::from_edges({{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  PlanarEmbedding emb(3);
  emb.set_order(0, {2, 1});
  emb.set_order(1, {0, 2});
  std::ostringstream out;
  write_embedding(out, emb, "emb");
  std::istringstream back(out.str());
  const PlanarEmbedding emb2 = read_embedding(back, g);
  CHECK(emb2.order(0) == std::vector<int>{2, 1});
  CHECK(emb2.order(1) == std::vector<int>{0, 2});
  CHECK_FALSE(emb2.has(2));

  std::istringstream bad("0: 1,1\n");
  CHECK_THROWS_AS(read_embedding(bad, g), ValidationError);
  std::istringstream oob("7: 1\n");
  CHECK_THROWS_AS(read_embedding(oob, g), UnknownVertex);
}

TEST_CASE("demand CSV parsing") {
  std::istringstream in(",0,1,2\n0,0,2,1\n1,2,0,1\n2,1,1,0\n");
  const Demand d = read_demand_csv(in);
  CHECK(d.size() == 3);
  CHECK(d(0, 1) == 2.0);
  CHECK(d(2, 0) == 1.0);
  std::istringstream ragged(",0,1\n0,0,1\n");
  CHECK_THROWS_AS(read_demand_csv(ragged), DemandShapeMismatch);
  std::istringstream neg(",0,1\n0,0,-1\n1,1,0\n");
  CHECK_THROWS_AS(read_demand_csv(neg), ValidationError);
}

TEST_CASE("cli end-to-end: generate, traffic, curvature, report") {
  const std::string graph = tmp_path("ring.tsv");
  const std::string emb = tmp_path("ring_emb.txt");
  CHECK(run({"generate", "--family", "ring", "--valence", "7", "--layers", "2",
             "--out", graph, "--embedding-out", emb}) == 0);

  const std::string traffic_out = tmp_path("traffic.csv");
  CHECK(run({"traffic", "--graph", graph, "--threads", "2", "--out", traffic_out}) == 0);
  const std::string traffic = slurp(traffic_out);
  CHECK(traffic.find("entity,id,metric,value") != std::string::npos);
  CHECK(traffic.find("vertex,0,beta,") != std::string::npos);

  const std::string curv_out = tmp_path("curv.csv");
  CHECK(run({"curvature", "--graph", graph, "--embedding", emb, "--vertex", "0",
             "--out", curv_out}) == 0);
  CHECK(slurp(curv_out).find("kappa,-0.345485593187470") != std::string::npos);

  const std::string rep_out = tmp_path("report.json");
  CHECK(run({"report", "--graph", graph, "--embedding", emb, "--format", "json",
             "--out", rep_out}) == 0);
  CHECK(slurp(rep_out).find("\"metric\": \"delta\"") != std::string::npos);
}

TEST_CASE("cli outputs are deterministic across thread counts") {
  const std::string graph = tmp_path("lat.tsv");
  CHECK(run({"generate", "--family", "lattice", "--dim", "2", "--side", "6", "--out", graph}) == 0);
  const std::string o1 = tmp_path("t1.csv"), o2 = tmp_path("t8.csv");
  CHECK(run({"traffic", "--graph", graph, "--threads", "1", "--out", o1}) == 0);
  CHECK(run({"traffic", "--graph", graph, "--threads", "8", "--out", o2}) == 0);
  // identical apart from the echoed command line
  auto body = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
  CHECK(body(slurp(o1)) == body(slurp(o2)));
}

TEST_CASE("cli exit codes") {
  CHECK(run({"continuum", "--quantity", "volume", "--curvature", "zero",
             "--R", "2", "--out", tmp_path("vol.csv")}) == 0);
  // validation failure: ball outside the domain
  CHECK(run({"continuum", "--quantity", "lambda", "--curvature", "zero",
             "--R", "1", "--r", "5"}) == 1);
  // numeric failure: impossible tolerance budget is reported as exit 2
  CHECK(run({"continuum", "--quantity", "mu", "--curvature", "negative", "--R", "25",
             "--a", "24.9", "--tol", "1e-15"}) == 2);
  // usage failure
  CHECK(run({"nonsense"}) == 1);
  CHECK(run({"traffic"}) == 1);  // missing --graph
  CHECK(run({"delta", "--graph", "/nonexistent/file"}) == 1);
}

TEST_CASE("cli demand matrix changes the traffic") {
  const std::string graph = tmp_path("p3.tsv");
  {
    std::ofstream f(graph);
    f << "0\t1\t1\n1\t2\t1\n";
  }
  const std::string dem = tmp_path("dem.csv");
  {
    std::ofstream f(dem);
    f << ",0,1,2\n0,0,0,10\n1,0,0,0\n2,0,0,0\n";
  }
  const std::string out = tmp_path("wtraffic.csv");
  CHECK(run({"traffic", "--graph", graph, "--demand", dem, "--out", out}) == 0);
  const std::string s = slurp(out);
  // only the 0 -> 2 stream: both edges carry 10
  CHECK(s.find("edge,0-1,tau,10") != std::string::npos);
  CHECK(s.find("edge,1-2,tau,10") != std::string::npos);
}

TEST_CASE("cli scaling fit json") {
  const std::string out = tmp_path("fit.json");
  const std::string pts = tmp_path("pts.csv");
  CHECK(run({"scaling", "--family", "path", "--sizes", "32,64,128", "--out", out,
             "--points-out", pts}) == 0);
  const std::string s = slurp(out);
  CHECK(s.find("\"slope\"") != std::string::npos);
  CHECK(slurp(pts).find("size,value") != std::string::npos);
}
