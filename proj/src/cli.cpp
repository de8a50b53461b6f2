#include "congest/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "congest/continuum.hpp"
#include "congest/experiments.hpp"
#include "congest/generators.hpp"
#include "congest/geometry.hpp"
#include "congest/io.hpp"
#include "congest/traffic.hpp"

namespace congest {

namespace {

std::string join_args(const std::vector<std::string>& args) {
  std::ostringstream ss;
  ss << "congest " << kToolVersion;
  for (const auto& a : args) ss << " " << a;
  return ss.str();
}

// Writes through a file or to stdout when the path is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
  } else {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open '" + path + "' for writing");
    fn(f);
  }
}

SpaceSpec parse_space(const std::string& curvature, int dim, double k) {
  SpaceSpec sp;
  sp.dim = dim;
  sp.k = k;
  if (curvature == "negative" || curvature == "neg")
    sp.sign = CurvatureSign::negative;
  else if (curvature == "zero" || curvature == "flat")
    sp.sign = CurvatureSign::zero;
  else if (curvature == "positive" || curvature == "pos")
    sp.sign = CurvatureSign::positive;
  else
    throw UsageError("curvature must be negative, zero or positive");
  sp.validate();
  return sp;
}

Demand load_demand(const std::string& path) {
  return path.empty() ? Demand::uniform() : read_demand_file(path);
}

struct Options {
  // generate
  std::string family = "ring";
  int valence = 7, layers = 2, dim = 2, side = 8, length = 8;
  int appendix_at = -1, appendix_length = 0;
  std::string out, embedding_out;
  // shared inputs
  std::string graph_path, embedding_path, demand_path, format = "csv";
  int threads = 1;
  // curvature / inertia / delta
  int vertex = -1;
  double p = 2.0;
  std::size_t budget = 20000;
  std::uint64_t seed = 0;
  // continuum
  std::string curvature = "negative", quantity = "volume";
  double k = 1.0, R = 1.0, a = 0.0, theta = std::numbers::pi / 2, rho = 0.0, r = 1.0;
  double tol = 1e-8;
  std::size_t samples = 100000;
  bool full_sphere = false;
  // scaling
  std::vector<int> sizes;
  std::vector<double> radii;
  double ball_radius = 1.0;
  std::string points_out;
};

int cmd_generate(const Options& o, const std::string& header) {
  WeightedGraph g;
  PlanarEmbedding emb;
  bool have_emb = false;
  if (o.family == "ring") {
    std::tie(g, emb) = ring_growth({o.valence, o.layers});
    have_emb = true;
  } else if (o.family == "lattice") {
    g = lattice({o.dim, o.side});
  } else if (o.family == "path") {
    std::vector<Edge> edges;
    if (o.length < 1) throw ValidationError("path length must be >= 1");
    for (int i = 0; i < o.length; ++i) edges.push_back({i, i + 1, 1.0});
    g = WeightedGraph::from_edges(edges);
  } else {
    throw UsageError("unknown family: " + o.family);
  }
  if (o.appendix_length > 0) {
    if (!have_emb) {
      PlanarEmbedding none(g.vertex_count());
      std::tie(g, emb) = attach_appendix(g, none, o.appendix_at, o.appendix_length);
    } else {
      std::tie(g, emb) = attach_appendix(g, emb, o.appendix_at, o.appendix_length);
    }
    have_emb = true;
  }
  emit(o.out, [&](std::ostream& os) { write_graph_tsv(os, g, header); });
  if (!o.embedding_out.empty()) {
    if (!have_emb) throw UsageError("family '" + o.family + "' does not produce an embedding");
    emit(o.embedding_out, [&](std::ostream& os) { write_embedding(os, emb, header); });
  }
  return 0;
}

void write_rows(const Options& o, const std::vector<MetricRow>& rows, const std::string& header) {
  if (o.format == "csv")
    emit(o.out, [&](std::ostream& os) { write_report_csv(os, rows, header); });
  else if (o.format == "json")
    emit(o.out, [&](std::ostream& os) { write_report_json(os, rows, header); });
  else
    throw UsageError("format must be csv or json");
}

int cmd_traffic(const Options& o, const std::string& header) {
  const WeightedGraph g = read_graph_file(o.graph_path);
  GeodesicData gd(g, o.threads);
  const Demand dem = load_demand(o.demand_path);
  dem.check_shape(g.vertex_count());
  const TrafficReport rep = vertex_traffic(gd, dem, o.threads);

  std::vector<MetricRow> rows;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const std::string id = std::to_string(g.original_id(ed.u)) + "-" + std::to_string(g.original_id(ed.v));
    rows.push_back({"edge", id, "tau", rep.edge_tau[static_cast<std::size_t>(e)]});
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string id = std::to_string(g.original_id(v));
    rows.push_back({"vertex", id, "beta", rep.beta[static_cast<std::size_t>(v)]});
    rows.push_back({"vertex", id, "tau", rep.vertex_tau[static_cast<std::size_t>(v)]});
  }
  write_rows(o, rows, header);
  return 0;
}

int cmd_curvature(const Options& o, const std::string& header) {
  const WeightedGraph g = read_graph_file(o.graph_path);
  if (o.embedding_path.empty()) throw UsageError("--embedding is required");
  const PlanarEmbedding emb = read_embedding_file(o.embedding_path, g);

  std::vector<MetricRow> rows;
  auto add = [&](int v) {
    const VertexCurvature vc = vertex_curvature(g, emb, v);
    rows.push_back({"vertex", std::to_string(g.original_id(v)), "kappa", vc.kappa});
  };
  if (o.vertex >= 0) {
    add(o.vertex);
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!emb.has(v)) continue;
      try {
        add(v);
      } catch (const NotInterior&) {
        // boundary vertices have no curvature; skip them in bulk mode
      }
    }
  }
  write_rows(o, rows, header);
  return 0;
}

int cmd_inertia(const Options& o, const std::string& header) {
  const WeightedGraph g = read_graph_file(o.graph_path);
  GeodesicData gd(g, o.threads);
  const Demand dem = load_demand(o.demand_path);
  dem.check_shape(g.vertex_count());
  const InertiaReport rep = dem.is_uniform() ? graph_inertia(gd, o.p)
                                             : demand_weighted_inertia(gd, dem, o.p);
  std::vector<MetricRow> rows;
  for (int v = 0; v < g.vertex_count(); ++v)
    rows.push_back({"vertex", std::to_string(g.original_id(v)), "phi", rep.phi[static_cast<std::size_t>(v)]});
  for (int v : rep.centroid)
    rows.push_back({"vertex", std::to_string(g.original_id(v)), "centroid", 1.0});
  write_rows(o, rows, header);
  return 0;
}

int cmd_delta(const Options& o, const std::string& header) {
  const WeightedGraph g = read_graph_file(o.graph_path);
  GeodesicData gd(g, o.threads);
  const DeltaEstimate est = gromov_delta(gd, {o.budget, o.seed});
  std::vector<MetricRow> rows;
  rows.push_back({"graph", "", "delta", est.delta});
  rows.push_back({"graph", "", "triples_examined", static_cast<double>(est.triples_examined)});
  rows.push_back({"graph", "", "exhaustive", est.exhaustive ? 1.0 : 0.0});
  for (int i = 0; i < 3; ++i)
    rows.push_back({"vertex", std::to_string(g.original_id(est.argmax[static_cast<std::size_t>(i)])),
                    "delta_argmax", static_cast<double>(i)});
  write_rows(o, rows, header);
  return 0;
}

int cmd_continuum(const Options& o, const std::string& header) {
  const SpaceSpec sp = parse_space(o.curvature, o.dim, o.k);
  const QuadSpec quad{o.tol, 1 << 16};
  std::vector<MetricRow> rows;
  if (o.quantity == "volume") {
    rows.push_back({"space", "", "volume", ball_volume(sp, o.R)});
  } else if (o.quantity == "exit") {
    rows.push_back({"space", "", "exit_length", exit_length(sp, o.R, o.a, o.theta)});
  } else if (o.quantity == "chord") {
    rows.push_back({"space", "", "full_chord", full_chord(sp, o.R, o.a, o.theta)});
  } else if (o.quantity == "mu") {
    const DensityValue dv = o.full_sphere ? mu_density_full_sphere(sp, o.a, quad)
                                          : mu_density(sp, o.R, o.a, quad);
    rows.push_back({"space", "", "mu", dv.value});
    rows.push_back({"space", "", "mu_err", dv.abs_err});
  } else if (o.quantity == "lambda") {
    const DensityValue dv = lambda_ball(sp, o.R, {o.rho, o.r}, quad);
    rows.push_back({"space", "", "lambda", dv.value});
    rows.push_back({"space", "", "lambda_err", dv.abs_err});
  } else if (o.quantity == "mc") {
    const MCEstimate est = mc_transit(sp, o.R, {o.rho, o.r}, o.samples, o.seed);
    rows.push_back({"space", "", "mc_mean", est.mean});
    rows.push_back({"space", "", "mc_std_error", est.std_error});
    rows.push_back({"space", "", "mc_transit_fraction", est.transit_fraction});
  } else if (o.quantity == "inertia") {
    const DensityValue dv = continuum_inertia(sp, o.R, o.a, o.p, quad);
    rows.push_back({"space", "", "inertia", dv.value});
    rows.push_back({"space", "", "inertia_err", dv.abs_err});
  } else {
    throw UsageError("unknown quantity: " + o.quantity);
  }
  write_rows(o, rows, header);
  return 0;
}

int cmd_scaling(const Options& o, const std::string& header) {
  std::vector<ScalingPoint> points;
  if (o.family == "continuum") {
    ContinuumSweepSpec spec;
    spec.space = parse_space(o.curvature, o.dim, o.k);
    spec.radii = o.radii;
    spec.ball_radius = o.ball_radius;
    spec.quad = {o.tol, 1 << 16};
    points = continuum_scaling(spec);
  } else {
    DiscreteSweepSpec spec;
    spec.family = o.family;
    spec.valence = o.valence;
    spec.dim = o.dim;
    spec.sizes = o.sizes;
    spec.threads = o.threads;
    points = discrete_scaling(spec);
  }
  const ScalingFit fit = fit_loglog(points);
  if (!o.points_out.empty())
    emit(o.points_out, [&](std::ostream& os) { write_points_csv(os, points, header); });
  emit(o.out, [&](std::ostream& os) { write_fit_json(os, fit, points, header); });
  return 0;
}

int cmd_report(const Options& o, const std::string& header) {
  std::vector<MetricRow> rows;
  if (o.graph_path.empty()) {
    for (const ValenceComparison& vc : valence_sweep(o.threads)) {
      const std::string id = "valence" + std::to_string(vc.valence);
      const GraphAnalysis& a = vc.analysis;
      rows.push_back({"graph", id, "n", static_cast<double>(a.n)});
      rows.push_back({"graph", id, "layers", static_cast<double>(vc.layers)});
      rows.push_back({"graph", id, "max_vertex_tau", a.max_vertex_tau});
      rows.push_back({"graph", id, "spikiness", a.spikiness});
      rows.push_back({"graph", id, "spearman", a.spearman});
      rows.push_back({"graph", id, "set_distance", a.set_distance});
      rows.push_back({"graph", id, "delta", a.delta});
      if (a.has_curvature) rows.push_back({"graph", id, "kappa_center", a.kappa_center});
    }
  } else {
    const WeightedGraph g = read_graph_file(o.graph_path);
    std::optional<PlanarEmbedding> emb;
    if (!o.embedding_path.empty()) emb = read_embedding_file(o.embedding_path, g);
    const GraphAnalysis a =
        analyze_graph(g, emb ? &*emb : nullptr, o.threads, {o.budget, o.seed});
    rows.push_back({"graph", "", "n", static_cast<double>(a.n)});
    rows.push_back({"graph", "", "max_vertex_tau", a.max_vertex_tau});
    rows.push_back({"graph", "", "spikiness", a.spikiness});
    rows.push_back({"graph", "", "spearman", a.spearman});
    rows.push_back({"graph", "", "set_distance", a.set_distance});
    rows.push_back({"graph", "", "delta", a.delta});
    if (a.has_curvature) rows.push_back({"graph", "", "kappa_center", a.kappa_center});
  }
  write_rows(o, rows, header);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Traffic congestion and coarse geometry of networks"};
  app.set_version_flag("--version", std::string("congest ") + kToolVersion);
  app.require_subcommand(1);

  auto o = std::make_shared<Options>();

  CLI::App* gen = app.add_subcommand("generate", "Build a graph from a family");
  gen->add_option("--family", o->family, "ring, lattice or path")->capture_default_str();
  gen->add_option("--valence", o->valence, "ring valence (5..12)")->capture_default_str();
  gen->add_option("--layers", o->layers, "ring layer count")->capture_default_str();
  gen->add_option("--dim", o->dim, "lattice dimension")->capture_default_str();
  gen->add_option("--side", o->side, "lattice side")->capture_default_str();
  gen->add_option("--length", o->length, "path edge count")->capture_default_str();
  gen->add_option("--appendix-at", o->appendix_at, "attach a pendant path at this vertex");
  gen->add_option("--appendix-length", o->appendix_length, "pendant path edge count");
  gen->add_option("--out", o->out, "graph output file (default stdout)");
  gen->add_option("--embedding-out", o->embedding_out, "embedding output file");

  auto add_io = [&](CLI::App* c, bool need_graph) {
    if (need_graph) c->add_option("--graph", o->graph_path, "graph TSV file")->required();
    c->add_option("--format", o->format, "csv or json")->capture_default_str();
    c->add_option("--out", o->out, "output file (default stdout)");
    c->add_option("--threads", o->threads, "worker threads")->capture_default_str();
  };

  CLI::App* traffic = app.add_subcommand("traffic", "Edge and vertex traffic rates");
  add_io(traffic, true);
  traffic->add_option("--demand", o->demand_path, "demand matrix CSV (default uniform)");

  CLI::App* curv = app.add_subcommand("curvature", "Vertex Gauss curvature of a triangulation");
  add_io(curv, true);
  curv->add_option("--embedding", o->embedding_path, "embedding file")->required();
  curv->add_option("--vertex", o->vertex, "single vertex (default: all interior)");

  CLI::App* inertia = app.add_subcommand("inertia", "Vertex inertia and centroid");
  add_io(inertia, true);
  inertia->add_option("--demand", o->demand_path, "demand matrix CSV (default uniform)");
  inertia->add_option("--p", o->p, "distance exponent")->capture_default_str();

  CLI::App* delta = app.add_subcommand("delta", "Inscribed-triangle Gromov delta");
  add_io(delta, true);
  delta->add_option("--budget", o->budget, "triple budget")->capture_default_str();
  delta->add_option("--seed", o->seed, "sampling seed")->capture_default_str();

  CLI::App* cont = app.add_subcommand("continuum", "Model-space congestion quantities");
  add_io(cont, false);
  cont->add_option("--quantity", o->quantity, "volume, exit, chord, mu, lambda, mc or inertia")
      ->capture_default_str();
  cont->add_option("--curvature", o->curvature, "negative, zero or positive")->capture_default_str();
  cont->add_option("--dim", o->dim, "space dimension")->capture_default_str();
  cont->add_option("--k", o->k, "curvature scale")->capture_default_str();
  cont->add_option("--R", o->R, "ambient ball radius")->capture_default_str();
  cont->add_option("--a", o->a, "point radius")->capture_default_str();
  cont->add_option("--theta", o->theta, "angle from the outward radial direction")->capture_default_str();
  cont->add_option("--rho", o->rho, "small-ball center offset")->capture_default_str();
  cont->add_option("--r", o->r, "small-ball radius")->capture_default_str();
  cont->add_option("--p", o->p, "inertia exponent")->capture_default_str();
  cont->add_option("--samples", o->samples, "Monte Carlo sample pairs")->capture_default_str();
  cont->add_option("--seed", o->seed, "Monte Carlo seed")->capture_default_str();
  cont->add_option("--tol", o->tol, "quadrature relative tolerance")->capture_default_str();
  cont->add_flag("--full-sphere", o->full_sphere, "use the complete sphere (positive curvature)");

  CLI::App* scaling = app.add_subcommand("scaling", "Log-log congestion scaling sweeps");
  add_io(scaling, false);
  scaling->add_option("--family", o->family, "ring, lattice, path or continuum")->capture_default_str();
  scaling->add_option("--valence", o->valence, "ring valence")->capture_default_str();
  scaling->add_option("--dim", o->dim, "lattice / space dimension")->capture_default_str();
  scaling->add_option("--sizes", o->sizes, "discrete sweep sizes")->delimiter(',');
  scaling->add_option("--curvature", o->curvature, "negative, zero or positive")->capture_default_str();
  scaling->add_option("--k", o->k, "curvature scale")->capture_default_str();
  scaling->add_option("--radii", o->radii, "continuum ambient radii")->delimiter(',');
  scaling->add_option("--ball-radius", o->ball_radius, "probe ball radius")->capture_default_str();
  scaling->add_option("--tol", o->tol, "quadrature relative tolerance")->capture_default_str();
  scaling->add_option("--points-out", o->points_out, "sweep points CSV file");

  CLI::App* report = app.add_subcommand("report", "Congestion/geometry profile of a graph");
  add_io(report, false);
  report->add_option("--graph", o->graph_path, "graph TSV file (default: built-in valence sweep)");
  report->add_option("--embedding", o->embedding_path, "embedding file");
  report->add_option("--budget", o->budget, "delta triple budget")->capture_default_str();
  report->add_option("--seed", o->seed, "delta sampling seed")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::string header = join_args(args);
    if (gen->parsed()) return cmd_generate(*o, header);
    if (traffic->parsed()) return cmd_traffic(*o, header);
    if (curv->parsed()) return cmd_curvature(*o, header);
    if (inertia->parsed()) return cmd_inertia(*o, header);
    if (delta->parsed()) return cmd_delta(*o, header);
    if (cont->parsed()) return cmd_continuum(*o, header);
    if (scaling->parsed()) return cmd_scaling(*o, header);
    if (report->parsed()) return cmd_report(*o, header);
    throw UsageError("no subcommand given");
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace congest
