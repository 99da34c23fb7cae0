#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gp/checks.hpp"
#include "gp/errors.hpp"
#include "gp/estimates.hpp"
#include "gp/generators.hpp"
#include "gp/graph.hpp"
#include "gp/green.hpp"
#include "gp/io.hpp"
#include "gp/operators.hpp"
#include "gp/report.hpp"
#include "gp/solvers.hpp"
#include "gp/spectral.hpp"
#include "gp/tolerances.hpp"

using namespace gp;

namespace {

struct Inputs {
  std::string graph_file;
  std::string family;
  int param = -1;
  std::string q_spec = "zero";
  std::string f_file;
  std::string bc_file;
  std::string interior_file;
  std::string radii_csv;
  std::string probes_csv;
  std::string mode;
  std::uint64_t seed = 42;
  std::string out_file;
  std::string csv_file;
  Tolerances tol;
  SolveOptions solve;
};

WeightedGraph make_family(const std::string& name, int param) {
  if (name == "path") return path_graph(param);
  if (name == "cycle") return cycle_graph(param);
  if (name == "star") return star_graph(param);
  if (name == "lattice1") return lattice_ball(1, param);
  if (name == "lattice2") return lattice_ball(2, param);
  if (name == "lattice3") return lattice_ball(3, param);
  if (name == "tree3") return regular_tree_ball(3, param);
  throw input_error("unknown generator family '" + name +
                    "' (expected path, cycle, star, lattice1, lattice2, lattice3, tree3)");
}

std::vector<int> parse_radii(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string piece = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      throw input_error("bad radius '" + piece + "' in --radii");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw input_error("--radii is empty");
  return out;
}

std::vector<std::pair<VertexId, VertexId>> parse_probes(const std::string& csv) {
  std::vector<std::pair<VertexId, VertexId>> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string piece = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t colon = piece.find(':');
    if (colon == std::string::npos)
      throw input_error("bad probe '" + piece + "' in --probes (expected x:y)");
    try {
      std::size_t ua = 0, ub = 0;
      long long x = std::stoll(piece.substr(0, colon), &ua);
      long long y = std::stoll(piece.substr(colon + 1), &ub);
      if (ua != colon || ub != piece.size() - colon - 1) throw std::invalid_argument(piece);
      out.emplace_back(x, y);
    } catch (const std::exception&) {
      throw input_error("bad probe '" + piece + "' in --probes (expected x:y)");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw input_error("--probes is empty");
  return out;
}

// The effective generator parameter: explicit --param, or for exhaustion runs
// the largest requested radius (the host then covers every ball in the list).
int effective_param(const Inputs& in, const std::vector<int>* radii) {
  if (in.param >= 0) return in.param;
  if (radii && !radii->empty()) return *std::max_element(radii->begin(), radii->end());
  throw input_error("--generator needs --param");
}

WeightedGraph resolve_graph(const Inputs& in, const std::vector<int>* radii = nullptr) {
  bool file = !in.graph_file.empty();
  bool family = !in.family.empty();
  if (file == family) throw input_error("provide exactly one of --graph or --generator");
  if (file) return load_graph(in.graph_file);
  return make_family(in.family, effective_param(in, radii));
}

GraphFunction resolve_q(const std::string& spec, const WeightedGraph& g) {
  if (spec == "zero") return GraphFunction::zero(g.vertices());
  if (spec.rfind("const:", 0) == 0) {
    std::string number = spec.substr(6);
    char* end = nullptr;
    double value = std::strtod(number.c_str(), &end);
    if (end == number.c_str() || *end != '\0')
      throw input_error("bad potential value in '" + spec + "'");
    return GraphFunction::constant(g.vertices(), value);
  }
  return load_function(spec);
}

// Interior selection when no --interior file is given: the cover annotation
// (every vertex with a complete neighborhood) when present, otherwise the
// non-leaf vertices. Both rules need a nonempty boundary to make sense.
Region resolve_region(const Inputs& in, const WeightedGraph& g) {
  if (!in.interior_file.empty())
    return region_from_interior(g, load_vertex_list(in.interior_file));
  if (g.cover()) return ball(g, g.cover()->center, g.cover()->complete_radius);
  std::vector<VertexId> interior;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (g.neighbors(i).size() > 1) interior.push_back(g.id_of(i));
  if (interior.empty() || static_cast<int>(interior.size()) == g.vertex_count())
    throw input_error("graph has no natural interior; provide --interior");
  return region_from_interior(g, interior);
}

std::string echo_graph(const Inputs& in, const std::vector<int>* radii = nullptr) {
  if (!in.graph_file.empty()) return " --graph " + in.graph_file;
  return " --generator " + in.family + " --param " + std::to_string(effective_param(in, radii));
}

void add_file_digests(ExperimentReport& r, const Inputs& in) {
  if (!in.graph_file.empty()) r.inputs.emplace_back("graph", digest_file(in.graph_file));
  if (in.q_spec != "zero" && in.q_spec.rfind("const:", 0) != 0)
    r.inputs.emplace_back("q", digest_file(in.q_spec));
  if (!in.f_file.empty()) r.inputs.emplace_back("f", digest_file(in.f_file));
  if (!in.bc_file.empty()) r.inputs.emplace_back("bc", digest_file(in.bc_file));
  if (!in.interior_file.empty())
    r.inputs.emplace_back("interior", digest_file(in.interior_file));
}

void append_tolerances(ExperimentReport& r, const Tolerances& t) {
  r.note("tol.identity", format_double(t.identity));
  r.note("tol.residual", format_double(t.residual));
  r.note("tol.pair-residual", format_double(t.pair_residual));
  r.note("tol.gradient", format_double(t.gradient_slack));
  r.note("tol.harnack", format_double(t.harnack_slack));
  r.note("tol.monotone", format_double(t.monotone));
  r.note("tol.green-agree", format_double(t.green_agree));
  r.note("tol.kernel-symmetry", format_double(t.kernel_symmetry));
  r.note("tol.eigen-bound", format_double(t.eigen_bound));
  r.note("tol.representation", format_double(t.representation));
  r.note("tol.l2", format_double(t.l2_bound));
  r.note("tol.series-increment", format_double(t.series_increment));
  r.note("tol.converge-gap", format_double(t.converge_gap));
  r.note("tol.converge-ratio", format_double(t.converge_ratio));
}

using Clock = std::chrono::steady_clock;

// Writes the report and maps its verdict to the exit code. The command echo
// deliberately omits --out/--csv: output locations are not inputs, and two
// runs into different files must still produce identical reports.
int finish(const Inputs& in, ExperimentReport& r, const std::string& echo,
           Clock::time_point start, bool report_to_stdout_only = false) {
  r.command = echo;
  append_tolerances(r, in.tol);
  r.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  std::string json = report_json(r);
  if (!report_to_stdout_only && !in.out_file.empty())
    save_text(in.out_file, json);
  else
    std::cout << json;
  if (!in.csv_file.empty()) save_text(in.csv_file, report_csv(r));
  return r.pass() ? 0 : 1;
}

int run_validate(const Inputs& in, Clock::time_point start) {
  if (in.graph_file.empty()) throw input_error("validate needs --graph");
  WeightedGraph g = load_graph(in.graph_file);
  ValidationReport v = validate(g);

  ExperimentReport r;
  add_file_digests(r, in);
  r.note("vertices", std::to_string(g.vertex_count()));
  r.note("edges", std::to_string(g.edge_count()));
  for (const Violation& viol : v.violations) r.note("violation", viol.kind + ": " + viol.detail);
  double count = static_cast<double>(v.violations.size());
  r.check("well-formed", count, 0.0, -count);
  return finish(in, r, "validate --graph " + in.graph_file, start);
}

int run_generate(const Inputs& in) {
  if (in.family.empty()) throw input_error("generate needs --family");
  if (in.param < 0) throw input_error("generate needs --param");
  WeightedGraph g = make_family(in.family, in.param);
  std::string text =
      "# " + in.family + " " + std::to_string(in.param) + "\n" + graph_text(g);
  if (!in.out_file.empty())
    save_text(in.out_file, text);
  else
    std::cout << text;
  return 0;
}

int run_lambda1(const Inputs& in, Clock::time_point start) {
  WeightedGraph g = resolve_graph(in);
  GraphFunction q = resolve_q(in.q_spec, g);
  Region reg = resolve_region(in, g);
  Lambda1Result lr = lambda1(g, reg, q, in.solve, in.tol.residual);

  ExperimentReport r;
  add_file_digests(r, in);
  r.note("lambda", format_double(lr.lambda));
  r.note("method", lr.method);
  r.note("iterations", std::to_string(lr.iterations));
  r.note("interior-size", std::to_string(reg.interior_size()));
  r.check("eigenpair-residual", lr.residual, lr.residual_limit,
          lr.residual_limit - lr.residual);
  r.check("eigenfunction-positive", lr.positive ? 1.0 : 0.0, 1.0, lr.positive ? 0.0 : -1.0);

  std::string echo = "lambda1" + echo_graph(in) + " --q " + in.q_spec;
  if (!in.interior_file.empty()) echo += " --interior " + in.interior_file;
  return finish(in, r, echo, start);
}

int run_solve(const Inputs& in, Clock::time_point start) {
  WeightedGraph g = resolve_graph(in);
  GraphFunction q = resolve_q(in.q_spec, g);
  Region reg = resolve_region(in, g);
  GraphFunction f =
      in.f_file.empty() ? GraphFunction::zero(reg.interior) : load_function(in.f_file);
  GraphFunction bc =
      in.bc_file.empty() ? GraphFunction::zero(reg.boundary) : load_function(in.bc_file);

  GraphFunction u = dirichlet_solve(g, reg, q, f, bc, in.solve, in.tol.residual);
  if (!in.out_file.empty()) save_function(in.out_file, u);

  double worst = 0.0;
  double fs = 0.0, bs = 0.0;
  for (VertexId v : reg.interior) fs = std::max(fs, std::abs(f.at(v)));
  for (VertexId v : reg.boundary) bs = std::max(bs, std::abs(bc.at(v)));
  double scale = fs + bs + 1.0;
  for (VertexId v : reg.interior)
    worst = std::max(worst, std::abs(schrodinger(g, q, u, v) - f.at(v)));

  ExperimentReport r;
  add_file_digests(r, in);
  r.note("interior-size", std::to_string(reg.interior_size()));
  double u_min = u.at(reg.interior.front()), u_max = u_min;
  for (VertexId v : reg.interior) {
    u_min = std::min(u_min, u.at(v));
    u_max = std::max(u_max, u.at(v));
  }
  r.note("u-min", format_double(u_min));
  r.note("u-max", format_double(u_max));
  double limit = in.tol.residual * scale;
  r.check("interior-residual", worst, limit, limit - worst);

  std::string echo = "solve" + echo_graph(in) + " --q " + in.q_spec;
  if (!in.f_file.empty()) echo += " --f " + in.f_file;
  if (!in.bc_file.empty()) echo += " --bc " + in.bc_file;
  if (!in.interior_file.empty()) echo += " --interior " + in.interior_file;
  // --out holds the solution function here, so the report always goes to
  // stdout and --out is excluded from report routing.
  return finish(in, r, echo, start, /*report_to_stdout_only=*/true);
}

int run_harnack(const Inputs& in, Clock::time_point start) {
  WeightedGraph g = resolve_graph(in);
  GraphFunction q = resolve_q(in.q_spec, g);
  if (in.interior_file.empty())
    throw input_error("harnack needs --interior (the vertex set S)");
  std::vector<VertexId> s = load_vertex_list(in.interior_file);

  ExperimentReport r;
  add_file_digests(r, in);
  r.note("set-size", std::to_string(s.size()));

  bool want_uniform = in.mode.empty() || in.mode == "both" || in.mode == "uniform";
  bool want_sharp = in.mode.empty() || in.mode == "both" || in.mode == "sharp";
  double cu = 0.0, cs = 0.0;
  if (want_uniform) {
    cu = harnack_constant(g, q, s, HarnackMode::uniform);
    r.note("uniform-constant", format_double(cu));
  }
  if (want_sharp) {
    cs = harnack_constant(g, q, s, HarnackMode::sharp);
    r.note("sharp-constant", format_double(cs));
  }
  double floor_value = want_uniform && want_sharp ? std::min(cu, cs)
                       : want_uniform            ? cu
                                                 : cs;
  r.check("constant-at-least-one", floor_value, 1.0, floor_value - 1.0);
  if (want_uniform && want_sharp) {
    double gap = (cu - cs) / (1.0 + cu);
    r.check("sharp-below-uniform", gap, 0.0, gap);
  }

  std::string echo = "harnack" + echo_graph(in) + " --q " + in.q_spec + " --interior " +
                     in.interior_file;
  if (!in.mode.empty()) echo += " --mode " + in.mode;
  return finish(in, r, echo, start);
}

void probe_series(ExperimentReport& r, const GreenExhaustion& ex) {
  for (const GreenExhaustionProbe& p : ex.probes) {
    SeriesRecord s;
    s.name = "g" + std::to_string(p.x) + "-" + std::to_string(p.y);
    s.columns = {"radius", "value", "gap"};
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      double gap = i ? p.values[i] - p.values[i - 1] : 0.0;
      s.rows.push_back({static_cast<double>(ex.radii[i]), p.values[i], gap});
    }
    r.series.push_back(std::move(s));
    std::string tag = std::to_string(p.x) + ":" + std::to_string(p.y);
    r.note("classification " + tag, p.classification);
    if (p.classification == "GROWING") {
      r.note("growth-fit " + tag, p.fit.better);
      r.note("growth-slope " + tag,
             format_double(p.fit.better == "log" ? p.fit.log_slope : p.fit.linear_slope));
    }
  }
}

int run_green(const Inputs& in, Clock::time_point start) {
  std::string mode = in.mode;
  if (mode.empty()) mode = in.radii_csv.empty() ? "direct" : "exhaustion";

  if (mode == "exhaustion") {
    if (in.radii_csv.empty()) throw input_error("green --mode exhaustion needs --radii");
    if (in.probes_csv.empty()) throw input_error("green --mode exhaustion needs --probes");
    std::vector<int> radii = parse_radii(in.radii_csv);
    std::vector<std::pair<VertexId, VertexId>> probes = parse_probes(in.probes_csv);
    WeightedGraph host = resolve_graph(in, &radii);
    VertexId center = host.cover() ? host.cover()->center : host.vertices().front();

    GreenExhaustion ex = green_exhaustion(host, center, radii, probes, in.solve, in.tol);

    ExperimentReport r;
    add_file_digests(r, in);
    r.note("center", std::to_string(center));
    r.note("classification", ex.classification);
    probe_series(r, ex);
    r.check("monotone", ex.monotone ? 1.0 : 0.0, 1.0, ex.monotone ? 0.0 : -1.0);

    // The spectral lower bound, evaluated on the largest ball.
    Region last = exhaustion_region(host, center, radii.back());
    EigenBoundReport eb = eigen_bound_check(host, last, in.solve, in.tol);
    r.note("lambda-last-radius", format_double(eb.lambda));
    r.note("max-row-sum-last-radius", format_double(eb.max_row_sum));
    r.check("eigen-bound-product", eb.product, eb.product_floor, eb.product - eb.product_floor);
    r.check("eigen-bound-representation", eb.representation_residual, eb.representation_limit,
            eb.representation_limit - eb.representation_residual);

    std::string echo = "green" + echo_graph(in, &radii) + " --mode exhaustion --radii " +
                       in.radii_csv + " --probes " + in.probes_csv;
    return finish(in, r, echo, start);
  }

  if (mode != "direct" && mode != "series")
    throw input_error("green --mode must be series, direct, or exhaustion");

  WeightedGraph g = resolve_graph(in);
  Region reg = resolve_region(in, g);
  GreenMatrix direct = green_direct(g, reg, in.solve);
  int n = static_cast<int>(reg.interior.size());

  ExperimentReport r;
  add_file_digests(r, in);
  r.note("interior-size", std::to_string(n));

  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double kij = direct.kernel_at(i, j);
      double kji = direct.kernel_at(j, i);
      asym = std::max(asym, std::abs(kij - kji) / (1.0 + std::abs(kij)));
    }
  TransitionMatrix tm = transition(g, reg);
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  double ident =
      ((eye - Eigen::MatrixXd(tm.interior)) * direct.values - eye).cwiseAbs().maxCoeff();
  r.check("kernel-symmetry", asym, in.tol.kernel_symmetry, in.tol.kernel_symmetry - asym);
  r.check("defining-identity", ident, in.tol.residual, in.tol.residual - ident);
  double min_entry = direct.values.minCoeff();
  r.check("positivity", min_entry, 0.0, min_entry);

  if (mode == "series") {
    GreenSeries series = green_series(g, reg, 100000, in.tol.series_increment);
    r.note("series-terms", std::to_string(series.terms));
    r.note("series-last-increment", format_double(series.last_increment));
    r.check("series-converged", series.converged ? 1.0 : 0.0, 1.0,
            series.converged ? 0.0 : -1.0);
    double gmax = direct.values.cwiseAbs().maxCoeff();
    double diff = (series.green.values - direct.values).cwiseAbs().maxCoeff() / (1.0 + gmax);
    r.check("series-direct-agreement", diff, in.tol.green_agree, in.tol.green_agree - diff);
  }

  if (!in.probes_csv.empty()) {
    std::vector<std::pair<VertexId, VertexId>> probes = parse_probes(in.probes_csv);
    SeriesRecord s;
    s.name = "probes";
    s.columns = {"x", "y", "value", "kernel"};
    for (const auto& [x, y] : probes) {
      int i = reg.interior_index(x);
      int j = reg.interior_index(y);
      if (i < 0 || j < 0)
        throw input_error("probe " + std::to_string(x) + ":" + std::to_string(y) +
                          " is not an interior pair");
      s.rows.push_back({static_cast<double>(x), static_cast<double>(y), direct.values(i, j),
                        direct.kernel_at(i, j)});
    }
    r.series.push_back(std::move(s));
  }

  std::string echo = "green" + echo_graph(in) + " --mode " + mode;
  if (!in.interior_file.empty()) echo += " --interior " + in.interior_file;
  if (!in.probes_csv.empty()) echo += " --probes " + in.probes_csv;
  return finish(in, r, echo, start);
}

int run_check_all(const Inputs& in, Clock::time_point start) {
  checks::SuiteOptions o;
  o.seed = in.seed;
  o.tol = in.tol;
  o.solve = in.solve;
  ExperimentReport r = checks::run_all(o);
  return finish(in, r, "check-all --seed " + std::to_string(in.seed), start);
}

void add_graph_flags(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--graph", in.graph_file, "Graph file (tab separated edge list)");
  cmd->add_option("--generator", in.family,
                  "Built-in family: path, cycle, star, lattice1, lattice2, lattice3, tree3");
  cmd->add_option("--param", in.param, "Size parameter for --generator");
}

void add_report_flags(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--out", in.out_file, "Write the JSON report here instead of stdout");
  cmd->add_option("--csv", in.csv_file, "Also write per-radius series tables as CSV");
}

void add_tol_flags(CLI::App* cmd, Tolerances& t) {
  cmd->add_option("--tol-identity", t.identity, "Pointwise identity checks");
  cmd->add_option("--tol-residual", t.residual, "Linear and eigenpair residual contracts");
  cmd->add_option("--tol-pair-residual", t.pair_residual, "Solution pair validation");
  cmd->add_option("--tol-gradient", t.gradient_slack, "Gradient estimate slack");
  cmd->add_option("--tol-harnack", t.harnack_slack, "Harnack comparison slack");
  cmd->add_option("--tol-monotone", t.monotone, "Exhaustion monotonicity slack");
  cmd->add_option("--tol-green-agree", t.green_agree, "Series vs direct agreement");
  cmd->add_option("--tol-kernel-symmetry", t.kernel_symmetry, "Green kernel symmetry");
  cmd->add_option("--tol-eigen-bound", t.eigen_bound, "Eigenvalue-Green product floor");
  cmd->add_option("--tol-representation", t.representation, "Eigenfunction representation");
  cmd->add_option("--tol-l2", t.l2_bound, "Source bound slack (relative)");
  cmd->add_option("--tol-series-increment", t.series_increment, "Series stop threshold");
  cmd->add_option("--tol-converge-gap", t.converge_gap, "Convergence: last-gap threshold");
  cmd->add_option("--tol-converge-ratio", t.converge_ratio, "Convergence: gap decay ratio");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Potential theory on weighted graphs: Dirichlet eigenvalues, Green functions,\n"
      "Schrodinger solvers, and Harnack constants, with verifiable reports."};
  app.require_subcommand(1);
  Inputs in;

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a graph file for defects");
  validate_cmd->add_option("--graph", in.graph_file, "Graph file to validate")->required();
  add_report_flags(validate_cmd, in);

  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Emit a built-in graph family as a graph file");
  generate_cmd
      ->add_option("--family", in.family,
                   "path, cycle, star, lattice1, lattice2, lattice3, tree3")
      ->required();
  generate_cmd->add_option("--param", in.param, "Family size parameter")->required();
  generate_cmd->add_option("--out", in.out_file, "Write the graph here instead of stdout");

  CLI::App* lambda_cmd =
      app.add_subcommand("lambda1", "Smallest Dirichlet eigenvalue of a region");
  add_graph_flags(lambda_cmd, in);
  lambda_cmd->add_option("--q", in.q_spec, "Potential: FILE, zero, or const:VALUE");
  lambda_cmd->add_option("--interior", in.interior_file, "Interior vertex list file");
  add_report_flags(lambda_cmd, in);
  add_tol_flags(lambda_cmd, in.tol);

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Dirichlet problem (-lap + Q)u = f with boundary data");
  add_graph_flags(solve_cmd, in);
  solve_cmd->add_option("--q", in.q_spec, "Potential: FILE, zero, or const:VALUE");
  solve_cmd->add_option("--f", in.f_file, "Source term function file (default zero)");
  solve_cmd->add_option("--bc", in.bc_file, "Boundary values function file (default zero)");
  solve_cmd->add_option("--interior", in.interior_file, "Interior vertex list file");
  solve_cmd->add_option("--out", in.out_file,
                        "Write the solution as a function file (report goes to stdout)");
  solve_cmd->add_option("--csv", in.csv_file, "Also write series tables as CSV");
  add_tol_flags(solve_cmd, in.tol);

  CLI::App* harnack_cmd =
      app.add_subcommand("harnack", "Harnack constant C(S) for a vertex set");
  add_graph_flags(harnack_cmd, in);
  harnack_cmd->add_option("--q", in.q_spec, "Potential: FILE, zero, or const:VALUE");
  harnack_cmd->add_option("--interior", in.interior_file, "Vertex set S (list file)")
      ->required();
  harnack_cmd->add_option("--mode", in.mode, "uniform, sharp, or both (default both)")
      ->check(CLI::IsMember({"uniform", "sharp", "both"}));
  add_report_flags(harnack_cmd, in);
  add_tol_flags(harnack_cmd, in.tol);

  CLI::App* green_cmd = app.add_subcommand("green", "Green function of a region");
  add_graph_flags(green_cmd, in);
  green_cmd->add_option("--mode", in.mode, "series, direct, or exhaustion (default direct)")
      ->check(CLI::IsMember({"series", "direct", "exhaustion"}));
  green_cmd->add_option("--interior", in.interior_file, "Interior vertex list file");
  green_cmd->add_option("--radii", in.radii_csv, "Exhaustion radii, e.g. 2,4,8");
  green_cmd->add_option("--probes", in.probes_csv, "Probe pairs, e.g. 0:0,0:1");
  add_report_flags(green_cmd, in);
  add_tol_flags(green_cmd, in.tol);

  CLI::App* check_cmd =
      app.add_subcommand("check-all", "Run the full seeded property suite");
  check_cmd->add_option("--seed", in.seed, "Base seed for every sampled instance");
  add_report_flags(check_cmd, in);
  add_tol_flags(check_cmd, in.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto start = Clock::now();
  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(in, start);
    if (app.got_subcommand(generate_cmd)) return run_generate(in);
    if (app.got_subcommand(lambda_cmd)) return run_lambda1(in, start);
    if (app.got_subcommand(solve_cmd)) return run_solve(in, start);
    if (app.got_subcommand(harnack_cmd)) return run_harnack(in, start);
    if (app.got_subcommand(green_cmd)) return run_green(in, start);
    if (app.got_subcommand(check_cmd)) return run_check_all(in, start);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
