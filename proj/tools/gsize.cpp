// gsize: command line front end for graph size estimation.

#include <gsize/gsize.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace gsize;

namespace {

constexpr int exit_config = 2;
constexpr int exit_data = 3;

struct GraphArgs {
  std::string path, generator;
  std::uint64_t seed = 1;
  bool lcc = false;

  void add(CLI::App* app) {
    app->add_option("--graph", path, "edge list file");
    app->add_option("--gen", generator, "generator spec, e.g. er:1000:0.02");
    app->add_option("--graph-seed", seed, "seed for --gen");
    app->add_flag("--lcc", lcc, "restrict to the largest connected component");
  }
  Graph load(LoadReport* report = nullptr) const { return load_graph({path, generator, seed, lcc}, report); }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write '" + path + "'");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open '" + path + "'");
  return in;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void cmd_graphstat(const GraphArgs& ga) {
  LoadReport report;
  const auto g = ga.load(&report);
  if (!g.connected())
    std::cerr << "warning: graph has " << g.component_count()
              << " connected components; random walks need a connected graph (use --lcc)\n";
  json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  j["components"] = g.component_count();
  j["connected"] = g.connected();
  j["digest"] = format_hex64(g.digest());
  if (g.node_count() >= 2) {
    const auto st = exact_stats(g);
    j["mean_degree"] = st.mean_degree;
    j["mean_square_degree"] = st.mean_square_degree;
    j["density"] = st.density;
    j["size_identity"] = g.edge_count() > 0 ? number_or_null(size_identity(g)) : json(nullptr);
  }
  if (!ga.path.empty()) {
    j["self_loops_dropped"] = report.self_loops;
    j["duplicate_edges_dropped"] = report.duplicate_edges;
  }
  std::cout << j.dump(2) << '\n';
}

void cmd_gen(const std::string& spec, std::uint64_t seed, const std::string& out) {
  const auto g = gen::from_spec(spec, seed);
  if (out.empty()) {
    write_edge_list(std::cout, g);
  } else {
    auto f = open_out(out);
    write_edge_list(f, g);
  }
}

struct SampleArgs {
  std::string method = "uis", weight = "degree", out;
  std::size_t n = 0, walkers = 1;
  std::uint64_t seed = 1;
  std::optional<external_id> start;
};

void cmd_sample(const GraphArgs& ga, const SampleArgs& a) {
  const auto g = ga.load();
  const auto method = parse_method(a.method);
  if (!method) throw config_error("unknown sampling method '" + a.method + "'");
  Sample s;
  if (*method == SamplingMethod::rw && a.start) {
    const auto v = g.index_of(*a.start);
    if (!v) throw config_error("start node " + std::to_string(*a.start) + " is not in the graph");
    s = sample_rw(g, a.n, a.seed, *v);
  } else {
    s = draw_sample(g, {*method, a.weight, a.walkers}, a.n, a.seed);
  }
  if (a.out.empty()) {
    write_sample(std::cout, s, g);
  } else {
    auto f = open_out(a.out);
    write_sample(f, s, g);
  }
}

struct EstimateArgs {
  std::string sample, estimator = "node-uis", correction = "none", a_mode = "set", variant;
  std::size_t theta = 1, m = 0;
  std::uint64_t seed = 0;
};

void cmd_estimate(const EstimateArgs& a) {
  EstimatorSpec spec;
  spec.kind = parse_estimator_kind(a.estimator);
  spec.correction = parse_correction(a.correction);
  const auto mode = parse_aux_mode(a.a_mode);
  if (!mode) throw config_error("--a-mode must be set or multiset");
  spec.a_mode = *mode;
  if (!a.variant.empty()) {
    spec.variant = parse_star_variant(a.variant);
    if (!spec.variant) throw config_error("--variant must be uis or wis");
  }
  spec.theta = a.theta;
  spec.m = a.m;

  auto in = open_in(a.sample);
  const auto file = read_sample(in);
  const Sample& s = file.sample;
  if (spec.kind == EstimatorKind::star)
    std::cerr << "note: star sampling is experimental and known to be inaccurate\n";
  const auto result = run_estimator(s, spec, a.seed);

  json params;
  switch (spec.correction) {
    case Correction::thin:
    case Correction::thin_shifted: params["theta"] = spec.theta; break;
    case Correction::margin: params["m"] = spec.m; break;
    default: break;
  }
  if (spec.kind == EstimatorKind::ind_b) params["a_mode"] = std::string(to_string(spec.a_mode));
  if (spec.kind == EstimatorKind::capture) params["seed"] = a.seed;
  if (spec.kind == EstimatorKind::star) {
    const auto v = spec.variant.value_or(s.meta.method == SamplingMethod::uis ? StarVariant::uis : StarVariant::wis);
    params["variant"] = v == StarVariant::uis ? "uis" : "wis";
  }
  if (spec.kind == EstimatorKind::mle_approx || spec.kind == EstimatorKind::mle_exact) params["n_unique"] = count_unique(s);

  json j;
  j["estimator"] = a.estimator;
  j["correction"] = a.correction;
  j["params"] = params.is_null() ? json::object() : params;
  j["n"] = s.size();
  j["numerator"] = result.ratio ? number_or_null(result.ratio->numerator) : json(nullptr);
  j["denominator"] = result.ratio ? number_or_null(result.ratio->denominator) : json(nullptr);
  if (result.outcome)
    j["estimate"] = result.outcome.value();
  else
    j["estimate"] = "no_collisions";
  std::cout << j.dump() << '\n';
}

struct ExperimentArgs {
  std::string plan, csv, svg;
  std::vector<std::string> settings;
};

void cmd_experiment(const ExperimentArgs& a) {
  ExperimentPlan plan;
  if (!a.plan.empty()) {
    auto in = open_in(a.plan);
    plan = parse_plan(in);
  }
  for (const auto& s : a.settings) apply_setting(plan, s);
  const auto rows = run_experiment(plan);
  if (a.csv.empty()) {
    emit_csv(std::cout, rows);
  } else {
    auto f = open_out(a.csv);
    emit_csv(f, rows);
  }
  if (!a.svg.empty()) {
    auto f = open_out(a.svg);
    emit_svg_band(f, rows, {std::string(to_string(plan.sweep)), plan.normalize ? "N̂/N" : "N̂", plan.normalize});
  }
}

void cmd_plot(const std::string& csv, const std::string& out, const std::string& x_label, bool raw) {
  auto in = open_in(csv);
  const auto rows = read_csv(in);
  const SvgOptions opt{x_label, raw ? "N̂" : "N̂/N", !raw};
  if (out.empty()) {
    emit_svg_band(std::cout, rows, opt);
  } else {
    auto f = open_out(out);
    emit_svg_band(f, rows, opt);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estimate the number of nodes of a graph from node samples"};
  app.require_subcommand(1);

  GraphArgs stat_graph;
  auto* graphstat = app.add_subcommand("graphstat", "exact statistics of a graph");
  stat_graph.add(graphstat);

  std::string gen_spec, gen_out;
  std::uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic graph as an edge list");
  gen_cmd->add_option("spec", gen_spec, "er:N:P | ba:N:M | ring:C:S | starcliques:C:S | grid:W:H | complete:N | star:L | path:N")
      ->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("-o,--out", gen_out, "output file (default stdout)");

  GraphArgs sample_graph;
  SampleArgs sa;
  auto* sample_cmd = app.add_subcommand("sample", "draw a node sample");
  sample_graph.add(sample_cmd);
  sample_cmd->add_option("--method", sa.method, "UIS | WIS | RW | RW_MULTI");
  sample_cmd->add_option("-n", sa.n, "sample length")->required();
  sample_cmd->add_option("--seed", sa.seed, "sampler seed");
  sample_cmd->add_option("--weight", sa.weight, "WIS weight rule: unit | degree");
  sample_cmd->add_option("--walkers", sa.walkers, "number of walkers for RW_MULTI");
  sample_cmd->add_option("--start", sa.start, "start node id for RW");
  sample_cmd->add_option("-o,--out", sa.out, "output file (default stdout)");

  EstimateArgs ea;
  auto* estimate = app.add_subcommand("estimate", "estimate N from a sample file");
  estimate->add_option("sample", ea.sample, "sample file")->required();
  estimate->add_option("-e,--estimator", ea.estimator, "node-uis | node-wis | capture | mle-approx | mle-exact | ind-a | ind-b | star (experimental)");
  estimate->add_option("-c,--correction", ea.correction, "none | thin | thin-shifted | margin | cross-walker");
  estimate->add_option("--theta", ea.theta, "thinning step");
  estimate->add_option("-m,--margin", ea.m, "margin");
  estimate->add_option("--a-mode", ea.a_mode, "auxiliary set mode: set | multiset");
  estimate->add_option("--variant", ea.variant, "star variant: uis | wis");
  estimate->add_option("--seed", ea.seed, "seed for the capture-recapture split");

  ExperimentArgs xa;
  auto* experiment = app.add_subcommand("experiment", "repeated trials with percentile summaries");
  experiment->add_option("--plan", xa.plan, "plan file (key = value lines)");
  experiment->add_option("--set", xa.settings, "override one plan key, key=value");
  experiment->add_option("--csv", xa.csv, "CSV output (default stdout)");
  experiment->add_option("--svg", xa.svg, "SVG band plot output");

  std::string plot_csv, plot_out, plot_label = "parameter";
  bool plot_raw = false;
  auto* plot = app.add_subcommand("plot", "render a summary CSV as an SVG band plot");
  plot->add_option("csv", plot_csv, "summary CSV")->required();
  plot->add_option("-o,--out", plot_out, "output file (default stdout)");
  plot->add_option("--x-label", plot_label, "x axis label");
  plot->add_flag("--raw", plot_raw, "values are raw estimates, not N̂/N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  try {
    if (*graphstat) cmd_graphstat(stat_graph);
    if (*gen_cmd) cmd_gen(gen_spec, gen_seed, gen_out);
    if (*sample_cmd) cmd_sample(sample_graph, sa);
    if (*estimate) cmd_estimate(ea);
    if (*experiment) cmd_experiment(xa);
    if (*plot) cmd_plot(plot_csv, plot_out, plot_label, plot_raw);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const data_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
