#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "ind_estimators.hpp"
#include "node_estimators.hpp"
#include "rw_correction.hpp"
#include "sample.hpp"
#include "sample_io.hpp"
#include "star_sampling.hpp"

// Repeated-trial experiments with percentile summaries, plus the shared
// estimator dispatch used by the command line tool.
namespace gsize {

enum class EstimatorKind { node_uis, node_wis, capture, mle_approx, mle_exact, ind_a, ind_b, star };
enum class Correction { none, thin, thin_shifted, margin, cross_walker };
enum class SweepAxis { n, theta, m };

inline std::string_view to_string(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::node_uis: return "node-uis";
    case EstimatorKind::node_wis: return "node-wis";
    case EstimatorKind::capture: return "capture";
    case EstimatorKind::mle_approx: return "mle-approx";
    case EstimatorKind::mle_exact: return "mle-exact";
    case EstimatorKind::ind_a: return "ind-a";
    case EstimatorKind::ind_b: return "ind-b";
    case EstimatorKind::star: return "star";
  }
  return "?";
}

inline std::string_view to_string(Correction c) {
  switch (c) {
    case Correction::none: return "none";
    case Correction::thin: return "thin";
    case Correction::thin_shifted: return "thin-shifted";
    case Correction::margin: return "margin";
    case Correction::cross_walker: return "cross-walker";
  }
  return "?";
}

inline std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::n: return "n";
    case SweepAxis::theta: return "theta";
    case SweepAxis::m: return "m";
  }
  return "?";
}

inline EstimatorKind parse_estimator_kind(std::string_view s) {
  for (auto k : {EstimatorKind::node_uis, EstimatorKind::node_wis, EstimatorKind::capture, EstimatorKind::mle_approx,
                 EstimatorKind::mle_exact, EstimatorKind::ind_a, EstimatorKind::ind_b, EstimatorKind::star})
    if (to_string(k) == s) return k;
  throw config_error("unknown estimator '" + std::string(s) + "'");
}

inline Correction parse_correction(std::string_view s) {
  for (auto c : {Correction::none, Correction::thin, Correction::thin_shifted, Correction::margin, Correction::cross_walker})
    if (to_string(c) == s) return c;
  throw config_error("unknown correction '" + std::string(s) + "'");
}

inline SweepAxis parse_sweep_axis(std::string_view s) {
  for (auto a : {SweepAxis::n, SweepAxis::theta, SweepAxis::m})
    if (to_string(a) == s) return a;
  throw config_error("unknown sweep axis '" + std::string(s) + "'");
}

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::node_uis;
  Correction correction = Correction::none;
  AuxMode a_mode = AuxMode::set;
  std::optional<StarVariant> variant;  // star only; default follows the sample method
  std::size_t theta = 1;
  std::size_t m = 0;
};

// Rejects estimator/correction/sampler combinations that make no sense.
inline void check_compatible(const EstimatorSpec& spec, SamplingMethod method) {
  if (spec.correction == Correction::none) return;
  const auto name = std::string(to_string(spec.correction));
  if (!is_walk(method)) throw config_error(name + " correction needs a random-walk sample");
  const bool base_ok = spec.kind == EstimatorKind::node_wis || spec.kind == EstimatorKind::ind_b;
  if (!base_ok)
    throw config_error(name + " correction applies to node-wis and ind-b only, not " + std::string(to_string(spec.kind)));
  if ((spec.correction == Correction::thin || spec.correction == Correction::thin_shifted) && spec.theta == 0)
    throw config_error("theta must be >= 1");
}

struct EstimatorResult {
  std::optional<RatioEstimate> ratio;  // absent for the MLE estimators
  EstimateOutcome outcome = EstimateOutcome::no_collisions();
};

// `seed` drives the capture-recapture split and nothing else.
inline EstimatorResult run_estimator(const Sample& s, const EstimatorSpec& spec, std::uint64_t seed = 0) {
  check_compatible(spec, s.meta.method);
  auto done = [](RatioEstimate r) { return EstimatorResult{r, r.outcome()}; };
  switch (spec.correction) {
    case Correction::thin:
    case Correction::thin_shifted: {
      const auto base = spec.kind == EstimatorKind::node_wis ? ThinnedBase::node_wis : ThinnedBase::indb_auto;
      return done(estimate_thinned_ratio(s, {spec.theta}, base, spec.correction == Correction::thin_shifted, spec.a_mode));
    }
    case Correction::margin: {
      const MarginConfig cfg{spec.m, PairFilter::index_distance};
      return done(spec.kind == EstimatorKind::node_wis ? node_margin_ratio(s, cfg) : ind_margin_ratio(s, cfg, spec.a_mode));
    }
    case Correction::cross_walker:
      return done(margin_crosswalker_ratio(s, spec.kind == EstimatorKind::node_wis ? MarginBase::node : MarginBase::ind,
                                           spec.a_mode));
    case Correction::none: break;
  }
  switch (spec.kind) {
    case EstimatorKind::node_uis: return done(node_uis_ratio(s));
    case EstimatorKind::node_wis: return done(node_wis_ratio(s));
    case EstimatorKind::capture: {
      const auto split = split_for_capture_recapture(s, seed);
      return done(capture_recapture_ratio(split.first, split.second));
    }
    case EstimatorKind::mle_approx:
    case EstimatorKind::mle_exact: {
      if (s.empty()) throw config_error("MLE needs a non-empty sample");
      const std::uint64_t n = s.size(), u = count_unique(s);
      return {std::nullopt, spec.kind == EstimatorKind::mle_approx ? mle_unique_approx(n, u) : mle_unique_exact(n, u)};
    }
    case EstimatorKind::ind_a:
      return done(s.meta.method == SamplingMethod::uis ? inda_uis_ratio(s) : inda_wis_ratio(s));
    case EstimatorKind::ind_b: return done(indb_auto_ratio(s, spec.a_mode));
    case EstimatorKind::star: {
      const auto v = spec.variant.value_or(s.meta.method == SamplingMethod::uis ? StarVariant::uis : StarVariant::wis);
      return done(star_estimate_ratio(s, v));
    }
  }
  throw config_error("unhandled estimator");
}

// ---------------------------------------------------------------------------
// Graph and sampler descriptions

struct GraphSource {
  std::string path;       // edge list file, or
  std::string generator;  // e.g. "er:1000:0.02"
  std::uint64_t seed = 1;
  bool lcc = false;
};

inline Graph load_graph(const GraphSource& src, LoadReport* report = nullptr) {
  if (src.path.empty() == src.generator.empty()) throw config_error("give exactly one of a graph file or a generator");
  Graph g;
  if (!src.path.empty()) {
    std::ifstream in(src.path);
    if (!in) throw data_error("cannot open graph file '" + src.path + "'");
    g = load_edge_list(in, report);
  } else {
    g = gen::from_spec(src.generator, src.seed);
  }
  return src.lcc ? largest_connected_component(g) : g;
}

struct SamplerSpec {
  SamplingMethod method = SamplingMethod::uis;
  std::string weight = "degree";  // WIS only
  std::size_t walkers = 1;        // RW_MULTI only
};

inline Sample draw_sample(const Graph& g, const SamplerSpec& spec, std::size_t n, std::uint64_t seed) {
  switch (spec.method) {
    case SamplingMethod::uis: return sample_uis(g, n, seed);
    case SamplingMethod::wis: {
      const auto rule = parse_weight_rule(spec.weight);
      if (!rule) throw config_error("unknown weight rule '" + spec.weight + "'");
      return sample_wis(g, *rule, n, seed);
    }
    case SamplingMethod::rw: return sample_rw(g, n, seed);
    case SamplingMethod::rw_multi: {
      if (spec.walkers == 0 || n % spec.walkers != 0)
        throw config_error("sample size must be a positive multiple of the walker count");
      const auto seeds = walker_seeds(seed, spec.walkers);
      return sample_rw_multi(g, spec.walkers, n / spec.walkers, seeds);
    }
  }
  throw config_error("unhandled sampling method");
}

// ---------------------------------------------------------------------------
// Plans

struct ExperimentPlan {
  GraphSource graph;
  SamplerSpec sampler;
  EstimatorSpec estimator;
  SweepAxis sweep = SweepAxis::n;
  std::vector<std::size_t> grid;
  std::size_t n = 0;  // sample size when the sweep is over theta or m
  std::size_t trials = 500;
  std::uint64_t base_seed = 1;
  bool normalize = true;  // report estimate / N
};

inline void validate(const ExperimentPlan& plan) {
  if (plan.trials == 0) throw config_error("trials must be >= 1");
  if (plan.grid.empty()) throw config_error("parameter grid is empty");
  if (plan.sweep != SweepAxis::n && plan.n == 0) throw config_error("sample size n must be set when sweeping " +
                                                                    std::string(to_string(plan.sweep)));
  EstimatorSpec probe = plan.estimator;
  for (std::size_t v : plan.grid) {
    if (plan.sweep == SweepAxis::n && v == 0) throw config_error("sample sizes must be positive");
    if (plan.sweep == SweepAxis::theta) probe.theta = v;
    if (plan.sweep == SweepAxis::m) probe.m = v;
    check_compatible(probe, plan.sampler.method);
  }
  if (plan.sweep == SweepAxis::theta && plan.estimator.correction != Correction::thin &&
      plan.estimator.correction != Correction::thin_shifted)
    throw config_error("a theta sweep needs a thinning correction");
  if (plan.sweep == SweepAxis::m && plan.estimator.correction != Correction::margin)
    throw config_error("an m sweep needs the margin correction");
}

namespace detail {

inline std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  const auto x = parse_number<std::uint64_t>(v);
  if (!x) throw config_error("'" + std::string(key) + "' expects a non-negative integer, got '" + std::string(v) + "'");
  return *x;
}

inline bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw config_error("'" + std::string(key) + "' expects true or false");
}

}  // namespace detail

// Applies one key=value setting.
inline void apply_setting(ExperimentPlan& plan, std::string_view key, std::string_view value) {
  using detail::parse_uint;
  if (key == "graph") {
    plan.graph.path = value;
  } else if (key == "generator") {
    plan.graph.generator = value;
  } else if (key == "graph_seed") {
    plan.graph.seed = parse_uint(key, value);
  } else if (key == "lcc") {
    plan.graph.lcc = detail::parse_bool(key, value);
  } else if (key == "sampler") {
    const auto m = parse_method(value);
    if (!m) throw config_error("unknown sampler '" + std::string(value) + "'");
    plan.sampler.method = *m;
  } else if (key == "weight") {
    if (!parse_weight_rule(value)) throw config_error("unknown weight rule '" + std::string(value) + "'");
    plan.sampler.weight = value;
  } else if (key == "walkers") {
    plan.sampler.walkers = parse_uint(key, value);
  } else if (key == "estimator") {
    plan.estimator.kind = parse_estimator_kind(value);
  } else if (key == "correction") {
    plan.estimator.correction = parse_correction(value);
  } else if (key == "a_mode") {
    const auto m = parse_aux_mode(value);
    if (!m) throw config_error("a_mode must be set or multiset");
    plan.estimator.a_mode = *m;
  } else if (key == "variant") {
    const auto v = parse_star_variant(value);
    if (!v) throw config_error("variant must be uis or wis");
    plan.estimator.variant = v;
  } else if (key == "theta") {
    plan.estimator.theta = parse_uint(key, value);
  } else if (key == "m") {
    plan.estimator.m = parse_uint(key, value);
  } else if (key == "sweep") {
    plan.sweep = parse_sweep_axis(value);
  } else if (key == "grid") {
    plan.grid.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      plan.grid.push_back(parse_uint(key, detail::trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  } else if (key == "n") {
    plan.n = parse_uint(key, value);
  } else if (key == "trials") {
    plan.trials = parse_uint(key, value);
  } else if (key == "base_seed") {
    plan.base_seed = parse_uint(key, value);
  } else if (key == "normalize") {
    plan.normalize = detail::parse_bool(key, value);
  } else {
    throw config_error("unknown plan key '" + std::string(key) + "'");
  }
}

inline void apply_setting(ExperimentPlan& plan, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw config_error("expected key=value, got '" + std::string(assignment) + "'");
  apply_setting(plan, detail::trim(assignment.substr(0, eq)), detail::trim(assignment.substr(eq + 1)));
}

// key = value per line; blank lines and lines starting with '#' are skipped.
inline ExperimentPlan parse_plan(std::istream& in) {
  ExperimentPlan plan;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      apply_setting(plan, t);
    } catch (const config_error& e) {
      throw config_error("plan line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Summaries

// Nearest rank: element ceil(q * len) - 1 of the sorted values, clamped.
inline double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw config_error("percentile of an empty list");
  if (!(q >= 0.0 && q <= 1.0)) throw config_error("percentile rank must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::ptrdiff_t>(std::ceil(q * static_cast<double>(values.size()))) - 1;
  const auto idx = std::clamp<std::ptrdiff_t>(rank, 0, static_cast<std::ptrdiff_t>(values.size()) - 1);
  return values[static_cast<std::size_t>(idx)];
}

struct TrialSummary {
  std::size_t param = 0;
  std::optional<double> p10, p50, p90;  // absent when every trial was infinite
  double infinite_fraction = 0.0;
  std::size_t trials = 0;
};

// `outcomes` in trial order.
inline TrialSummary summarize(std::size_t param, std::span<const EstimateOutcome> outcomes, double scale = 1.0) {
  TrialSummary s;
  s.param = param;
  s.trials = outcomes.size();
  std::vector<double> finite;
  for (const auto& o : outcomes)
    if (o) finite.push_back(o.value() / scale);
  if (!outcomes.empty())
    s.infinite_fraction = static_cast<double>(outcomes.size() - finite.size()) / static_cast<double>(outcomes.size());
  if (!finite.empty()) {
    s.p10 = percentile(finite, 0.1);
    s.p50 = percentile(finite, 0.5);
    s.p90 = percentile(finite, 0.9);
  }
  return s;
}

inline std::size_t thread_count() {
  if (const char* env = std::getenv("GSIZE_THREADS")) {
    const auto v = detail::parse_number<std::size_t>(detail::trim(env));
    if (!v || *v == 0) throw config_error("GSIZE_THREADS must be a positive integer");
    return *v;
  }
  return 1;
}

// Runs body(t) for t in [0, count) on `threads` workers. Exceptions are
// rethrown on the calling thread (the one from the lowest trial index).
template <typename Body>
void parallel_trials(std::size_t count, std::size_t threads, Body body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t k = 0; k < threads; ++k)
    pool.emplace_back([&] {
      for (std::size_t t; (t = next.fetch_add(1)) < count;) {
        try {
          body(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::vector<TrialSummary> run_experiment(const ExperimentPlan& plan, const Graph& g, std::size_t threads = 1) {
  validate(plan);
  const double scale = plan.normalize ? static_cast<double>(g.node_count()) : 1.0;
  const std::size_t points = plan.grid.size();
  // outcomes[point][trial]
  std::vector<std::vector<EstimateOutcome>> outcomes(points,
                                                     std::vector<EstimateOutcome>(plan.trials, EstimateOutcome::no_collisions()));
  parallel_trials(plan.trials, threads, [&](std::size_t t) {
    const std::uint64_t seed = plan.base_seed + t;
    const std::uint64_t split_seed = mix_seed(seed);
    if (plan.sweep == SweepAxis::n) {
      for (std::size_t p = 0; p < points; ++p) {
        const auto s = draw_sample(g, plan.sampler, plan.grid[p], seed);
        outcomes[p][t] = run_estimator(s, plan.estimator, split_seed).outcome;
      }
      return;
    }
    const auto s = draw_sample(g, plan.sampler, plan.n, seed);
    EstimatorSpec spec = plan.estimator;
    for (std::size_t p = 0; p < points; ++p) {
      (plan.sweep == SweepAxis::theta ? spec.theta : spec.m) = plan.grid[p];
      outcomes[p][t] = run_estimator(s, spec, split_seed).outcome;
    }
  });
  std::vector<TrialSummary> out;
  out.reserve(points);
  for (std::size_t p = 0; p < points; ++p) out.push_back(summarize(plan.grid[p], outcomes[p], scale));
  return out;
}

inline std::vector<TrialSummary> run_experiment(const ExperimentPlan& plan) {
  validate(plan);
  return run_experiment(plan, load_graph(plan.graph), thread_count());
}

// ---------------------------------------------------------------------------
// Output

inline constexpr std::string_view csv_header = "param,p10,p50,p90,infinite_fraction,trials";

inline void emit_csv(std::ostream& out, std::span<const TrialSummary> rows) {
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  out << csv_header << '\n';
  for (const auto& r : rows)
    out << r.param << ',' << opt(r.p10) << ',' << opt(r.p50) << ',' << opt(r.p90) << ','
        << format_double(r.infinite_fraction) << ',' << r.trials << '\n';
}

inline std::vector<TrialSummary> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || detail::trim(line) != csv_header) throw data_error("not a summary CSV (bad header)");
  std::vector<TrialSummary> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      f.push_back(detail::trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 6) throw parse_error(lineno, "expected 6 fields");
    auto num = [&](std::string_view v) -> std::optional<double> {
      if (v.empty()) return std::nullopt;
      const auto x = detail::parse_number<double>(v);
      if (!x) throw parse_error(lineno, "bad number '" + std::string(v) + "'");
      return x;
    };
    TrialSummary r;
    const auto param = detail::parse_number<std::size_t>(f[0]);
    const auto trials = detail::parse_number<std::size_t>(f[5]);
    const auto inf = num(f[4]);
    if (!param || !trials || !inf) throw parse_error(lineno, "bad param, trials or infinite_fraction");
    r.param = *param;
    r.p10 = num(f[1]);
    r.p50 = num(f[2]);
    r.p90 = num(f[3]);
    r.infinite_fraction = *inf;
    r.trials = *trials;
    rows.push_back(r);
  }
  if (rows.empty()) throw data_error("summary CSV has no rows");
  return rows;
}

struct SvgOptions {
  std::string x_label = "parameter";
  std::string y_label = "N̂/N";
  bool reference_line = true;  // dashed line at y = 1
};

namespace detail {

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace detail

// Grey p10-p90 band with a dotted median. Points without finite estimates
// are skipped. Output depends only on the input rows.
inline void emit_svg_band(std::ostream& out, std::span<const TrialSummary> rows, const SvgOptions& opt = {}) {
  constexpr double width = 640, height = 400, left = 70, right = 20, top = 20, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;

  std::vector<const TrialSummary*> pts;
  for (const auto& r : rows)
    if (r.p10 && r.p50 && r.p90) pts.push_back(&r);
  std::sort(pts.begin(), pts.end(), [](auto* a, auto* b) { return a->param < b->param; });

  double x_min = 0, x_max = 1, y_max = opt.reference_line ? 1.0 : 0.0;
  if (!rows.empty()) {
    auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.param < b.param; });
    x_min = static_cast<double>(lo->param);
    x_max = static_cast<double>(hi->param);
  }
  if (x_max <= x_min) {
    x_min -= 1;
    x_max += 1;
  }
  for (auto* p : pts) y_max = std::max(y_max, *p->p90);
  y_max = y_max > 0 ? y_max * 1.1 : 1.0;
  auto px = [&](double x) { return detail::fixed(left + (x - x_min) / (x_max - x_min) * plot_w, 2); };
  auto py = [&](double y) { return detail::fixed(top + plot_h - y / y_max * plot_h, 2); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  if (!pts.empty()) {
    out << "<polygon fill=\"#bbbbbb\" stroke=\"#999999\" stroke-width=\"0.5\" points=\"";
    for (auto* p : pts) out << px(static_cast<double>(p->param)) << ',' << py(*p->p90) << ' ';
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) out << px(static_cast<double>((*it)->param)) << ',' << py(*(*it)->p10) << ' ';
    out << "\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"2,3\" points=\"";
    for (auto* p : pts) out << px(static_cast<double>(p->param)) << ',' << py(*p->p50) << ' ';
    out << "\"/>\n";
  }
  if (opt.reference_line && y_max >= 1.0)
    out << "<line x1=\"" << px(x_min) << "\" y1=\"" << py(1.0) << "\" x2=\"" << px(x_max) << "\" y2=\"" << py(1.0)
        << "\" stroke=\"#555555\" stroke-width=\"0.8\" stroke-dasharray=\"6,4\"/>\n";

  // axes and ticks
  out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double y = y_max * k / 4.0, x = x_min + (x_max - x_min) * k / 4.0;
    out << "<text x=\"" << left - 6 << "\" y=\"" << py(y) << "\" font-size=\"11\" text-anchor=\"end\">"
        << detail::fixed(y, 2) << "</text>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << top + plot_h + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << format_double(std::round(x * 100.0) / 100.0) << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" font-size=\"13\" text-anchor=\"middle\">"
      << opt.x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << top + plot_h / 2 << ")\">" << opt.y_label << "</text>\n";
  out << "</svg>\n";
}

}  // namespace gsize
