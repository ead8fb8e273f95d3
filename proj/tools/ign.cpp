// Command line front end for the experiment harness.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "ign/error.hpp"
#include "ign/harness.hpp"
#include "ign/io.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitFailures = 3;

struct Options {
  std::vector<std::size_t> n;
  double p = 0.5;
  std::size_t samples = 0;  // 0: per-size default
  std::string activation;
  std::optional<double> tau;
  std::string pipeline = "sa+icn";
  ign::StoppingCriteria stop;
  std::uint64_t seed = 0;
  std::string out;
  std::string wg_variant = "recomputed";
  double sk_tol = 1e-2;
  std::size_t workers = 0;
  std::string graph_file;
  std::string trace_file;
};

// The subcommands share one Options, so the activation default is resolved
// after parsing (see base_config).
void add_common(CLI::App* app, Options& o, const std::string& default_activation) {
  app->add_option("--n", o.n, "Node counts (or matrix sizes), comma separated")->delimiter(',');
  app->add_option("--p", o.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  app->add_option("--samples", o.samples, "Instances per size (default 10000 up to n=64, 1000 above)");
  app->add_option("--activation", o.activation, "identity | power:a,t | sigmoid:a (default " + default_activation + ")");
  app->add_option("--epsilon", o.stop.epsilon, "Speed threshold")->capture_default_str();
  app->add_option("--alpha", o.stop.alpha, "Binarity threshold")->capture_default_str();
  app->add_option("--max-iters", o.stop.max_iters, "Iteration cap")->capture_default_str();
  app->add_option("--seed", o.seed, "Base seed; instance i uses seed + i")->capture_default_str();
  app->add_option("--out", o.out, "Output directory for stats.csv, histogram.csv and failures/");
  app->add_option("--workers", o.workers, "Worker threads (0 = all cores)")->capture_default_str();
}

std::size_t default_samples(std::size_t n) { return n <= 64 ? 10000 : 1000; }

ign::ExperimentConfig base_config(const Options& o, ign::ExperimentKind kind, const char* default_activation) {
  ign::ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.p = o.p;
  cfg.activation = ign::Activation::parse(o.activation.empty() ? default_activation : o.activation);
  cfg.stop = o.stop;
  cfg.base_seed = o.seed;
  cfg.output = o.out;
  cfg.workers = o.workers;
  cfg.sk_tol = o.sk_tol;
  return cfg;
}

// Runs one cell per n so that each size can get its own default sample count.
template <class Run>
auto run_cells(ign::ExperimentConfig cfg, const Options& o, const std::vector<std::size_t>& sizes, Run run) {
  decltype(run(cfg)) all;
  for (std::size_t n : sizes) {
    cfg.n_values = {n};
    cfg.samples = o.samples ? o.samples : default_samples(n);
    auto cells = run(cfg);
    std::cerr << "n=" << n << ": " << cfg.samples << " samples done\n";
    all.insert(all.end(), cells.begin(), cells.end());
  }
  return all;
}

int gap_vs_wg(const Options& o) {
  auto cfg = base_config(o, ign::ExperimentKind::GapVsWG, "power:2,0.01");
  if (o.wg_variant == "static") cfg.wg_variant = ign::WgDegrees::Initial;
  else if (o.wg_variant != "recomputed") throw ign::InvalidArgument("--wg-variant must be recomputed or static");
  if (o.tau) throw ign::InvalidArgument("--tau does not apply to gap-vs-wg");
  const auto sizes = o.n.empty() ? std::vector<std::size_t>{64} : o.n;
  cfg.n_values = sizes;
  cfg.validate();
  const auto cells = run_cells(cfg, o, sizes, ign::run_gap_experiment);
  std::cout << ign::write_gap_outputs(cfg, cells);
  std::size_t failed = 0;
  for (const auto& c : cells) failed += c.stats.n_failed;
  return failed ? kExitFailures : 0;
}

int assignment(const Options& o) {
  auto cfg = base_config(o, ign::ExperimentKind::Assignment, "sigmoid:5");
  cfg.pipeline = ign::parse_pipeline(o.pipeline);
  cfg.tau = o.tau;
  if (cfg.pipeline == ign::Pipeline::SaThenIcn && !cfg.tau) cfg.tau = 0.01;
  const auto sizes = o.n.empty() ? std::vector<std::size_t>{4, 8, 16, 32, 64, 128} : o.n;
  cfg.n_values = sizes;
  cfg.validate();
  const auto cells = run_cells(cfg, o, sizes, ign::run_assignment_experiment);
  std::cout << ign::write_assignment_outputs(cfg, cells);
  std::size_t failed = 0;
  for (const auto& c : cells) failed += c.stats.n_failed;
  return failed ? kExitFailures : 0;
}

int conjectures(const Options& o) {
  auto cfg = base_config(o, ign::ExperimentKind::Conjectures, "power:2,0.01");
  if (!o.n.empty()) {
    cfg.conj_n_min = *std::min_element(o.n.begin(), o.n.end());
    cfg.conj_n_max = *std::max_element(o.n.begin(), o.n.end());
  }
  cfg.samples = o.samples ? o.samples : 10000;
  cfg.validate();
  const auto r = ign::run_conjecture_suite(cfg);
  std::cout << ign::write_conjecture_outputs(cfg, r);
  return r.violations.empty() ? 0 : kExitFailures;
}

int census(const Options& o) {
  auto cfg = base_config(o, ign::ExperimentKind::Census, "identity");
  std::size_t lo = 1, hi = 6;
  if (!o.n.empty()) {
    lo = *std::min_element(o.n.begin(), o.n.end());
    hi = *std::max_element(o.n.begin(), o.n.end());
  }
  const auto r = ign::census(lo, hi, o.workers);
  std::cout << ign::write_census_outputs(cfg, r);
  return 0;
}

int single(const Options& o) {
  auto cfg = base_config(o, ign::ExperimentKind::Single, "power:2,0.01");
  const auto loaded = ign::read_graph_file(o.graph_file);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
  const auto report = ign::run_single(loaded.graph, cfg, !o.trace_file.empty());
  std::cout << ign::report_json(report);
  if (!o.trace_file.empty()) ign::write_text_file(o.trace_file, ign::trace_csv(report));
  return report.stop_reason == ign::StopReason::ConvergedBinary ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterative graph normalization experiments"};
  app.require_subcommand(1);
  Options o;

  auto* s = app.add_subcommand("single", "Run IGN on one graph file and print the JSON report");
  add_common(s, o, "power:2,0.01");
  s->add_option("graph", o.graph_file, "Graph file (wgraph text or JSON)")->required()->check(CLI::ExistingFile);
  s->add_option("--trace", o.trace_file, "Write the per-iteration trace CSV here");

  auto* g = app.add_subcommand("gap-vs-wg", "IGN against the WG greedy heuristic on G(n, p)");
  add_common(g, o, "power:2,0.01");
  g->add_option("--wg-variant", o.wg_variant, "recomputed | static degree ratios")->capture_default_str();

  auto* a = app.add_subcommand("assignment", "Cross normalization pipelines against the Hungarian optimum");
  add_common(a, o, "sigmoid:5");
  a->add_option("--tau", o.tau, "Softassign temperature (sa+icn only, default 0.01)");
  a->add_option("--pipeline", o.pipeline, "ign | icn | sa+icn")->capture_default_str();
  a->add_option("--sk-tol", o.sk_tol, "Sinkhorn stopping tolerance")->capture_default_str();

  auto* c = app.add_subcommand("conjectures", "QL1, L1 growth and convergence sweep over random connected graphs");
  add_common(c, o, "power:2,0.01");

  auto* k = app.add_subcommand("census", "Non-trivial fixed clusters of small connected graphs");
  add_common(k, o, "identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*s) return single(o);
    if (*g) return gap_vs_wg(o);
    if (*a) return assignment(o);
    if (*c) return conjectures(o);
    return census(o);
  } catch (const ign::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ign::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
