#include "ign/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ign/analysis.hpp"
#include "ign/assignment.hpp"
#include "ign/error.hpp"
#include "ign/parallel.hpp"
#include "ign/random.hpp"
#include "json.hpp"

namespace ign {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// "power:2,0.01" carries a comma, so CSV cells get quoted.
std::string csv_cell(const Activation& h) { return '"' + h.to_string() + '"'; }

json stop_json(const StoppingCriteria& s) {
  return {{"epsilon", s.epsilon}, {"alpha", s.alpha}, {"max_iters", s.max_iters}};
}

void dump_failures(const ExperimentConfig& cfg, const std::string& tag, const std::vector<FailureRecord>& fs) {
  if (cfg.output.empty() || fs.empty()) return;
  const auto dir = cfg.output / "failures";
  for (const auto& f : fs) {
    const std::string stem = tag + "_n" + std::to_string(f.n) + "_i" + std::to_string(f.index);
    json meta{{"experiment", tag},
              {"n", f.n},
              {"index", f.index},
              {"seed", f.seed},
              {"reason", f.reason},
              {"activation", cfg.activation.to_string()},
              {"stop", stop_json(cfg.stop)}};
    if (cfg.tau) meta["tau"] = *cfg.tau;
    if (f.graph) write_text_file(dir / (stem + ".wgraph"), to_wgraph(*f.graph));
    if (f.matrix) write_text_file(dir / (stem + ".csv"), matrix_csv(*f.matrix));
    write_text_file(dir / (stem + ".json"), meta.dump(2) + "\n");
  }
}

std::string histogram_rows(const std::string& prefix, const Histogram& h) {
  std::ostringstream os;
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    const double lo = k == 0 ? -inf : h.edge(k - 1);
    const double hi = k == Histogram::kBins + 1 ? inf : h.edge(k);
    os << prefix << fmt(lo) << ',' << fmt(hi) << ',' << h.counts[k] << '\n';
  }
  return os.str();
}

bool independent(const AdjacencyMatrix& a, const NodeSet& s) {
  return classify_set(a, s) != SetClassification::NotIndependent;
}

}  // namespace

std::string to_string(Pipeline p) {
  switch (p) {
    case Pipeline::IgnOnly: return "ign";
    case Pipeline::IcnOnly: return "icn";
    case Pipeline::SaThenIcn: return "sa+icn";
  }
  return "?";
}

Pipeline parse_pipeline(std::string_view s) {
  if (s == "ign") return Pipeline::IgnOnly;
  if (s == "icn") return Pipeline::IcnOnly;
  if (s == "sa+icn" || s == "sa-icn") return Pipeline::SaThenIcn;
  throw InvalidArgument("unknown pipeline '" + std::string(s) + "' (expected ign, icn or sa+icn)");
}

void ExperimentConfig::validate() const {
  stop.validate();
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  if (n_values.empty()) throw InvalidArgument("at least one n is required");
  for (auto n : n_values)
    if (n < 1) throw InvalidArgument("n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  if (pipeline == Pipeline::SaThenIcn && !tau) throw InvalidArgument("the sa+icn pipeline needs --tau");
  if (pipeline != Pipeline::SaThenIcn && tau) throw InvalidArgument("--tau is only used by the sa+icn pipeline");
  if (tau && !(*tau > 0.0)) throw InvalidArgument("tau must be > 0");
  if (!(sk_tol > 0.0)) throw InvalidArgument("Sinkhorn tolerance must be > 0");
  if (conj_n_min < 1 || conj_n_min > conj_n_max) throw InvalidArgument("bad conjecture size range");
}

// ---------------------------------------------------------------------------
// IGN vs WG

std::vector<GapCell> run_gap_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Outcome {
    std::optional<double> gap;
    std::optional<SetClassification> cls;
    std::size_t iterations = 0;
    std::string failure;
  };
  std::vector<GapCell> cells;
  for (std::size_t n : cfg.n_values) {
    std::vector<Outcome> out(cfg.samples);
    parallel_for(
        cfg.samples,
        [&](std::size_t i) {
          const WeightedGraph g = gen_gnp(n, cfg.p, cfg.base_seed + i);
          Outcome& o = out[i];
          const ConvergenceReport r = run_ign(g.adjacency, g.weights, cfg.activation, cfg.stop);
          o.iterations = r.iterations;
          if (r.stop_reason != StopReason::ConvergedBinary) {
            o.failure = to_string(r.stop_reason) + (r.non_normalizable ? " (non-normalizable iterate)" : "");
            return;
          }
          o.cls = r.rounded_class;
          if (*r.rounded_class == SetClassification::NotIndependent) {
            o.failure = "rounded set is not independent";
            return;
          }
          const MwisSolution wg = wg_greedy(g, cfg.wg_variant);
          if (!independent(g.adjacency, wg.set)) throw Error("WG returned a dependent set");
          o.gap = gap(set_weight(g.weights, *r.rounded_set), wg.total_weight);
        },
        cfg.workers);

    GapCell cell;
    cell.n = n;
    std::vector<double> gaps, iters;
    for (std::size_t i = 0; i < out.size(); ++i) {
      iters.push_back(static_cast<double>(out[i].iterations));
      if (out[i].gap) {
        gaps.push_back(*out[i].gap);
        if (*out[i].cls == SetClassification::MaximalIndependent) ++cell.maximal;
        else ++cell.non_maximal;
      } else {
        cell.failures.push_back({n, i, cfg.base_seed + i, out[i].failure, gen_gnp(n, cfg.p, cfg.base_seed + i), {}});
      }
    }
    cell.stats = summarize_gaps(std::move(gaps), cell.failures.size());
    cell.mean_iterations = mean(iters);
    cell.sd_iterations = stddev(iters);
    cells.push_back(std::move(cell));
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Assignment

Eigen::MatrixXd random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd x(ni, ni);
  for (Eigen::Index i = 0; i < ni; ++i)
    for (Eigen::Index j = 0; j < ni; ++j) x(i, j) = uniform01(rng);
  return x;
}

std::vector<AssignmentCell> run_assignment_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Outcome {
    std::optional<double> gap;
    double sa = 0.0, icn = 0.0;
    std::string failure;
  };
  std::vector<AssignmentCell> cells;
  for (std::size_t n : cfg.n_values) {
    std::vector<Outcome> out(cfg.samples);
    parallel_for(
        cfg.samples,
        [&](std::size_t i) {
          const Eigen::MatrixXd x = random_matrix(n, cfg.base_seed + i);
          Outcome& o = out[i];
          std::optional<Permutation> perm;
          if (cfg.pipeline == Pipeline::IgnOnly) {
            const auto a = dual_adjacency(n);
            const ConvergenceReport r = run_ign(a, flatten(x), cfg.activation, cfg.stop);
            o.icn = static_cast<double>(r.iterations);
            perm = permutation_after_threshold(unflatten(r.final_weights, n));
            if (!perm) o.failure = "no permutation after " + to_string(r.stop_reason);
          } else {
            Eigen::MatrixXd start = x;
            if (cfg.pipeline == Pipeline::SaThenIcn) {
              try {
                const SinkhornResult sa = softassign(x, *cfg.tau, cfg.sk_tol);
                o.sa = static_cast<double>(sa.iterations);
                start = sa.matrix;
              } catch (const Error& e) {
                o.failure = std::string("softassign: ") + e.what();
                return;
              }
            }
            const AssignmentReport r = run_icn(start, cfg.activation, cfg.stop);
            o.icn = static_cast<double>(r.iterations);
            perm = r.permutation;
            if (!perm)
              o.failure = "no permutation after " + to_string(r.stop_reason) +
                          (r.non_normalizable ? " (non-normalizable iterate)" : "");
          }
          if (!perm) return;
          o.gap = gap(permutation_weight(x, *perm), hungarian(x).total);
        },
        cfg.workers);

    AssignmentCell cell;
    cell.n = n;
    cell.pipeline = cfg.pipeline;
    std::vector<double> gaps;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!out[i].gap) {
        cell.failures.push_back({n, i, cfg.base_seed + i, out[i].failure, {}, random_matrix(n, cfg.base_seed + i)});
        continue;
      }
      gaps.push_back(*out[i].gap);
      if (*out[i].gap > 1e-9) ++cell.positive_gaps;
      if (cfg.pipeline == Pipeline::SaThenIcn) cell.sa_iterations.push_back(out[i].sa);
      cell.icn_iterations.push_back(out[i].icn);
      cell.total_iterations.push_back(out[i].sa + out[i].icn);
    }
    cell.stats = summarize_gaps(std::move(gaps), cell.failures.size());
    cells.push_back(std::move(cell));
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Conjectures

WeightedGraph conjecture_instance(std::uint64_t seed, std::size_t n_min, std::size_t n_max) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(uniform_int(rng, n_min, n_max));
  const double p = uniform(rng, 0.1, 0.9);
  while (true) {
    WeightedGraph g = gen_gnp(n, p, rng());
    if (is_connected(g.adjacency)) return g;
  }
}

ConjectureReport run_conjecture_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Outcome {
    bool ql1 = true, l1 = true;
    double slack = 0.0;
    ConvergenceReport report;
  };
  std::vector<Outcome> out(cfg.samples);
  parallel_for(
      cfg.samples,
      [&](std::size_t i) {
        const WeightedGraph g = conjecture_instance(cfg.base_seed + i, cfg.conj_n_min, cfg.conj_n_max);
        Outcome& o = out[i];
        const Ql1Result q = check_ql1(g.adjacency, g.weights);
        o.ql1 = q.holds;
        o.slack = q.rhs - q.lhs;
        o.l1 = l1_monotonicity_check(g.adjacency, g.weights, cfg.l1_steps);
        o.report = run_ign(g.adjacency, g.weights, cfg.activation, cfg.stop);
      },
      cfg.workers);

  ConjectureReport rep;
  rep.samples = cfg.samples;
  rep.min_ql1_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& o = out[i];
    rep.min_ql1_slack = std::min(rep.min_ql1_slack, o.slack);
    std::string why;
    if (!o.ql1) {
      ++rep.ql1_violations;
      why += "QL1;";
    }
    if (!o.l1) {
      ++rep.l1_violations;
      why += "L1 not strictly increasing;";
    }
    if (o.report.non_normalizable) ++rep.non_normalizable;
    switch (o.report.stop_reason) {
      case StopReason::ConvergedBinary:
        ++rep.converged_binary;
        switch (*o.report.rounded_class) {
          case SetClassification::MaximalIndependent: ++rep.maximal; break;
          case SetClassification::IndependentNonMaximal: ++rep.non_maximal; break;
          case SetClassification::NotIndependent:
            ++rep.not_independent;
            why += "rounded set not independent;";
            break;
        }
        break;
      case StopReason::SpeedOnly:
        ++rep.speed_only;
        why += "SpeedOnly;";
        break;
      case StopReason::MaxIters:
        ++rep.max_iters;
        why += o.report.non_normalizable ? "non-normalizable iterate;" : "MaxIters;";
        break;
    }
    if (!why.empty()) {
      const auto g = conjecture_instance(cfg.base_seed + i, cfg.conj_n_min, cfg.conj_n_max);
      rep.violations.push_back({g.size(), i, cfg.base_seed + i, why, g, {}});
    }
  }
  if (out.empty()) rep.min_ql1_slack = 0.0;
  return rep;
}

ConvergenceReport run_single(const WeightedGraph& g, const ExperimentConfig& cfg, bool record_trace) {
  cfg.stop.validate();
  return run_ign(g.adjacency, g.weights, cfg.activation, cfg.stop, record_trace);
}

// ---------------------------------------------------------------------------
// Output

std::string write_gap_outputs(const ExperimentConfig& cfg, const std::vector<GapCell>& cells) {
  std::ostringstream stats, hist;
  stats << "n,p,activation,wg_variant,samples,n_failed,average_gap,median_gap,proportion_nonneg,maximal,non_maximal,"
           "mean_iterations,sd_iterations\n";
  hist << "n,bin_lo,bin_hi,count\n";
  for (const auto& c : cells) {
    stats << c.n << ',' << fmt(cfg.p) << ',' << csv_cell(cfg.activation) << ','
          << (cfg.wg_variant == WgDegrees::Recomputed ? "recomputed" : "static") << ',' << c.stats.samples << ','
          << c.stats.n_failed << ',' << fmt(c.stats.average) << ',' << fmt(c.stats.median) << ','
          << fmt(c.stats.proportion_nonneg) << ',' << c.maximal << ',' << c.non_maximal << ','
          << fmt(c.mean_iterations) << ',' << fmt(c.sd_iterations) << '\n';
    hist << histogram_rows(std::to_string(c.n) + ",", c.stats.histogram);
  }
  if (!cfg.output.empty()) {
    write_text_file(cfg.output / "stats.csv", stats.str());
    write_text_file(cfg.output / "histogram.csv", hist.str());
    for (const auto& c : cells) dump_failures(cfg, "gap", c.failures);
  }
  return stats.str();
}

std::string write_assignment_outputs(const ExperimentConfig& cfg, const std::vector<AssignmentCell>& cells) {
  std::ostringstream stats, hist;
  stats << "n,pipeline,activation,tau,samples,n_failed,average_gap,median_gap,proportion_nonneg,positive_gaps,"
           "mean_sa_iterations,sd_sa_iterations,mean_icn_iterations,sd_icn_iterations,mean_total_iterations,"
           "sd_total_iterations\n";
  hist << "n,bin_lo,bin_hi,count\n";
  for (const auto& c : cells) {
    stats << c.n << ',' << to_string(c.pipeline) << ',' << csv_cell(cfg.activation) << ','
          << (cfg.tau ? fmt(*cfg.tau) : "") << ',' << c.stats.samples << ',' << c.stats.n_failed << ','
          << fmt(c.stats.average) << ',' << fmt(c.stats.median) << ',' << fmt(c.stats.proportion_nonneg) << ','
          << c.positive_gaps << ',' << fmt(mean(c.sa_iterations)) << ',' << fmt(stddev(c.sa_iterations)) << ','
          << fmt(mean(c.icn_iterations)) << ',' << fmt(stddev(c.icn_iterations)) << ','
          << fmt(mean(c.total_iterations)) << ',' << fmt(stddev(c.total_iterations)) << '\n';
    hist << histogram_rows(std::to_string(c.n) + ",", c.stats.histogram);
  }
  if (!cfg.output.empty()) {
    write_text_file(cfg.output / "stats.csv", stats.str());
    write_text_file(cfg.output / "histogram.csv", hist.str());
    for (const auto& c : cells) dump_failures(cfg, "assignment", c.failures);
  }
  return stats.str();
}

std::string write_conjecture_outputs(const ExperimentConfig& cfg, const ConjectureReport& r) {
  std::ostringstream stats;
  stats << "samples,activation,ql1_violations,l1_violations,converged_binary,maximal,non_maximal,not_independent,"
           "speed_only,max_iters,non_normalizable,min_ql1_slack\n";
  stats << r.samples << ',' << csv_cell(cfg.activation) << ',' << r.ql1_violations << ',' << r.l1_violations << ','
        << r.converged_binary << ',' << r.maximal << ',' << r.non_maximal << ',' << r.not_independent << ','
        << r.speed_only << ',' << r.max_iters << ',' << r.non_normalizable << ',' << fmt(r.min_ql1_slack) << '\n';
  if (!cfg.output.empty()) {
    write_text_file(cfg.output / "stats.csv", stats.str());
    dump_failures(cfg, "conjecture", r.violations);
  }
  return stats.str();
}

std::string write_census_outputs(const ExperimentConfig& cfg, const CensusResult& r) {
  std::ostringstream stats;
  stats << "size,connected,candidates,certified,isolated\n";
  for (const auto& c : r.counts)
    stats << c.size << ',' << c.connected << ',' << c.candidates << ',' << c.certified << ',' << c.isolated << '\n';
  if (!cfg.output.empty()) {
    write_text_file(cfg.output / "stats.csv", stats.str());
    write_text_file(cfg.output / "census.csv", census_csv(r));
  }
  return stats.str();
}

}  // namespace ign
