#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "ign/error.hpp"
#include "ign/harness.hpp"

using namespace ign;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ign_harness_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.p = 1.5;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.pipeline = Pipeline::SaThenIcn;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.tau = 0.01;
  CHECK_NOTHROW(cfg.validate());
  cfg.pipeline = Pipeline::IcnOnly;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.n_values = {0};
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  CHECK(parse_pipeline("sa+icn") == Pipeline::SaThenIcn);
  CHECK_THROWS_AS(parse_pipeline("x"), InvalidArgument);
}

TEST_CASE("gap experiment on small graphs") {
  ExperimentConfig cfg;
  cfg.n_values = {8};
  cfg.samples = 400;
  cfg.base_seed = 100;
  const auto cells = run_gap_experiment(cfg);
  REQUIRE(cells.size() == 1);
  const auto& s = cells[0].stats;
  CHECK(s.n_failed == 0);
  CHECK(s.histogram.total() == 400);
  CHECK(cells[0].maximal == 400);
  // mostly identical answers at this size: the central bin dominates
  const auto peak = std::max_element(s.histogram.counts.begin(), s.histogram.counts.end());
  CHECK(peak - s.histogram.counts.begin() == 41);
}

TEST_CASE("outputs are identical across worker counts") {
  ExperimentConfig cfg;
  cfg.n_values = {10, 12};
  cfg.samples = 60;
  cfg.base_seed = 9;
  cfg.workers = 1;
  cfg.output = scratch("w1");
  const auto one = write_gap_outputs(cfg, run_gap_experiment(cfg));
  const auto hist_one = read_text_file(cfg.output / "histogram.csv");
  cfg.workers = 4;
  cfg.output = scratch("w4");
  const auto four = write_gap_outputs(cfg, run_gap_experiment(cfg));
  CHECK(one == four);
  // every stats row has as many cells as the header once the quoted activation is read as one
  std::istringstream lines(one);
  std::string header, row;
  std::getline(lines, header);
  const auto cells = [](const std::string& line) {
    std::size_t count = 1;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      else if (ch == ',' && !quoted) ++count;
    }
    return count;
  };
  while (std::getline(lines, row)) CHECK(cells(row) == cells(header));
  CHECK(one.find("\"power:2,0.01\"") != std::string::npos);
  CHECK(hist_one == read_text_file(cfg.output / "histogram.csv"));
  std::filesystem::remove_all(scratch("w1"));
  std::filesystem::remove_all(scratch("w4"));
}

TEST_CASE("assignment experiment") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Assignment;
  cfg.n_values = {4, 6};
  cfg.samples = 50;
  cfg.activation = Activation::sigmoid(5);
  for (auto pipe : {Pipeline::IcnOnly, Pipeline::SaThenIcn, Pipeline::IgnOnly}) {
    cfg.pipeline = pipe;
    cfg.tau = pipe == Pipeline::SaThenIcn ? std::optional<double>(0.01) : std::nullopt;
    const auto cells = run_assignment_experiment(cfg);
    REQUIRE(cells.size() == 2);
    for (const auto& c : cells) {
      CAPTURE(to_string(pipe));
      CHECK(c.stats.n_failed == 0);
      CHECK(c.failures.size() == c.stats.n_failed);
      CHECK(c.positive_gaps == 0);
      CHECK(c.stats.average <= 0.0);
      CHECK(c.icn_iterations.size() + c.stats.n_failed == 50);
      CHECK(c.sa_iterations.size() == (pipe == Pipeline::SaThenIcn ? c.icn_iterations.size() : 0u));
    }
  }
}

TEST_CASE("softassign overflow is an instance failure") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Assignment;
  cfg.n_values = {3};
  cfg.samples = 5;
  cfg.pipeline = Pipeline::SaThenIcn;
  cfg.tau = 1e-3;  // exponents up to 1000
  cfg.output = scratch("overflow");
  const auto cells = run_assignment_experiment(cfg);
  CHECK(cells[0].stats.n_failed == 5);
  write_assignment_outputs(cfg, cells);
  CHECK(std::filesystem::exists(cfg.output / "failures" / "assignment_n3_i0.csv"));
  CHECK(std::filesystem::exists(cfg.output / "failures" / "assignment_n3_i0.json"));
  std::filesystem::remove_all(cfg.output);
}

TEST_CASE("conjecture suite") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::Conjectures;
  cfg.samples = 200;
  cfg.conj_n_max = 12;
  const auto r = run_conjecture_suite(cfg);
  CHECK(r.ql1_violations == 0);
  CHECK(r.l1_violations == 0);
  CHECK(r.converged_binary == 200);
  CHECK(r.maximal == 200);
  CHECK(r.min_ql1_slack >= 0.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = conjecture_instance(seed, 3, 32);
    CHECK(is_connected(g.adjacency));
    CHECK((g.size() >= 3 && g.size() <= 32));
    CHECK(g.weights == conjecture_instance(seed, 3, 32).weights);
  }
}

TEST_CASE("single run") {
  ExperimentConfig cfg;
  cfg.activation = Activation::identity();
  const auto r = run_single(WeightedGraph(path_graph(3), {1, 1, 1}), cfg);
  CHECK(*r.rounded_set == NodeSet{0, 2});
  cfg.activation = Activation::power(1.5, 0);
  CHECK(*run_single(WeightedGraph(complete_graph(2), {2, 1}), cfg).rounded_set == NodeSet{0});
  CHECK_THROWS_AS(run_single(WeightedGraph(AdjacencyMatrix(1), {0.0}), cfg), NonNormalizable);
}

TEST_CASE("census outputs") {
  ExperimentConfig cfg;
  cfg.output = scratch("census");
  const auto stats = write_census_outputs(cfg, census(4, 5));
  CHECK(stats.rfind("size,connected,candidates,certified,isolated\n", 0) == 0);
  CHECK(std::filesystem::exists(cfg.output / "census.csv"));
  std::filesystem::remove_all(cfg.output);
}
