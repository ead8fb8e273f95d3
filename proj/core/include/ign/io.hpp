#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ign/assignment.hpp"
#include "ign/dynamics.hpp"
#include "ign/graph.hpp"

namespace ign {

struct LoadedGraph {
  WeightedGraph graph;
  /// Non-fatal findings, e.g. weights that cannot be normalized.
  std::vector<std::string> warnings;
};

/// Text format:
///   n m
///   i j        (m lines, 0-based)
///   w_0 ... w_{n-1}
/// '#' starts a comment running to the end of the line; blank lines are
/// ignored. Errors carry the 1-based line number.
LoadedGraph parse_wgraph(std::string_view text);
/// {"n": .., "edges": [[i, j], ...], "weights": [...]}
LoadedGraph parse_graph_json(std::string_view text);
/// Picks the JSON reader when the first non-blank character is '{'.
LoadedGraph parse_graph(std::string_view text);
LoadedGraph read_graph_file(const std::filesystem::path& path);

std::string to_wgraph(const WeightedGraph& g);
std::string to_graph_json(const WeightedGraph& g);

std::string report_json(const ConvergenceReport& r);
/// Columns: iteration, x_0 .. x_{n-1}, l1. Empty if the report has no trace.
std::string trace_csv(const ConvergenceReport& r);
std::string assignment_report_json(const AssignmentReport& r);

/// Comma separated rows.
Eigen::MatrixXd parse_matrix_csv(std::string_view text);
std::string matrix_csv(const Eigen::MatrixXd& m);
/// Array of rows.
Eigen::MatrixXd parse_matrix_json(std::string_view text);
std::string matrix_json(const Eigen::MatrixXd& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ign
