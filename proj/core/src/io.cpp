#include "ign/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ign/error.hpp"
#include "json.hpp"

namespace ign {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, int line, const char* what) {
  T v{};
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'", line);
  return v;
}

LoadedGraph finish(std::size_t n, const std::vector<Edge>& edges, Vector weights, int weight_line) {
  AdjacencyMatrix a(n);
  for (auto [i, j] : edges) a.add_edge(i, j);
  LoadedGraph out;
  try {
    out.graph = WeightedGraph(std::move(a), std::move(weights));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), weight_line);
  }
  if (!is_normalizable(out.graph.adjacency, out.graph.weights))
    out.warnings.emplace_back("weights are not normalizable: some node has zero total weight on its closed neighbourhood");
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json weights_json(std::span<const double> x) { return json(std::vector<double>(x.begin(), x.end())); }

}  // namespace

LoadedGraph parse_wgraph(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    const auto t = trim(raw.substr(0, raw.find('#')));  // '#' starts a comment anywhere
    if (t.empty()) continue;
    lines.emplace_back(lineno, t);
  }
  if (lines.empty()) throw ParseError("empty graph file", 0);

  const auto head = split_ws(lines[0].second);
  if (head.size() != 2) throw ParseError("expected 'n m'", lines[0].first);
  const auto n = parse_number<std::size_t>(head[0], lines[0].first, "node count");
  const auto m = parse_number<std::size_t>(head[1], lines[0].first, "edge count");
  if (n == 0) throw ParseError("graph needs at least one node", lines[0].first);
  if (lines.size() != m + 2)
    throw ParseError("expected " + std::to_string(m) + " edge lines and one weight line, found " +
                         std::to_string(lines.size() - 1) + " lines",
                     lines.back().first);

  std::vector<Edge> edges;
  AdjacencyMatrix seen(n);
  for (std::size_t k = 1; k <= m; ++k) {
    const int ln = lines[k].first;
    const auto tok = split_ws(lines[k].second);
    if (tok.size() != 2) throw ParseError("expected 'i j'", ln);
    const auto i = parse_number<std::size_t>(tok[0], ln, "node index");
    const auto j = parse_number<std::size_t>(tok[1], ln, "node index");
    if (i >= n || j >= n) throw ParseError("node index out of range", ln);
    if (i == j) throw ParseError("self-loop", ln);
    if (seen(i, j)) throw ParseError("duplicate edge", ln);
    seen.add_edge(i, j);
    edges.emplace_back(i, j);
  }

  const int wl = lines.back().first;
  const auto tok = split_ws(lines.back().second);
  if (tok.size() != n) throw ParseError("expected " + std::to_string(n) + " weights", wl);
  Vector w;
  w.reserve(n);
  for (auto t : tok) w.push_back(parse_number<double>(t, wl, "weight"));
  return finish(n, edges, std::move(w), wl);
}

LoadedGraph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    if (n == 0) throw ParseError("graph needs at least one node", 0);
    std::vector<Edge> edges;
    AdjacencyMatrix seen(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair", 0);
      const auto a = e[0].get<std::size_t>();
      const auto b = e[1].get<std::size_t>();
      if (a >= n || b >= n) throw ParseError("node index out of range", 0);
      if (a == b) throw ParseError("self-loop", 0);
      if (seen(a, b)) throw ParseError("duplicate edge", 0);
      seen.add_edge(a, b);
      edges.emplace_back(a, b);
    }
    return finish(n, edges, j.at("weights").get<Vector>(), 0);
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

LoadedGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_wgraph(text);
}

LoadedGraph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

std::string to_wgraph(const WeightedGraph& g) {
  std::ostringstream os;
  os << "# wgraph v1\n" << g.size() << ' ' << g.adjacency.edge_count() << '\n';
  for (auto [i, j] : g.adjacency.edges()) os << i << ' ' << j << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << fmt(g.weights[i]);
  os << '\n';
  return os.str();
}

std::string to_graph_json(const WeightedGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.adjacency.edges()) edges.push_back({i, j});
  const json j{{"n", g.size()}, {"edges", edges}, {"weights", weights_json(g.weights)}};
  return j.dump() + "\n";
}

std::string report_json(const ConvergenceReport& r) {
  json j;
  j["final_weights"] = weights_json(r.final_weights);
  j["iterations"] = r.iterations;
  j["stop_reason"] = to_string(r.stop_reason);
  j["rounded_set"] = r.rounded_set ? json(r.rounded_set->members()) : json(nullptr);
  j["rounded_class"] = r.rounded_class ? json(to_string(*r.rounded_class)) : json(nullptr);
  j["non_normalizable"] = r.non_normalizable;
  if (r.l1_trace) j["l1_trace"] = *r.l1_trace;
  return j.dump(2) + "\n";
}

std::string trace_csv(const ConvergenceReport& r) {
  if (!r.trace || r.trace->empty()) return {};
  std::ostringstream os;
  const std::size_t n = r.trace->front().size();
  os << "iteration";
  for (std::size_t i = 0; i < n; ++i) os << ",x_" << i;
  os << ",l1\n";
  for (std::size_t k = 0; k < r.trace->size(); ++k) {
    const auto& x = (*r.trace)[k];
    os << k;
    for (double v : x) os << ',' << fmt(v);
    os << ',' << fmt(l1_norm(x)) << '\n';
  }
  return os.str();
}

std::string assignment_report_json(const AssignmentReport& r) {
  json j;
  j["permutation"] = r.permutation ? json(*r.permutation) : json(nullptr);
  j["iterations"] = r.iterations;
  j["stop_reason"] = to_string(r.stop_reason);
  j["non_normalizable"] = r.non_normalizable;
  j["final_matrix"] = json::parse(matrix_json(r.final_matrix));
  return j.dump(2) + "\n";
}

Eigen::MatrixXd parse_matrix_csv(std::string_view text) {
  std::vector<Vector> rows;
  int lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    Vector row;
    std::string_view rest = line;
    while (true) {
      const auto c = rest.find(',');
      row.push_back(parse_number<double>(trim(rest.substr(0, c)), lineno, "matrix entry"));
      if (c == std::string_view::npos) break;
      rest = rest.substr(c + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix row", lineno);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix", 0);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  return m;
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) os << (k ? "," : "") << fmt(m(i, k));
    os << '\n';
  }
  return os.str();
}

Eigen::MatrixXd parse_matrix_json(std::string_view text) {
  std::vector<Vector> rows;
  try {
    rows = json::parse(text).get<std::vector<Vector>>();
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  if (rows.empty()) throw ParseError("empty matrix", 0);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) throw ParseError("ragged matrix row " + std::to_string(i), 0);
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return m;
}

std::string matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace ign
