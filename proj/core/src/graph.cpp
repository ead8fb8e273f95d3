#include "ign/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ign/error.hpp"
#include "ign/random.hpp"

namespace ign {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n) : n_(n), bits_(n * n, 0), adj_(n) {}

AdjacencyMatrix AdjacencyMatrix::from_edges(std::size_t n, std::span<const Edge> edges) {
  AdjacencyMatrix a(n);
  for (const auto& [i, j] : edges) a.add_edge(i, j);
  return a;
}

AdjacencyMatrix AdjacencyMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidArgument("adjacency matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw InvalidArgument("adjacency entries must be 0 or 1");
      if (i == j && v != 0) throw InvalidArgument("adjacency diagonal must be zero");
      if (v != rows[j].at(i)) throw InvalidArgument("adjacency matrix is not symmetric");
      if (v == 1 && i < j) a.add_edge(i, j);
    }
  }
  return a;
}

std::vector<Edge> AdjacencyMatrix::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j : adj_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

void AdjacencyMatrix::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw InvalidArgument("edge endpoint out of range");
  if (i == j) throw InvalidArgument("self-loops are not allowed");
  if (bits_[i * n_ + j]) return;
  bits_[i * n_ + j] = bits_[j * n_ + i] = 1;
  adj_[i].insert(std::upper_bound(adj_[i].begin(), adj_[i].end(), j), j);
  adj_[j].insert(std::upper_bound(adj_[j].begin(), adj_[j].end(), i), i);
  ++m_;
}

NodeSet::NodeSet(std::initializer_list<std::size_t> members) : NodeSet(std::vector<std::size_t>(members)) {}

NodeSet::NodeSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::from_threshold(std::span<const double> x, double threshold) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] >= threshold) m.push_back(i);
  return NodeSet(std::move(m));
}

NodeSet NodeSet::support(std::span<const double> x, double tolerance) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > tolerance) m.push_back(i);
  return NodeSet(std::move(m));
}

NodeSet NodeSet::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) m.push_back(i);
  return NodeSet(std::move(m));
}

bool NodeSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Vector NodeSet::indicator(std::size_t n) const {
  Vector x(n, 0.0);
  for (std::size_t i : members_) {
    if (i >= n) throw InvalidArgument("node set member out of range");
    x[i] = 1.0;
  }
  return x;
}

std::vector<bool> NodeSet::mask(std::size_t n) const {
  std::vector<bool> m(n, false);
  for (std::size_t i : members_) {
    if (i >= n) throw InvalidArgument("node set member out of range");
    m[i] = true;
  }
  return m;
}

std::string to_string(SetClassification c) {
  switch (c) {
    case SetClassification::NotIndependent: return "NotIndependent";
    case SetClassification::IndependentNonMaximal: return "IndependentNonMaximal";
    case SetClassification::MaximalIndependent: return "MaximalIndependent";
  }
  return "?";
}

void validate_weights(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument("weights must be finite");
    if (v < 0.0) throw InvalidArgument("weights must be nonnegative");
  }
}

WeightedGraph::WeightedGraph(AdjacencyMatrix a, Vector w) : adjacency(std::move(a)), weights(std::move(w)) {
  if (weights.size() != adjacency.size()) throw InvalidArgument("weight vector length differs from node count");
  validate_weights(weights);
}

std::size_t density(const AdjacencyMatrix& a, const NodeSet& s) {
  const auto in_s = s.mask(a.size());
  std::size_t best = kDensityAllNodes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_s[i]) continue;
    std::size_t c = 0;
    for (std::size_t j : a.neighbors(i)) c += in_s[j] ? 1 : 0;
    best = std::min(best, c);
  }
  return best;
}

SetClassification classify_set(const AdjacencyMatrix& a, const NodeSet& s) {
  const auto in_s = s.mask(a.size());
  for (std::size_t i : s)
    for (std::size_t j : a.neighbors(i))
      if (in_s[j]) return SetClassification::NotIndependent;
  return density(a, s) >= 1 ? SetClassification::MaximalIndependent : SetClassification::IndependentNonMaximal;
}

bool is_normalizable(const AdjacencyMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw InvalidArgument("weight vector length differs from node count");
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = x[i];
    for (std::size_t j : a.neighbors(i)) d += x[j];
    if (!(d > 0.0)) return false;
  }
  return true;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const NodeSet& s) {
  if (s.empty()) throw InvalidArgument("induced subgraph of an empty node set");
  const std::size_t k = s.size();
  const auto& m = s.members();
  if (m.back() >= g.size()) throw InvalidArgument("node set member out of range");
  AdjacencyMatrix sub(k);
  Vector w(k);
  for (std::size_t a = 0; a < k; ++a) {
    w[a] = g.weights[m[a]];
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.adjacency(m[a], m[b])) sub.add_edge(a, b);
  }
  return WeightedGraph(std::move(sub), std::move(w));
}

WeightedGraph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("gen_gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) a.add_edge(i, j);
  Vector w(n);
  for (auto& v : w) v = uniform_open_closed(rng);
  return WeightedGraph(std::move(a), std::move(w));
}

bool is_connected(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : a.neighbors(i)) {
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

bool is_tree(const AdjacencyMatrix& a) { return a.size() >= 1 && a.edge_count() + 1 == a.size() && is_connected(a); }

bool is_regular(const AdjacencyMatrix& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a.degree(i) != a.degree(0)) return false;
  return true;
}

std::size_t min_degree(const AdjacencyMatrix& a) {
  std::size_t d = a.size() == 0 ? 0 : a.degree(0);
  for (std::size_t i = 1; i < a.size(); ++i) d = std::min(d, a.degree(i));
  return d;
}

std::size_t max_degree(const AdjacencyMatrix& a) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, a.degree(i));
  return d;
}

AdjacencyMatrix complete_graph(std::size_t n) {
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.add_edge(i, j);
  return a;
}

AdjacencyMatrix path_graph(std::size_t n) {
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a.add_edge(i, i + 1);
  return a;
}

AdjacencyMatrix cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 nodes");
  AdjacencyMatrix a = path_graph(n);
  a.add_edge(n - 1, 0);
  return a;
}

AdjacencyMatrix star_graph(std::size_t n) {
  AdjacencyMatrix a(n);
  for (std::size_t i = 1; i < n; ++i) a.add_edge(0, i);
  return a;
}

std::vector<NodeSet> maximal_independent_sets(const AdjacencyMatrix& a) {
  // Bron-Kerbosch with pivoting, on the complement graph: maximal cliques of
  // the complement are maximal independent sets of a.
  const std::size_t n = a.size();
  std::vector<NodeSet> out;
  std::vector<std::size_t> r;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          out.emplace_back(r);
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* pool : {&p, &x}) {
          for (std::size_t u : *pool) {
            std::size_t c = 0;
            for (std::size_t v : p) c += (u != v && !a(u, v)) ? 1 : 0;
            if (c >= best) {
              best = c;
              pivot = u;
            }
          }
        }
        std::vector<std::size_t> candidates;
        for (std::size_t v : p)
          if (v == pivot || a(pivot, v)) candidates.push_back(v);
        for (std::size_t v : candidates) {
          std::vector<std::size_t> p2, x2;
          for (std::size_t u : p)
            if (u != v && !a(u, v)) p2.push_back(u);
          for (std::size_t u : x)
            if (u != v && !a(u, v)) x2.push_back(u);
          r.push_back(v);
          expand(std::move(p2), std::move(x2));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (n > 0) expand(all, {});
  std::sort(out.begin(), out.end(), [](const NodeSet& l, const NodeSet& rr) { return l.members() < rr.members(); });
  return out;
}

}  // namespace ign
