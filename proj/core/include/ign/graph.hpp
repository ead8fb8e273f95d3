#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ign {

using Vector = std::vector<double>;
using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on nodes 0..n-1: symmetric, binary, zero diagonal.
///
/// Stores both the dense bit matrix (for O(1) adjacency queries) and sorted
/// neighbour lists (for the O(m) neighbourhood sums used by normalization).
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n);

  /// Throws InvalidArgument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  static AdjacencyMatrix from_edges(std::size_t n, std::span<const Edge> edges);
  static AdjacencyMatrix from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Dense rows; validates symmetry, zero diagonal and {0,1} entries.
  static AdjacencyMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return bits_[i * n_ + j] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const noexcept { return adj_[i]; }
  std::size_t degree(std::size_t i) const noexcept { return adj_[i].size(); }
  std::size_t edge_count() const noexcept { return m_; }
  std::vector<Edge> edges() const;

  void add_edge(std::size_t i, std::size_t j);

  bool operator==(const AdjacencyMatrix& other) const { return n_ == other.n_ && bits_ == other.bits_; }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// A subset of {0..n-1}, kept sorted and duplicate free.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<std::size_t> members);
  explicit NodeSet(std::vector<std::size_t> members);

  /// {i : x_i >= threshold}.
  static NodeSet from_threshold(std::span<const double> x, double threshold);
  /// {i : x_i > tolerance}; tolerance 0 gives the exact support.
  static NodeSet support(std::span<const double> x, double tolerance = 0.0);
  /// Set whose indicator is `mask` bit i.
  static NodeSet from_mask(std::uint64_t mask, std::size_t n);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t i) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Binary vector of length n. Throws InvalidArgument if a member is >= n.
  Vector indicator(std::size_t n) const;
  /// Membership flags of length n.
  std::vector<bool> mask(std::size_t n) const;

  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<std::size_t> members_;
};

enum class SetClassification { NotIndependent, IndependentNonMaximal, MaximalIndependent };

std::string to_string(SetClassification c);

/// Adjacency plus a nonnegative finite weight per node.
struct WeightedGraph {
  AdjacencyMatrix adjacency;
  Vector weights;

  WeightedGraph() = default;
  /// Throws InvalidArgument on size mismatch, negative or non-finite weights.
  WeightedGraph(AdjacencyMatrix a, Vector w);

  std::size_t size() const noexcept { return adjacency.size(); }
};

/// Throws InvalidArgument unless every value is finite and >= 0.
void validate_weights(std::span<const double> x);

/// Result of density() when S contains every node (minimum over an empty set).
inline constexpr std::size_t kDensityAllNodes = std::numeric_limits<std::size_t>::max();

/// min over i outside S of |N(i) ∩ S|, or kDensityAllNodes.
std::size_t density(const AdjacencyMatrix& a, const NodeSet& s);

SetClassification classify_set(const AdjacencyMatrix& a, const NodeSet& s);

/// (A+I)x > 0 componentwise.
bool is_normalizable(const AdjacencyMatrix& a, std::span<const double> x);

/// Rows/columns and weights of S, in increasing index order. Empty S throws.
WeightedGraph induced_subgraph(const WeightedGraph& g, const NodeSet& s);

/// Binomial random graph with i.i.d. uniform (0,1] weights.
WeightedGraph gen_gnp(std::size_t n, double p, std::uint64_t seed);

bool is_connected(const AdjacencyMatrix& a);
bool is_tree(const AdjacencyMatrix& a);
bool is_regular(const AdjacencyMatrix& a);
std::size_t min_degree(const AdjacencyMatrix& a);
std::size_t max_degree(const AdjacencyMatrix& a);

AdjacencyMatrix complete_graph(std::size_t n);
AdjacencyMatrix path_graph(std::size_t n);
AdjacencyMatrix cycle_graph(std::size_t n);
/// Node 0 is the centre.
AdjacencyMatrix star_graph(std::size_t n);

/// Every maximal independent set, as found by Bron-Kerbosch on the complement.
std::vector<NodeSet> maximal_independent_sets(const AdjacencyMatrix& a);

}  // namespace ign
