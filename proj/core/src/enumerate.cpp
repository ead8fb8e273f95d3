#include "ign/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "ign/error.hpp"

namespace ign {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

void require_enumerable(std::size_t n) {
  if (n > kMaxEnumerationNodes)
    throw SizeLimitExceeded("exhaustive graph enumeration is limited to " + std::to_string(kMaxEnumerationNodes) +
                            " nodes");
}

}  // namespace

std::uint64_t adjacency_code(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (pair_count(n) > 64) throw SizeLimitExceeded("adjacency code needs n(n-1)/2 <= 64");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = code << 1 | (a(i, j) ? 1U : 0U);
  return code;
}

AdjacencyMatrix from_adjacency_code(std::uint64_t code, std::size_t n) {
  const std::size_t pairs = pair_count(n);
  if (pairs > 64) throw SizeLimitExceeded("adjacency code needs n(n-1)/2 <= 64");
  AdjacencyMatrix a(n);
  std::size_t bit = pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      --bit;
      if (code >> bit & 1U) a.add_edge(i, j);
    }
  return a;
}

std::string code_string(std::uint64_t code, std::size_t n) {
  const std::size_t pairs = pair_count(n);
  std::string s(pairs, '0');
  for (std::size_t k = 0; k < pairs; ++k)
    if (code >> (pairs - 1 - k) & 1U) s[k] = '1';
  return s;
}

std::uint64_t canonical_code(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  require_enumerable(n);
  if (n < 2) return 0;
  std::array<std::size_t, kMaxEnumerationNodes> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  std::uint64_t best = adjacency_code(a);
  do {
    // Build the permuted code most significant bit first and stop as soon as
    // its prefix exceeds the best prefix.
    std::uint64_t code = 0;
    bool smaller = false;
    bool abandoned = false;
    std::size_t bit = pair_count(n);
    for (std::size_t i = 0; i < n && !abandoned; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        --bit;
        const std::uint64_t b = a(perm[i], perm[j]) ? 1U : 0U;
        code = code << 1 | b;
        if (!smaller) {
          const std::uint64_t bb = best >> bit & 1U;
          if (b > bb) {
            abandoned = true;
            break;
          }
          if (b < bb) smaller = true;
        }
      }
    }
    if (!abandoned && smaller) best = code;
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return best;
}

AdjacencyMatrix canonical_form(const AdjacencyMatrix& a) { return from_adjacency_code(canonical_code(a), a.size()); }

std::vector<AdjacencyMatrix> enumerate_connected_graphs(std::size_t n) {
  if (n < 1) throw InvalidArgument("enumerate_connected_graphs needs n >= 1");
  require_enumerable(n);
  // Every connected graph has a non-cut vertex (e.g. a leaf of a spanning
  // tree), so it arises from a connected graph on n-1 nodes by attaching a
  // new node to a nonempty neighbour set.
  std::vector<std::uint64_t> level{0};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const AdjacencyMatrix base = from_adjacency_code(code, k - 1);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        AdjacencyMatrix g(k);
        for (const auto& [i, j] : base.edges()) g.add_edge(i, j);
        for (std::size_t i = 0; i + 1 < k; ++i)
          if (mask >> i & 1U) g.add_edge(i, k - 1);
        next.insert(canonical_code(g));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<AdjacencyMatrix> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(from_adjacency_code(code, n));
  return out;
}

}  // namespace ign
