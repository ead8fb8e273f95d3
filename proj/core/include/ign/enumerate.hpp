#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ign/graph.hpp"

namespace ign {

/// Largest node count accepted by the exhaustive enumeration routines.
inline constexpr std::size_t kMaxEnumerationNodes = 7;

/// Upper-triangle adjacency bits in row-major pair order (0,1), (0,2), ...,
/// (n-2,n-1), first pair in the most significant position, so comparing codes
/// numerically compares the bit strings lexicographically.
std::uint64_t adjacency_code(const AdjacencyMatrix& a);
AdjacencyMatrix from_adjacency_code(std::uint64_t code, std::size_t n);
/// The code rendered as a '0'/'1' string of length n(n-1)/2.
std::string code_string(std::uint64_t code, std::size_t n);

/// Lexicographically minimal adjacency code over all node permutations.
/// Brute force; throws SizeLimitExceeded above kMaxEnumerationNodes.
std::uint64_t canonical_code(const AdjacencyMatrix& a);
AdjacencyMatrix canonical_form(const AdjacencyMatrix& a);

/// One representative (in canonical form) per isomorphism class of connected
/// simple graphs on n nodes, sorted by canonical code. 1 <= n <= 7.
std::vector<AdjacencyMatrix> enumerate_connected_graphs(std::size_t n);

}  // namespace ign
