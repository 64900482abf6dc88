#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "damage_lab/graph.hpp"

namespace damage_lab {

// Canonical forms by exhaustive permutation minimisation (with prefix pruning).
// The canonical labelling is the one whose upper-triangle adjacency bitstring,
// read in graph6 column order, is lexicographically smallest.

inline constexpr int kCanonicalMaxVertices = 8;
inline constexpr int kEnumerateMaxVertices = 7;

struct CanonicalLabelling {
  std::uint64_t code = 0;      // bitstring packed most-significant-first
  std::vector<Vertex> perm;    // perm[v] = canonical label of v
};

/// Throws std::invalid_argument above kCanonicalMaxVertices.
CanonicalLabelling canonical_labelling(const Graph& g);
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class on n vertices, sorted
/// by canonical code. Throws std::invalid_argument for n outside
/// [1, kEnumerateMaxVertices].
std::vector<Graph> enumerate_nonisomorphic(int n);

}  // namespace damage_lab
