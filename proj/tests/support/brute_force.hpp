#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "damage_lab/graph.hpp"

namespace damage_lab::testing {

// Isomorphism by trying every bijection; no pruning, no canonical forms.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (Vertex u = 0; u < a.order() && same; ++u) {
      for (Vertex v = u + 1; v < a.order() && same; ++v) {
        same = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Labelled graph whose i-th upper-triangle pair (row-major) is set by bit i.
inline Graph labelled_graph(int n, std::uint64_t bits) {
  std::vector<Edge> edges;
  int i = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++i) {
      if ((bits >> i) & 1U) edges.emplace_back(u, v);
    }
  }
  return build_from_edge_list(n, edges);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace damage_lab::testing
