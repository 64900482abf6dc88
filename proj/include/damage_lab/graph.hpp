#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace damage_lab {

using Vertex = int;

// Bit v set <=> vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet set, Vertex v) { return (set >> v) & 1U; }
inline constexpr int popcount(VertexSet set) { return std::popcount(set); }
inline constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Calls fn(v) for every member of set in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet set, Fn&& fn) {
  while (set != 0) {
    fn(static_cast<Vertex>(std::countr_zero(set)));
    set &= set - 1;
  }
}

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1 with n >= 1.
///
/// Adjacency is one neighbor bitmask per vertex, so n is capped at
/// kMaxVertices. Instances are immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Takes ownership of per-vertex neighbor masks. Throws std::invalid_argument
  /// if the masks contain a self-loop, are asymmetric, or point past n.
  explicit Graph(std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  VertexSet vertices() const { return first_n(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[v] | singleton(v); }
  bool adjacent(Vertex u, Vertex v) const { return contains(adj_[u], v); }
  int degree(Vertex v) const { return popcount(adj_[v]); }

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  std::span<const VertexSet> adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Builds a graph from an edge list; duplicate edges collapse. Throws
/// std::invalid_argument naming the offending edge on a self-loop or an
/// endpoint outside [0, n).
Graph build_from_edge_list(int n, std::span<const Edge> edges);

/// Vertex-disjoint union; h's labels are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
Graph permute(const Graph& g, std::span<const Vertex> perm);

int max_degree(const Graph& g);

/// Connected components restricted to `within`, as vertex masks ordered by
/// smallest member.
std::vector<VertexSet> component_masks(const Graph& g, VertexSet within);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

struct CutVertexEntry {
  Vertex vertex;
  int components;              // components of G - v
  int nontrivial_components;   // those with at least two vertices
  int attached_components;     // those containing a neighbor of v
  friend bool operator==(const CutVertexEntry&, const CutVertexEntry&) = default;
};

/// One entry per vertex describing G - v.
std::vector<CutVertexEntry> cut_vertex_profile(const Graph& g);

int isolated_count(const Graph& g);

/// Threshold test by repeatedly deleting an isolated or dominating vertex.
bool is_threshold_by_peeling(const Graph& g);

/// Threshold test by searching every 4-subset for an induced P4, C4 or 2K2.
bool is_threshold_by_forbidden_subgraphs(const Graph& g);

/// Runs both threshold tests and throws std::logic_error if they disagree.
bool is_threshold(const Graph& g);

/// Edge-list text: "n m" on the first line, then m lines "u v".
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace damage_lab
