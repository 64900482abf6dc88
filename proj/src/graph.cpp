#include "damage_lab/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace damage_lab {

namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(Graph::kMaxVertices) + "]");
  }
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {
  check_order(order());
  const VertexSet all = vertices();
  for (Vertex v = 0; v < order(); ++v) {
    if ((adj_[v] & ~all) != 0) {
      throw std::invalid_argument("neighbor mask of vertex " +
                                  std::to_string(v) + " points past n");
    }
    if (contains(adj_[v], v)) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    }
    for_each_vertex(adj_[v], [&](Vertex u) {
      if (!contains(adj_[u], v)) {
        throw std::invalid_argument("asymmetric adjacency between " +
                                    std::to_string(v) + " and " +
                                    std::to_string(u));
      }
    });
  }
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < order(); ++v) {
    for_each_vertex(adj_[v] & ~first_n(v + 1), [&](Vertex u) { out.emplace_back(v, u); });
  }
  return out;
}

Graph build_from_edge_list(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    const auto [u, v] = e;
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge " + edge_text(e) +
                                  " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("edge " + edge_text(e) + " is a self-loop");
    adj[u] |= singleton(v);
    adj[v] |= singleton(u);
  }
  return Graph(std::move(adj));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  check_order(shift + h.order());
  std::vector<VertexSet> adj(g.adjacency().begin(), g.adjacency().end());
  for (VertexSet row : h.adjacency()) adj.push_back(row << shift);
  return Graph(std::move(adj));
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<Vertex> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for_each_vertex(keep, [&](Vertex v) { label[v] = next++; });
  std::vector<VertexSet> adj(static_cast<std::size_t>(next), 0);
  for_each_vertex(keep, [&](Vertex v) {
    for_each_vertex(g.neighbors(v) & keep, [&](Vertex u) { adj[label[v]] |= singleton(label[u]); });
  });
  return Graph(std::move(adj));
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  VertexSet seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || contains(seen, p)) {
      throw std::invalid_argument("not a permutation of the vertex set");
    }
    seen |= singleton(p);
  }
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for_each_vertex(g.neighbors(v), [&](Vertex u) { adj[perm[v]] |= singleton(perm[u]); });
  }
  return Graph(std::move(adj));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<VertexSet> component_masks(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet comp = left & (~left + 1);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet grown = 0;
      for_each_vertex(frontier, [&](Vertex v) { grown |= g.neighbors(v); });
      grown &= left & ~comp;
      comp |= grown;
      frontier = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (VertexSet comp : component_masks(g, g.vertices())) {
    auto& list = out.emplace_back();
    for_each_vertex(comp, [&](Vertex v) { list.push_back(v); });
  }
  return out;
}

std::vector<CutVertexEntry> cut_vertex_profile(const Graph& g) {
  std::vector<CutVertexEntry> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    CutVertexEntry entry{v, 0, 0, 0};
    for (VertexSet comp : component_masks(g, g.vertices() & ~singleton(v))) {
      ++entry.components;
      if (popcount(comp) >= 2) ++entry.nontrivial_components;
      if ((comp & g.neighbors(v)) != 0) ++entry.attached_components;
    }
    out.push_back(entry);
  }
  return out;
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

bool is_threshold_by_peeling(const Graph& g) {
  VertexSet alive = g.vertices();
  while (popcount(alive) > 1) {
    const int others = popcount(alive) - 1;
    bool removed = false;
    for_each_vertex(alive, [&](Vertex v) {
      if (removed) return;
      const int d = popcount(g.neighbors(v) & alive);
      if (d == 0 || d == others) {
        alive &= ~singleton(v);
        removed = true;
      }
    });
    if (!removed) return false;
  }
  return true;
}

bool is_threshold_by_forbidden_subgraphs(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const VertexSet quad = singleton(a) | singleton(b) | singleton(c) | singleton(d);
          int degrees[4];
          int edge_ends = 0;
          int i = 0;
          for (Vertex v : {a, b, c, d}) {
            degrees[i] = popcount(g.neighbors(v) & quad);
            edge_ends += degrees[i++];
          }
          std::sort(std::begin(degrees), std::end(degrees));
          const int m = edge_ends / 2;
          const bool two_k2 = m == 2 && degrees[0] == 1 && degrees[3] == 1;
          const bool p4 = m == 3 && degrees[0] == 1 && degrees[1] == 1 && degrees[3] == 2;
          const bool c4 = m == 4 && degrees[0] == 2 && degrees[3] == 2;
          if (two_k2 || p4 || c4) return false;
        }
      }
    }
  }
  return true;
}

bool is_threshold(const Graph& g) {
  const bool peeled = is_threshold_by_peeling(g);
  if (peeled != is_threshold_by_forbidden_subgraphs(g)) {
    throw std::logic_error("threshold tests disagree on graph with " +
                           std::to_string(g.order()) + " vertices");
  }
  return peeled;
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::invalid_argument("edge list: vertex count " + std::to_string(n) + " out of range");
  }
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge list: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace damage_lab
