#include "damage_lab/canonical.hpp"

#include <map>
#include <stdexcept>

#include "damage_lab/graph6.hpp"

namespace damage_lab {

namespace {

struct Search {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<Vertex> order;  // order[position] = original vertex
  std::vector<Vertex> best_order;
  std::uint64_t best = 0;
  bool have_best = false;

  void extend(int position, VertexSet used, std::uint64_t prefix, int prefix_bits) {
    if (position == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        best_order = order;
        have_best = true;
      }
      return;
    }
    for_each_vertex(g.vertices() & ~used, [&](Vertex v) {
      std::uint64_t code = prefix;
      for (int i = 0; i < position; ++i) code = (code << 1) | (g.adjacent(order[i], v) ? 1U : 0U);
      const int bits = prefix_bits + position;
      if (have_best && bits > 0 && code > (best >> (total_bits - bits))) return;
      order[position] = v;
      extend(position + 1, used | singleton(v), code, bits);
    });
  }
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxVertices) {
    throw std::invalid_argument("canonical form limited to " +
                                std::to_string(kCanonicalMaxVertices) + " vertices");
  }
  Search search{g, n, n * (n - 1) / 2, std::vector<Vertex>(n), {}, 0, false};
  search.extend(0, 0, 0, 0);
  CanonicalLabelling out;
  out.code = search.best;
  out.perm.assign(n, 0);
  for (int position = 0; position < n; ++position) out.perm[search.best_order[position]] = position;
  return out;
}

Graph canonical_form(const Graph& g) { return permute(g, canonical_labelling(g).perm); }

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_labelling(a).code == canonical_labelling(b).code;
}

std::vector<Graph> enumerate_nonisomorphic(int n) {
  if (n < 1 || n > kEnumerateMaxVertices) {
    throw std::invalid_argument("enumeration limited to 1.." +
                                std::to_string(kEnumerateMaxVertices) + " vertices");
  }
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& base : level) {
      for (VertexSet attach = 0; attach < (VertexSet{1} << (m - 1)); ++attach) {
        std::vector<VertexSet> adj(base.adjacency().begin(), base.adjacency().end());
        for_each_vertex(attach, [&](Vertex v) { adj[v] |= singleton(m - 1); });
        adj.push_back(attach);
        Graph grown(std::move(adj));
        auto labelling = canonical_labelling(grown);
        if (!classes.contains(labelling.code)) {
          classes.emplace(labelling.code, permute(grown, labelling.perm));
        }
      }
    }
    level.clear();
    for (auto& [code, graph] : classes) level.push_back(std::move(graph));
  }
  return level;
}

}  // namespace damage_lab
