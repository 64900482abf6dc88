#include <random>
#include <sstream>

#include "damage_lab/canonical.hpp"
#include "damage_lab/family.hpp"
#include "damage_lab/graph.hpp"
#include "damage_lab/graph6.hpp"
#include "doctest.h"
#include "support/brute_force.hpp"

using namespace damage_lab;

namespace {

Graph edges(int n, std::vector<Edge> list) { return build_from_edge_list(n, list); }

void check_simple(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.adjacent(v, v));
    for (Vertex u = 0; u < g.order(); ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

}  // namespace

TEST_CASE("edge lists build exactly the given simple graph") {
  const Graph p2 = edges(2, {{0, 1}});
  CHECK(p2.order() == 2);
  CHECK(p2.size() == 1);

  const Graph p4 = edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4 == family(FamilySpec::path(4)));

  const Graph e3 = edges(3, {});
  CHECK(e3.order() == 3);
  CHECK(e3.size() == 0);

  CHECK(edges(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);
}

TEST_CASE("edge lists reject loops and stray endpoints") {
  CHECK_THROWS_WITH_AS(edges(3, {{1, 1}}), doctest::Contains("(1,1)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(edges(3, {{0, 3}}), doctest::Contains("(0,3)"), std::invalid_argument);
  CHECK_THROWS_AS(edges(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(Graph(std::vector<VertexSet>{0b10, 0b00}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(std::vector<VertexSet>{0b01}), std::invalid_argument);
}

TEST_CASE("edge-list text round-trips") {
  const Graph g = family(FamilySpec::spider({2, 1, 1}));
  std::istringstream in(write_edge_list(g));
  CHECK(read_edge_list(in) == g);

  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_list), std::invalid_argument);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), std::invalid_argument);
}

TEST_CASE("graph6 decodes the reference strings") {
  CHECK(parse_graph6("A_") == family(FamilySpec::complete(2)));
  CHECK(parse_graph6("D??") == family(FamilySpec::empty(5)));
  CHECK(parse_graph6(">>graph6<<A_\n") == family(FamilySpec::complete(2)));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(write_graph6(family(FamilySpec::complete(2))) == "A_");
  CHECK(write_graph6(family(FamilySpec::empty(5))) == "D??");
}

TEST_CASE("graph6 round-trips canonical inputs and large orders") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const std::string text = write_graph6(g);
      CHECK(write_graph6(parse_graph6(text)) == text);
    }
  }
  for (int n : {62, 63, 64}) {
    const Graph g = family(FamilySpec::cycle(n));
    const std::string text = write_graph6(g);
    CHECK(text[0] == (n <= 62 ? static_cast<char>(n + 63) : '~'));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph6("A"), doctest::Contains("truncated"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph6("A_?"), doctest::Contains("trailing"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph6("Aa"), doctest::Contains("padding"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("A "), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("~?"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);
}

TEST_CASE("family instances have the documented labelling") {
  CHECK(family(FamilySpec::path(5)).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});

  const Graph spider = family(FamilySpec::spider({2, 2, 2}));
  CHECK(spider.order() == 7);
  CHECK(spider.degree(0) == 3);
  CHECK(spider.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {5, 6}});

  const Graph wheel = family(FamilySpec::wheel(4));
  CHECK(wheel.order() == 5);
  CHECK(wheel.degree(0) == 4);
  for (Vertex v = 1; v <= 4; ++v) CHECK(wheel.degree(v) == 3);

  const Graph star = family(FamilySpec::star(4));
  CHECK(star.degree(0) == 4);
  CHECK(star.size() == 4);

  // '1' joins everything so far, '0' adds an isolated vertex.
  const Graph t = family(FamilySpec::threshold("0101"));
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("family edge counts") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(family(FamilySpec::path(n)).size() == n - 1);
    CHECK(family(FamilySpec::complete(n)).size() == n * (n - 1) / 2);
    CHECK(family(FamilySpec::empty(n)).size() == 0);
    if (n >= 3) CHECK(family(FamilySpec::cycle(n)).size() == n);
    check_simple(family(FamilySpec::complete(n)));
  }
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(family(FamilySpec::cycle(2)), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::spider({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::spider({2, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::threshold("")), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::threshold("1")), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::threshold("0201")), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::path(0)), std::invalid_argument);
  CHECK_THROWS_AS(family(FamilySpec::wheel(2)), std::invalid_argument);
}

TEST_CASE("family text form") {
  for (const char* text : {"path:5", "cycle:4", "complete:6", "empty:3", "star:4", "wheel:4", "spider:3,2,2",
                           "threshold:0101", "union:complete:2+empty:1"}) {
    CHECK(to_string(parse_family(text)) == text);
  }
  CHECK(parse_family("spider:1,2,3") == FamilySpec::spider({3, 2, 1}));
  CHECK(family(parse_family("union:complete:2+union:complete:2+empty:1")).order() == 5);
  CHECK_THROWS_AS(parse_family("path"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("path:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("dodecahedron:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("union:path:2"), std::invalid_argument);
}

TEST_CASE("disjoint union shifts the second operand") {
  const Graph k2 = family(FamilySpec::complete(2));
  const Graph k1 = Graph(1);
  const Graph a = disjoint_union(k2, k1);
  CHECK(a.order() == 3);
  CHECK(a.size() == 1);
  const Graph b = disjoint_union(k2, k2);
  CHECK(b.order() == 4);
  CHECK(b.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

  const Graph c5 = family(FamilySpec::cycle(5));
  CHECK(components(disjoint_union(c5, k1)).size() == components(c5).size() + 1);
}

TEST_CASE("maximum degree") {
  CHECK(max_degree(family(FamilySpec::path(5))) == 2);
  CHECK(max_degree(family(FamilySpec::spider({2, 2, 2}))) == 3);
  CHECK(max_degree(family(FamilySpec::complete(6))) == 5);
  CHECK(max_degree(Graph(1)) == 0);
}

TEST_CASE("components are sorted vertex lists") {
  const Graph g = family(parse_family("union:complete:2+union:complete:2+empty:1"));
  CHECK(components(g) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4}});
  CHECK(components(family(FamilySpec::cycle(5))).size() == 1);
  CHECK(components(Graph(4)) == std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}});
}

TEST_CASE("cut-vertex profile") {
  const auto star = cut_vertex_profile(family(FamilySpec::spider({1, 1, 1})));
  CHECK(star[0].vertex == 0);
  CHECK(star[0].components == 3);
  CHECK(star[0].nontrivial_components == 0);

  const auto spider = cut_vertex_profile(family(FamilySpec::spider({2, 2, 2})));
  CHECK(spider[0].components == 3);
  CHECK(spider[0].nontrivial_components == 3);

  const auto p5 = cut_vertex_profile(family(FamilySpec::path(5)));
  CHECK(p5.size() == 5);
  CHECK(p5[2].vertex == 2);
  CHECK(p5[2].components == 2);
  CHECK(p5[2].nontrivial_components == 2);
  CHECK(p5[0].components == 1);

  // Components of G - v not touching v are not attached to it.
  const auto loose = cut_vertex_profile(family(parse_family("union:path:3+empty:2")));
  CHECK(loose[1].components == 4);
  CHECK(loose[1].attached_components == 2);
  CHECK(loose[3].attached_components == 0);
}

TEST_CASE("threshold recognition") {
  CHECK(is_threshold(family(FamilySpec::star(4))));
  CHECK_FALSE(is_threshold(family(FamilySpec::path(4))));
  CHECK_FALSE(is_threshold(family(FamilySpec::cycle(4))));
  CHECK_FALSE(is_threshold(family(parse_family("union:complete:2+complete:2"))));
  CHECK(is_threshold(family(FamilySpec::threshold("0010110"))));
  CHECK(is_threshold(family(FamilySpec::complete(5))));
  CHECK(is_threshold(Graph(5)));
}

TEST_CASE("both threshold tests agree on every graph up to seven vertices") {
  for (int n = 1; n <= kEnumerateMaxVertices; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      REQUIRE(is_threshold_by_peeling(g) == is_threshold_by_forbidden_subgraphs(g));
    }
  }
}

TEST_CASE("class counts of small graphs") {
  const std::vector<std::size_t> known = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= kEnumerateMaxVertices; ++n) {
    CHECK(enumerate_nonisomorphic(n).size() == known[static_cast<std::size_t>(n - 1)]);
  }
  CHECK_THROWS_AS(enumerate_nonisomorphic(8), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_nonisomorphic(0), std::invalid_argument);
}

TEST_CASE("class counts match brute force over labelled graphs") {
  for (int n : {3, 4}) {
    std::vector<Graph> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      const Graph g = testing::labelled_graph(n, bits);
      const bool seen = std::any_of(classes.begin(), classes.end(),
                                    [&](const Graph& c) { return testing::brute_isomorphic(c, g); });
      if (!seen) classes.push_back(g);
    }
    CHECK(classes.size() == enumerate_nonisomorphic(n).size());
  }
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic") {
  for (int n = 1; n <= 5; ++n) {
    const auto graphs = enumerate_nonisomorphic(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      CHECK(canonical_form(graphs[i]) == graphs[i]);
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        CHECK_FALSE(testing::brute_isomorphic(graphs[i], graphs[j]));
      }
    }
  }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(7);
  for (int n = 1; n <= kCanonicalMaxVertices; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = testing::labelled_graph(n, rng());
      const auto perm = testing::random_permutation(n, rng);
      const Graph h = permute(g, perm);
      CHECK(canonical_graph6(g) == canonical_graph6(h));
      CHECK(are_isomorphic(g, h));
      const CanonicalLabelling lab = canonical_labelling(g);
      CHECK(permute(g, lab.perm) == canonical_form(g));
    }
  }
  CHECK_FALSE(are_isomorphic(family(FamilySpec::path(4)), family(FamilySpec::star(3))));
  CHECK_THROWS_AS(canonical_form(Graph(9)), std::invalid_argument);
}
