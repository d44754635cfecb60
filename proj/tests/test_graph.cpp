#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "orelab/constructions.hpp"
#include "orelab/graph.hpp"
#include "orelab/graph_io.hpp"
#include "orelab/ore.hpp"
#include "orelab/structure.hpp"

using namespace orelab;

namespace {

Graph petersen() {
  const std::vector<Edge> e{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                            {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  return Graph::from_edges(10, e);
}

} // namespace

TEST_CASE("vertex sets behave like sets of small integers") {
  VertexSet s{1, 5, 63};
  CHECK(s.size() == 3);
  CHECK(s.contains(63));
  CHECK_FALSE(s.contains(0));
  CHECK(s.first() == 1);
  CHECK(s.to_vector() == std::vector<int>{1, 5, 63});
  CHECK((s - VertexSet{5}).size() == 2);
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet::range(0).empty());
  CHECK(VertexSet{1, 5}.subset_of(s));
  CHECK_FALSE(s.intersects(VertexSet{2, 3}));
}

TEST_CASE("graph construction validates its input") {
  const std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, twice), std::invalid_argument);
  const std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, out), std::invalid_argument);
  CHECK_THROWS(Graph(65));

  GraphBuilder b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 0);
  CHECK(b.build().size() == 1);
  CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("edges come out in lexicographic order") {
  const Graph g = petersen();
  const auto e = g.edges();
  CHECK(e.size() == 15);
  CHECK(std::is_sorted(e.begin(), e.end()));
  for (const Edge &x : e)
    CHECK(x.u < x.v);
  CHECK(g.min_degree() == 3);
  CHECK(g.max_degree() == 3);
}

TEST_CASE("induced subgraphs keep the origin map") {
  const Graph g = petersen();
  const Subgraph s = induced_subgraph(g, VertexSet{0, 1, 2, 3, 4});
  CHECK(s.graph.order() == 5);
  CHECK(s.graph.size() == 5);
  CHECK(s.origin == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(induced_subgraph(g, VertexSet{}), std::domain_error);
  CHECK_THROWS_AS(induced_subgraph(g, VertexSet{11}), std::invalid_argument);

  const Subgraph d = delete_vertex(g, 0);
  CHECK(d.graph.order() == 9);
  CHECK(d.graph.size() == 12);
  CHECK(d.origin.front() == 1);
}

TEST_CASE("identification merges at the smallest member") {
  const Graph c = cycle_graph(6);
  const Identification id = identify_vertices(c, VertexSet{0, 3});
  CHECK(id.graph.order() == 5);
  CHECK(id.merged == 0);
  CHECK(id.image[3] == 0);
  CHECK(id.graph.degree(0) == 4);
  CHECK(id.graph.size() == 6);
  CHECK_THROWS_WITH_AS(identify_vertices(c, VertexSet{0, 1}),
                       "identifying adjacent vertices", std::invalid_argument);
}

TEST_CASE("components and boundary") {
  const Graph g = disjoint_union(cycle_graph(4), complete_graph(3));
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2, 3});
  CHECK(boundary(g, VertexSet{0, 1}) == VertexSet{0, 1});
  CHECK(boundary(g, VertexSet{0, 1, 2, 3}).empty());
  CHECK(is_clique(g, VertexSet{4, 5, 6}));
  CHECK(is_independent(g, VertexSet{0, 2, 4}));
}

TEST_CASE("edge-list text round trip is byte exact") {
  const Graph g = petersen();
  const std::string text = to_text(g);
  CHECK(text.substr(0, 6) == "10 15\n");
  CHECK(from_text(text) == g);
  CHECK(to_text(from_text(text)) == text);
  CHECK(from_text("# comment\n3 1\n\n2 0\n") == Graph::from_edges(3, std::vector<Edge>{{0, 2}}));
}

TEST_CASE("edge-list parse errors carry line numbers") {
  auto line_of = [](const std::string &text) {
    try {
      from_text(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
  CHECK(line_of("3 2\n0 1\n0 1\n") == 3);
  CHECK(line_of("3 1\n0 7\n") == 2);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("x y\n") == 1);
  CHECK(line_of("3 2\n0 1\n") == 3);
}

TEST_CASE("graph6 agrees with reference encodings") {
  CHECK(to_graph6(complete_graph(5)) == "D~{");
  CHECK(to_graph6(petersen()) == "IheA@GUAo");
  CHECK(from_graph6("IheA@GUAo") == petersen());
  CHECK(from_graph6(">>graph6<<D~{") == complete_graph(5));
  CHECK_THROWS_AS(from_graph6("D~"), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int n : {0, 1, 2, 7, 13, 40, 63, 64}) {
    const Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("read_graphs accepts both formats") {
  std::istringstream g6("D~{\n# comment\nIheA@GUAo\n");
  const auto gs = read_graphs(g6);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == petersen());

  std::istringstream txt(to_text(petersen()));
  CHECK(read_graphs(txt).front() == petersen());

  std::istringstream bad("D~{\nD~\n");
  try {
    read_graphs(bad);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("degree-four components and clusters") {
  const D4Components k5 = d4_components(complete_graph(5));
  CHECK(k5.components.size() == 1);
  CHECK(k5.singles == 0);
  CHECK(k5.pairs == 0);
  CHECK(cluster_profile(complete_graph(5)) == std::vector<int>{5});

  // C5 join K2: the cycle vertices have degree 4 and form one component.
  const Graph cj = join(cycle_graph(5), complete_graph(2));
  const D4Components d = d4_components(cj);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0] == VertexSet{0, 1, 2, 3, 4});
  CHECK(cluster_profile(cj) == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("smaller-graph order") {
  const Graph k5 = complete_graph(5);
  const Graph c = join(cycle_graph(5), complete_graph(2));
  CHECK(compare_smaller(c, k5) == SizeOrder::HSmaller);
  CHECK(compare_smaller(k5, c) == SizeOrder::GSmaller);
  CHECK(compare_smaller(k5, k5) == SizeOrder::EqualRank);
  // Same order and size: K4 + isolated vertex vs. the paw-like graph.
  const Graph a = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const Graph b = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(compare_smaller(a, b) == SizeOrder::HSmaller);
}

TEST_CASE("k-connectivity by exhaustive deletion") {
  CHECK(is_k_connected(complete_graph(5), 3));
  CHECK(is_k_connected(cycle_graph(6), 2));
  CHECK_FALSE(is_k_connected(cycle_graph(6), 3));
  CHECK(is_k_connected(petersen(), 3));
  CHECK_FALSE(is_k_connected(petersen(), 4));
}
