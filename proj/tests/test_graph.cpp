#include <sstream>

#include "doctest.h"
#include "locdom/edgelist.hpp"
#include "locdom/graph.hpp"
#include "support.hpp"

using namespace locdom;
using support::make_graph;

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edges({1, 2}, {{1, 1}}), GraphConstructionError);
  CHECK_THROWS_AS(Graph::from_edges({1, 2}, {{1, 2}, {2, 1}}),
                  GraphConstructionError);
  CHECK_THROWS_AS(Graph::from_edges({1, 2}, {{1, 3}}), GraphConstructionError);
  CHECK_THROWS_AS(Graph::from_edges({0, 1}, {}), GraphConstructionError);
}

TEST_CASE("neighbors") {
  Graph triangle = support::complete_graph(3);
  CHECK(triangle.neighbors(1) == VertexSet{2, 3});
  Graph isolated = make_graph(1, {});
  CHECK(isolated.neighbors(1).empty());
  Graph path = support::path_graph(3);
  CHECK(path.neighbors(2) == VertexSet{1, 3});
  CHECK_THROWS_AS(path.neighbors(9), UnknownVertexError);
}

TEST_CASE("closed_ball") {
  Graph path = support::path_graph(5);
  Ball b = closed_ball(path, 3, 1);
  CHECK(b.subgraph.vertices() == VertexSet{2, 3, 4});
  CHECK(b.subgraph.edges() == std::vector<Edge>{{2, 3}, {3, 4}});

  Ball zero = closed_ball(path, 2, 0);
  CHECK(zero.subgraph.vertices() == VertexSet{2});
  CHECK(zero.subgraph.num_edges() == 0);

  Graph cyc = support::cycle_graph(10);
  for (VertexId v : cyc.vertices()) {
    Ball whole = closed_ball(cyc, v, 6);
    CHECK(whole.subgraph.num_vertices() == 10);
  }
  CHECK_THROWS_AS(closed_ball(path, 99, 1), UnknownVertexError);
}

TEST_CASE("ball matches iterated closed neighborhoods") {
  support::Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    Graph g = support::random_connected_graph(rng, 4 + rng.below(10), 0.2);
    VertexId v = g.vertices()[rng.below(g.num_vertices())];
    int r = static_cast<int>(rng.below(4));
    Ball b = closed_ball(g, v, r);
    CHECK(b.subgraph.vertices() == support::iterated_closed_neighborhood(g, v, r));
  }
}

TEST_CASE("neighborhood_of_set") {
  Graph star = support::star_graph(4);
  CHECK(neighborhood_of_set(star, {1}) == VertexSet{1, 2, 3, 4, 5});
  CHECK(neighborhood_of_set(star, {}).empty());
  Graph path = support::path_graph(5);
  CHECK(neighborhood_of_set(path, {1, 4}) == VertexSet{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(neighborhood_of_set(path, {42}), UnknownVertexError);
}

TEST_CASE("closed neighborhood of singleton") {
  support::Rng rng(13);
  Graph g = support::random_connected_graph(rng, 9, 0.3);
  for (VertexId v : g.vertices()) {
    VertexSet expect = g.neighbors(v);
    expect.push_back(v);
    expect = sorted_unique(std::move(expect));
    CHECK(neighborhood_of_set(g, {v}) == expect);
    CHECK(g.closed_neighborhood(v) == expect);
  }
}

TEST_CASE("is_dominating_set") {
  Graph star = support::star_graph(5);
  CHECK(is_dominating_set(star, {1}));
  Graph path = support::path_graph(5);
  CHECK(is_dominating_set(path, {2, 4}));
  CHECK_FALSE(is_dominating_set(path, {3}));
  support::Rng rng(3);
  for (int it = 0; it < 10; ++it) {
    Graph g = support::random_connected_graph(rng, 3 + rng.below(8), 0.2);
    CHECK(is_dominating_set(g, g.vertices()));
  }
}

TEST_CASE("edge_density") {
  CHECK(edge_density(support::complete_graph(4)) == Rational(3, 2));
  CHECK(edge_density(support::cycle_graph(10)) == Rational(1));
  CHECK(edge_density(support::complete_bipartite(3, 3)) == Rational(3, 2));
  CHECK_THROWS_AS(edge_density(Graph{}), std::invalid_argument);
}

TEST_CASE("induced and without") {
  Graph g = support::cycle_graph(6);
  Graph sub = g.induced({1, 2, 3});
  CHECK(sub.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  Graph rem = g.without({4});
  CHECK(rem.num_vertices() == 5);
  CHECK(rem.num_edges() == 4);
}

TEST_CASE("edge list round trip") {
  support::Rng rng(99);
  for (int it = 0; it < 20; ++it) {
    Graph g = support::random_connected_graph(rng, 3 + rng.below(12), 0.25);
    std::string text = to_edge_list_string(g, it % 2 ? std::optional<int>(1)
                                                     : std::nullopt);
    std::istringstream in(text);
    EdgeListFile f = read_edge_list(in);
    CHECK(f.graph.vertices() == g.vertices());
    CHECK(f.graph.edges() == g.edges());
    if (it % 2) {
      CHECK(f.certified_genus == 1);
    } else {
      CHECK_FALSE(f.certified_genus.has_value());
    }
  }
}

TEST_CASE("edge list isolated vertices and gaps") {
  // Isolated vertices come from the declared count.
  std::istringstream iso("p 5 0 genus=0\n");
  EdgeListFile f = read_edge_list(iso);
  CHECK(f.graph.vertices() == VertexSet{1, 2, 3, 4, 5});

  // Gapped ids are fine when every vertex has an edge.
  std::istringstream gap("# comment\np 3 2 genus=unknown\n10 20\n20 30\n");
  EdgeListFile g = read_edge_list(gap);
  CHECK(g.graph.vertices() == VertexSet{10, 20, 30});

  std::istringstream bad1("10 20\n");
  CHECK_THROWS_AS(read_edge_list(bad1), FormatError);
  std::istringstream bad2("p 2 2 genus=0\n1 2\n");
  CHECK_THROWS_AS(read_edge_list(bad2), FormatError);
  std::istringstream gap2("p 2 1 genus=0\n1 7\n");
  CHECK(read_edge_list(gap2).graph.vertices() == VertexSet{1, 7});
  std::istringstream bad3("p 3 1 genus=0\n1 7\n");
  CHECK_THROWS_AS(read_edge_list(bad3), FormatError);
  std::istringstream bad4("p 2 1 genus=-3\n1 2\n");
  CHECK_THROWS_AS(read_edge_list(bad4), FormatError);
}
