#include <doctest.h>

#include "oracles.hpp"
#include "symbreak/error.hpp"
#include "symbreak/graph.hpp"

using namespace symbreak;

TEST_CASE("construction validates edges") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), InvalidArgument);
  const Edge out_of_range[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, out_of_range), InvalidArgument);
  const Edge dup[] = {{0, 1}, {1, 0}, {0, 1}};
  CHECK(Graph(2, dup).edge_count() == 1);
}

TEST_CASE("vertex cap is enforced") {
  Budget tight;
  tight.max_vertices = 4;
  CHECK_THROWS_AS(build_graph(5, {}, tight), InvalidArgument);
  CHECK(build_graph(4, {}, tight).order() == 4);
}

TEST_CASE("families have the expected sizes") {
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(6).edge_count() == 6);
  CHECK(complete(5).edge_count() == 10);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(star(4).order() == 5);
  CHECK(star(4).degree(0) == 4);
  CHECK(empty_graph(3).edge_count() == 0);
  const Graph petersen = kneser(5, 2);
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
}

TEST_CASE("vertex deletion keeps the remaining order") {
  const auto del = delete_vertex_with_map(path(4), 1);
  CHECK(del.graph.order() == 3);
  CHECK(del.graph.edge_count() == 1);
  CHECK(del.old_to_new[1] == -1);
  CHECK(del.graph.adjacent(del.old_to_new[2], del.old_to_new[3]));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(5)));
  CHECK_FALSE(is_connected(empty_graph(2)));
  CHECK(is_2connected(cycle(5)));
  CHECK_FALSE(is_2connected(path(4)));
  CHECK_FALSE(is_2connected(complete(2)));
  CHECK(is_2connected(complete(4)));
}

TEST_CASE("components are grouped into isomorphism classes") {
  const Graph parts[] = {path(3), complete(2), path(3), complete(2), cycle(3)};
  const auto un = disjoint_union(parts);
  const auto cp = connected_components(un.graph);
  REQUIRE(cp.components.size() == 5);
  REQUIRE(cp.classes.size() == 3);
  CHECK(cp.classes[0].size() == 2);
  CHECK(cp.components[cp.classes[0][0]].size() == 2);
  CHECK(cp.classes[1].size() == 2);
  CHECK(cp.classes[2].size() == 1);
}

TEST_CASE("isomorphism agrees with brute force on small relabellings") {
  const Graph gs[] = {path(5), cycle(5), star(4), complete_bipartite(2, 3), kneser(5, 2)};
  for (const Graph& g : gs) {
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = (i * 3 + 1) % g.order();
    if (g.order() % 3 == 0) std::iota(perm.rbegin(), perm.rend(), 0);
    CHECK(is_isomorphic(g, relabel(g, perm)));
  }
  CHECK_FALSE(is_isomorphic(path(4), star(3)));
  CHECK_FALSE(is_isomorphic(cycle(6), disjoint_union(std::vector<Graph>{cycle(3), cycle(3)}).graph));
}

TEST_CASE("isomorphism matches the permutation oracle on all 5-vertex graphs") {
  const auto corpus = oracle::load_g6(SYMBREAK_DATA_DIR "/all_le7.g6");
  std::vector<Graph> five;
  for (const Graph& g : corpus) {
    if (g.order() == 5) five.push_back(g);
  }
  REQUIRE(five.size() == 34);
  for (std::size_t i = 0; i < five.size(); ++i) {
    for (std::size_t j = 0; j < five.size(); ++j) {
      CHECK(is_isomorphic(five[i], five[j]) == (i == j));
    }
  }
  for (std::size_t i = 0; i < five.size(); i += 5) {
    std::vector<Vertex> perm = {3, 0, 4, 1, 2};
    const Graph h = relabel(five[i], perm);
    CHECK(is_isomorphic(five[i], h) == oracle::isomorphic(five[i], h));
  }
}

TEST_CASE("rooted isomorphism respects the root") {
  const Graph p = path(4);
  CHECK(is_isomorphic(RootedGraph(p, 0), RootedGraph(p, 3)));
  CHECK_FALSE(is_isomorphic(RootedGraph(p, 0), RootedGraph(p, 1)));
  CHECK_THROWS_AS(RootedGraph(p, 4), InvalidArgument);
}
