#include <doctest.h>

#include "oracles.hpp"
#include "symbreak/automorphism.hpp"
#include "symbreak/error.hpp"
#include "symbreak/io.hpp"
#include "symbreak/products.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;

namespace {

std::vector<Graph> small_connected(int max_order) {
  std::vector<Graph> out;
  for (const Graph& g : connected_fixtures()) {
    if (g.order() <= max_order) out.push_back(g);
  }
  return out;
}

std::uint64_t stabilizer_order(const Graph& h, Vertex v) {
  std::uint64_t n = 0;
  for (const auto& p : oracle::automorphisms(h)) n += p[v] == v;
  return n;
}

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("lexicographic product follows the documented layout") {
  for (const Graph& g : small_connected(3)) {
    for (const Graph& h : small_connected(3)) {
      CHECK(lexicographic(g, h).graph == oracle::lexicographic(g, h));
    }
  }
  CHECK(lexicographic(path(2), complete(2)).graph == complete(4));
}

TEST_CASE("corona, rooted product and vertex-sum match their definitions") {
  const auto graphs = small_connected(4);
  for (const Graph& g : graphs) {
    if (g.order() > 3) continue;
    for (const Graph& h : graphs) {
      CHECK(is_isomorphic(corona(g, h).graph, oracle::corona(g, h)));
      for (Vertex v = 0; v < h.order(); ++v) {
        CHECK(is_isomorphic(rooted_product_smooth(g, RootedGraph(h, v)).graph,
                            oracle::rooted_product(g, h, v)));
      }
    }
  }
  for (const Graph& a : graphs) {
    for (const Graph& b : graphs) {
      if (a.order() < 2 || b.order() < 2) continue;
      const RootedGraph f[] = {RootedGraph(a, 0), RootedGraph(b, b.order() - 1)};
      CHECK(is_isomorphic(vertex_sum(f).graph, oracle::vertex_sum({{a, 0}, {b, b.order() - 1}})));
    }
  }
}

TEST_CASE("small product identities") {
  CHECK(is_isomorphic(corona(Graph(1), complete(2)).graph, complete(3)));
  CHECK(is_isomorphic(corona(path(2), Graph(1)).graph, path(4)));
  CHECK(is_isomorphic(rooted_product_smooth(path(2), RootedGraph(path(2), 0)).graph, path(4)));
  CHECK(is_isomorphic(rooted_product_smooth(path(2), RootedGraph(path(3), 0)).graph, path(6)));
  CHECK(is_isomorphic(vertex_sum_power(complete(3), 0, 2).graph,
                      builtin_graph("g6:D{c")));  // bowtie
  CHECK(vertex_sum_power(cycle(4), 0, 3).graph.order() == 10);
}

TEST_CASE("layouts map factor vertices onto the product") {
  const Product p = rooted_product_smooth(path(3), RootedGraph(path(3), 1));
  REQUIRE(p.layout.to_product.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(p.layout.to_product[i][1] == p.layout.special[i]);
    for (Vertex y = 0; y < 3; ++y) {
      const Vertex at = p.layout.to_product[i][y];
      CHECK(at >= i * 3);
      CHECK(at < (i + 1) * 3);
    }
  }
  const auto back = p.layout.from_product();
  CHECK(back.size() == 9);

  const Product s = vertex_sum_power(complete(3), 0, 3);
  for (const auto& f : s.layout.to_product) CHECK(f[0] == 0);
  CHECK(s.layout.from_product()[0].size() == 3);
}

TEST_CASE("rooted product group order on small pairs") {
  for (const Graph& g : small_connected(3)) {
    if (g.order() < 2) continue;
    for (const Graph& h : small_connected(3)) {
      if (h.order() < 2) continue;
      for (Vertex v = 0; v < h.order(); ++v) {
        const Graph p = oracle::rooted_product(g, h, v);
        const auto expected = oracle::automorphisms(g).size() *
                              power(stabilizer_order(h, v), g.order());
        CHECK(enumerate_automorphisms(p).order() == expected);
      }
    }
  }
}

TEST_CASE("corona group order on small pairs") {
  for (const Graph& g : small_connected(3)) {
    if (g.order() < 2) continue;
    for (const Graph& h : small_connected(2)) {
      const Graph p = oracle::corona(g, h);
      CHECK(oracle::automorphisms(p).size() ==
            oracle::automorphisms(g).size() * power(oracle::automorphisms(h).size(), g.order()));
    }
  }
}

TEST_CASE("naturality of lexicographic products") {
  CHECK_FALSE(all_automorphisms_natural(path(2), complete(2)));
  CHECK(all_automorphisms_natural(path(3), complete(2)));
  CHECK(all_automorphisms_natural(cycle(5), path(3)));
  CHECK(all_automorphisms_natural(Graph(1), path(3)));
  CHECK(all_automorphisms_natural(path(3), Graph(1)));
  // Edgeless factors: twins across fibres.
  CHECK_FALSE(all_automorphisms_natural(path(3), empty_graph(2)));
}

TEST_CASE("naturality matches a fibre-by-fibre oracle") {
  for (const Graph& g : small_connected(3)) {
    for (const Graph& h : small_connected(3)) {
      if (g.order() * h.order() > 8) continue;
      const Graph p = oracle::lexicographic(g, h);
      const int m = h.order();
      bool natural = true;
      for (const auto& a : oracle::automorphisms(p)) {
        for (int x = 0; x < g.order() && natural; ++x) {
          const int fibre = a[x * m] / m;
          for (int y = 1; y < m; ++y) natural = natural && a[x * m + y] / m == fibre;
        }
      }
      CHECK(all_automorphisms_natural(g, h) == natural);
    }
  }
}

TEST_CASE("product arguments are validated") {
  const Graph disconnected = empty_graph(2);
  CHECK_THROWS_AS(rooted_product_smooth(disconnected, RootedGraph(path(2), 0)), InvalidArgument);
  CHECK_THROWS_AS(vertex_sum_power(path(3), 0, 1), InvalidArgument);
  const RootedGraph one[] = {RootedGraph(path(3), 0)};
  CHECK_THROWS_AS(vertex_sum(one), InvalidArgument);
  Budget tiny;
  tiny.max_vertices = 8;
  CHECK_THROWS(lexicographic(cycle(3), cycle(3), tiny));
}
