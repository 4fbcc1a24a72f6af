#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

enum class ProductKind { vertex_sum, rooted, corona, lexicographic };

std::string to_string(ProductKind kind);

// Where every factor vertex lands in the product.
//
//   vertex_sum     factor i = i-th summand; every root maps to the central
//                  vertex 0, the other vertices fill consecutive blocks.
//   rooted         factor i = copy of H glued at vertex i of G; the copy
//                  occupies [i*|H|, (i+1)*|H|) with its root first.
//   corona         factor 0 = G (ids 0..|G|-1); factor 1+i = copy of H joined
//                  to vertex i, block |G| + i*|H|.
//   lexicographic  factor x = fibre {x} x V(H); (x, y) has id x*|H| + y.
struct ProductLayout {
  ProductKind kind = ProductKind::vertex_sum;
  int product_order = 0;
  std::vector<std::vector<Vertex>> to_product;
  // Central vertex (vertex_sum) or the ids carrying G's vertices
  // (rooted, corona); empty for lexicographic.
  std::vector<Vertex> special;

  // Preimages (factor, factor vertex) of every product vertex.
  std::vector<std::vector<std::pair<int, Vertex>>> from_product() const;
};

struct Product {
  Graph graph;
  ProductLayout layout;
};

// At least two factors, each connected.
Product vertex_sum(std::span<const RootedGraph> factors, const Budget& budget = {});
// t >= 2 copies of g glued at u.
Product vertex_sum_power(const Graph& g, Vertex u, int t, const Budget& budget = {});
// One copy of (H, root) glued at every vertex of G; both connected.
Product rooted_product_smooth(const Graph& g, const RootedGraph& h, const Budget& budget = {});
Product corona(const Graph& g, const Graph& h, const Budget& budget = {});
Product lexicographic(const Graph& g, const Graph& h, const Budget& budget = {});

// True iff every automorphism of G o H maps each fibre onto a fibre.
// Small groups are checked element by element; beyond the automorphism
// budget the group order is compared with |Aut(G)| |Aut(H)|^|G|, the order of
// the subgroup of natural automorphisms.
bool all_automorphisms_natural(const Graph& g, const Graph& h, const Budget& budget = {});

}  // namespace symbreak
