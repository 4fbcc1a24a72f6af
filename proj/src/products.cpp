#include "symbreak/products.hpp"

#include "symbreak/automorphism.hpp"
#include "symbreak/combinatorics.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::vertex_sum: return "vertex_sum";
    case ProductKind::rooted: return "rooted";
    case ProductKind::corona: return "corona";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "unknown";
}

std::vector<std::vector<std::pair<int, Vertex>>> ProductLayout::from_product() const {
  std::vector<std::vector<std::pair<int, Vertex>>> out(product_order);
  for (int f = 0; f < static_cast<int>(to_product.size()); ++f) {
    for (Vertex y = 0; y < static_cast<int>(to_product[f].size()); ++y) {
      out[to_product[f][y]].emplace_back(f, y);
    }
  }
  return out;
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw InvalidArgument(std::string(what) + ": factor is disconnected");
}

void require_nonempty(const Graph& g, const char* what) {
  if (g.order() < 1) throw InvalidArgument(std::string(what) + ": factor has no vertices");
}

}  // namespace

Product vertex_sum(std::span<const RootedGraph> factors, const Budget& budget) {
  if (factors.size() < 2) throw InvalidArgument("vertex_sum needs at least two factors");
  Product out;
  auto& layout = out.layout;
  layout.kind = ProductKind::vertex_sum;
  layout.special = {0};
  int next = 1;
  for (const RootedGraph& f : factors) {
    require_connected(f.graph, "vertex_sum");
    std::vector<Vertex> map(f.graph.order());
    for (Vertex y = 0; y < f.graph.order(); ++y) map[y] = y == f.root ? 0 : next++;
    layout.to_product.push_back(std::move(map));
  }
  layout.product_order = next;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& [a, b] : factors[i].graph.edges()) {
      edges.emplace_back(layout.to_product[i][a], layout.to_product[i][b]);
    }
  }
  out.graph = build_graph(next, edges, budget);
  return out;
}

Product vertex_sum_power(const Graph& g, Vertex u, int t, const Budget& budget) {
  if (t < 2) throw InvalidArgument("vertex_sum_power needs t >= 2");
  const std::vector<RootedGraph> copies(t, RootedGraph(g, u));
  return vertex_sum(copies, budget);
}

Product rooted_product_smooth(const Graph& g, const RootedGraph& h, const Budget& budget) {
  require_nonempty(g, "rooted_product_smooth");
  require_connected(g, "rooted_product_smooth");
  require_connected(h.graph, "rooted_product_smooth");
  const int nh = h.graph.order();
  Product out;
  auto& layout = out.layout;
  layout.kind = ProductKind::rooted;
  layout.product_order = g.order() * nh;
  // Offset of each H vertex inside a block: root first, the rest in order.
  std::vector<Vertex> offset(nh);
  int next = 1;
  for (Vertex y = 0; y < nh; ++y) offset[y] = y == h.root ? 0 : next++;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < g.order(); ++i) {
    std::vector<Vertex> map(nh);
    for (Vertex y = 0; y < nh; ++y) map[y] = i * nh + offset[y];
    for (const auto& [a, b] : h.graph.edges()) edges.emplace_back(map[a], map[b]);
    layout.to_product.push_back(std::move(map));
    layout.special.push_back(i * nh);
  }
  for (const auto& [a, b] : g.edges()) edges.emplace_back(a * nh, b * nh);
  out.graph = build_graph(layout.product_order, edges, budget);
  return out;
}

Product corona(const Graph& g, const Graph& h, const Budget& budget) {
  require_nonempty(g, "corona");
  require_nonempty(h, "corona");
  const int ng = g.order();
  const int nh = h.order();
  Product out;
  auto& layout = out.layout;
  layout.kind = ProductKind::corona;
  layout.product_order = ng * (nh + 1);
  std::vector<Edge> edges = g.edges();
  std::vector<Vertex> base(ng);
  for (Vertex i = 0; i < ng; ++i) base[i] = i;
  layout.to_product.push_back(base);
  layout.special = base;
  for (Vertex i = 0; i < ng; ++i) {
    std::vector<Vertex> map(nh);
    for (Vertex y = 0; y < nh; ++y) {
      map[y] = ng + i * nh + y;
      edges.emplace_back(i, map[y]);
    }
    for (const auto& [a, b] : h.edges()) edges.emplace_back(map[a], map[b]);
    layout.to_product.push_back(std::move(map));
  }
  out.graph = build_graph(layout.product_order, edges, budget);
  return out;
}

Product lexicographic(const Graph& g, const Graph& h, const Budget& budget) {
  require_nonempty(g, "lexicographic");
  require_nonempty(h, "lexicographic");
  const int ng = g.order();
  const int nh = h.order();
  Product out;
  auto& layout = out.layout;
  layout.kind = ProductKind::lexicographic;
  layout.product_order = ng * nh;
  for (Vertex x = 0; x < ng; ++x) {
    std::vector<Vertex> map(nh);
    for (Vertex y = 0; y < nh; ++y) map[y] = x * nh + y;
    layout.to_product.push_back(std::move(map));
  }
  std::vector<Edge> edges;
  for (const auto& [x1, x2] : g.edges()) {
    for (Vertex y1 = 0; y1 < nh; ++y1) {
      for (Vertex y2 = 0; y2 < nh; ++y2) edges.emplace_back(x1 * nh + y1, x2 * nh + y2);
    }
  }
  for (Vertex x = 0; x < ng; ++x) {
    for (const auto& [y1, y2] : h.edges()) edges.emplace_back(x * nh + y1, x * nh + y2);
  }
  out.graph = build_graph(layout.product_order, edges, budget);
  return out;
}

bool all_automorphisms_natural(const Graph& g, const Graph& h, const Budget& budget) {
  const Product prod = lexicographic(g, h, budget);
  const int nh = h.order();
  const std::uint64_t total = automorphism_group_order(prod.graph);
  if (total <= budget.max_automorphisms) {
    const AutGroup aut = enumerate_automorphisms(prod.graph, budget);
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const auto im = aut.image(i);
      for (Vertex x = 0; x < g.order(); ++x) {
        const int target = im[x * nh] / nh;
        for (Vertex y = 1; y < nh; ++y) {
          if (im[x * nh + y] / nh != target) return false;
        }
      }
    }
    return true;
  }
  Count natural = static_cast<Count>(automorphism_group_order(g));
  const auto per_fibre = static_cast<Count>(automorphism_group_order(h));
  for (int i = 0; i < g.order(); ++i) natural = checked_mul(natural, per_fibre);
  return static_cast<std::uint64_t>(natural) == total;
}

}  // namespace symbreak
