#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/budget.hpp"

namespace symbreak {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph on vertices 0..n-1. Adjacency is kept as one bitset row
// per vertex; the value is immutable once constructed.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws InvalidArgument on a self-loop or an endpoint outside 0..n-1.
  // Duplicate and reversed pairs collapse into one edge.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  int degree(Vertex u) const;
  std::vector<Vertex> neighbors(Vertex u) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_,
            static_cast<std::size_t>(words_)};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RootedGraph {
  Graph graph;
  Vertex root = 0;

  RootedGraph() = default;
  // Throws InvalidArgument when root is not a vertex of g.
  RootedGraph(Graph g, Vertex r);
};

// Connected components with their grouping into isomorphism classes.
struct ComponentPartition {
  // Each component lists its vertices in increasing order; components are
  // ordered by their smallest vertex.
  std::vector<std::vector<Vertex>> components;
  // Indices into `components`. Classes are ordered by member size, ties by
  // edge count and then by the smallest vertex of the first member.
  std::vector<std::vector<int>> classes;
};

struct VertexDeletion {
  Graph graph;
  // old_to_new[v] is the id of v in `graph`, or -1 for the deleted vertex.
  std::vector<Vertex> old_to_new;
};

struct DisjointUnion {
  Graph graph;
  std::vector<Vertex> offsets;
};

enum class Family { path, cycle, complete, complete_bipartite, empty, star, kneser };

// Rejects n outside [0, budget.max_vertices] and malformed edges.
Graph build_graph(int n, std::span<const Edge> edges, const Budget& budget = {});

// Standard families with a fixed vertex numbering:
//   path/cycle   traversal order 0-1-...-(n-1)
//   complete_bipartite(m, n)  parts {0..m-1} and {m..m+n-1}
//   star(k)      K_{1,k}, centre 0 and leaves 1..k
//   kneser(n, k) k-subsets of {0..n-1} in lexicographic order
Graph family(Family kind, std::span<const int> params, const Budget& budget = {});
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int m, int n);
Graph empty_graph(int n);
Graph star(int leaves);
Graph kneser(int n, int k);

std::string to_string(Family kind);

// Vertices above u shift down by one.
Graph delete_vertex(const Graph& g, Vertex u);
VertexDeletion delete_vertex_with_map(const Graph& g, Vertex u);

// Vertex blocks are laid out in input order. Throws on an empty list.
DisjointUnion disjoint_union(std::span<const Graph> graphs);

// Subgraph induced by `vertices`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Applies a relabeling: vertex v of g becomes relabel[v].
Graph relabel(const Graph& g, std::span<const Vertex> relabel);

bool is_connected(const Graph& g);
// Connected, at least three vertices, and no cut vertex.
bool is_2connected(const Graph& g);
ComponentPartition connected_components(const Graph& g);

// Exact test by backtracking over refined vertex classes.
bool is_isomorphic(const Graph& g, const Graph& h);
// Isomorphism that also maps root to root.
bool is_isomorphic(const RootedGraph& g, const RootedGraph& h);

// Two vertices with the same neighbourhood apart from each other; swapping
// them is an automorphism fixing every other vertex.
bool has_twins(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);

}  // namespace symbreak
