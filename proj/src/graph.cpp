#include "symbreak/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <tuple>

#include "detail/matcher.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void require_vertex(const Graph& g, Vertex u, const char* what) {
  if (u < 0 || u >= g.order()) {
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(u) +
                          " out of range for n=" + std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const Edge& e : edges) {
    const auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge " + pair_text(e) + " has an endpoint outside 0.." +
                            std::to_string(n - 1));
    }
    if (u == v) throw InvalidArgument("self-loop " + pair_text(e));
    if (adjacent(u, v)) continue;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
  }
}

int Graph::degree(Vertex u) const {
  int d = 0;
  for (std::uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  require_vertex(*this, u, "neighbors");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (adjacent(u, v)) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

RootedGraph::RootedGraph(Graph g, Vertex r) : graph(std::move(g)), root(r) {
  require_vertex(graph, r, "root");
}

Graph build_graph(int n, std::span<const Edge> edges, const Budget& budget) {
  if (n > budget.max_vertices) {
    throw InvalidArgument("graph has " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(budget.max_vertices));
  }
  return Graph(n, edges);
}

Graph path(int n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("complete bipartite needs both parts >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  }
  return Graph(m + n, e);
}

Graph empty_graph(int n) {
  if (n < 0) throw InvalidArgument("empty graph needs n >= 0");
  return Graph(n);
}

Graph star(int leaves) {
  if (leaves < 1) throw InvalidArgument("star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph kneser(int n, int k) {
  if (k < 1 || n < 2 * k) throw InvalidArgument("kneser(n,k) needs k >= 1 and n >= 2k");
  std::vector<std::uint64_t> subsets;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int x : pick) mask |= std::uint64_t{1} << x;
    subsets.push_back(mask);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<Edge> e;
  const int count = static_cast<int>(subsets.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if ((subsets[i] & subsets[j]) == 0) e.emplace_back(i, j);
    }
  }
  return Graph(count, e);
}

Graph family(Family kind, std::span<const int> params, const Budget& budget) {
  const auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidArgument(to_string(kind) + " takes " + std::to_string(count) +
                            " parameter(s)");
    }
  };
  Graph g;
  switch (kind) {
    case Family::path: need(1); g = path(params[0]); break;
    case Family::cycle: need(1); g = cycle(params[0]); break;
    case Family::complete: need(1); g = complete(params[0]); break;
    case Family::complete_bipartite: need(2); g = complete_bipartite(params[0], params[1]); break;
    case Family::empty: need(1); g = empty_graph(params[0]); break;
    case Family::star: need(1); g = star(params[0]); break;
    case Family::kneser: need(2); g = kneser(params[0], params[1]); break;
  }
  if (g.order() > budget.max_vertices) {
    throw InvalidArgument(to_string(kind) + " exceeds the vertex cap");
  }
  return g;
}

std::string to_string(Family kind) {
  switch (kind) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::empty: return "empty";
    case Family::star: return "star";
    case Family::kneser: return "kneser";
  }
  return "unknown";
}

VertexDeletion delete_vertex_with_map(const Graph& g, Vertex u) {
  require_vertex(g, u, "delete_vertex");
  VertexDeletion out;
  out.old_to_new.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out.old_to_new[v] = v < u ? v : (v == u ? -1 : v - 1);
  }
  std::vector<Edge> e;
  for (const auto& [a, b] : g.edges()) {
    if (a != u && b != u) e.emplace_back(out.old_to_new[a], out.old_to_new[b]);
  }
  out.graph = Graph(g.order() - 1, e);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex u) { return delete_vertex_with_map(g, u).graph; }

DisjointUnion disjoint_union(std::span<const Graph> graphs) {
  if (graphs.empty()) throw InvalidArgument("disjoint_union needs at least one graph");
  DisjointUnion out;
  std::vector<Edge> e;
  int offset = 0;
  for (const Graph& g : graphs) {
    out.offsets.push_back(offset);
    for (const auto& [a, b] : g.edges()) e.emplace_back(a + offset, b + offset);
    offset += g.order();
  }
  out.graph = Graph(offset, e);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> e;
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    require_vertex(g, vertices[i], "induced_subgraph");
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) e.emplace_back(i, j);
    }
  }
  return Graph(k, e);
}

Graph relabel(const Graph& g, std::span<const Vertex> relabel) {
  if (static_cast<int>(relabel.size()) != g.order()) {
    throw InvalidArgument("relabel: map length does not match vertex count");
  }
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : relabel) {
    if (v < 0 || v >= g.order() || seen[v]) throw InvalidArgument("relabel: not a bijection");
    seen[v] = 1;
  }
  std::vector<Edge> e;
  for (const auto& [a, b] : g.edges()) e.emplace_back(relabel[a], relabel[b]);
  return Graph(g.order(), e);
}

namespace {

// Vertices reachable from `start` while skipping `banned`.
std::vector<Vertex> reach(const Graph& g, Vertex start, Vertex banned) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> out{start};
  std::deque<Vertex> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == banned || seen[w] || !g.adjacent(v, w)) continue;
      seen[w] = 1;
      out.push_back(w);
      queue.push_back(w);
    }
  }
  return out;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return static_cast<int>(reach(g, 0, -1).size()) == g.order();
}

bool is_2connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    const Vertex start = u == 0 ? 1 : 0;
    if (static_cast<int>(reach(g, start, u).size()) != g.order() - 1) return false;
  }
  return true;
}

ComponentPartition connected_components(const Graph& g) {
  ComponentPartition out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    auto comp = reach(g, v, -1);
    std::sort(comp.begin(), comp.end());
    for (Vertex w : comp) seen[w] = 1;
    out.components.push_back(std::move(comp));
  }

  std::vector<Graph> sub;
  sub.reserve(out.components.size());
  for (const auto& c : out.components) sub.push_back(induced_subgraph(g, c));

  for (int i = 0; i < static_cast<int>(sub.size()); ++i) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (is_isomorphic(sub[cls.front()], sub[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({i});
  }
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [&](const std::vector<int>& x, const std::vector<int>& y) {
                     const Graph& gx = sub[x.front()];
                     const Graph& gy = sub[y.front()];
                     return std::make_tuple(gx.order(), gx.edge_count(),
                                            out.components[x.front()].front()) <
                            std::make_tuple(gy.order(), gy.edge_count(),
                                            out.components[y.front()].front());
                   });
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  detail::Matcher m(g, h);
  return m.exists();
}

bool is_isomorphic(const RootedGraph& g, const RootedGraph& h) {
  const std::pair<Vertex, Vertex> forced[] = {{g.root, h.root}};
  detail::Matcher m(g.graph, h.graph, forced);
  return m.exists();
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool has_twins(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool same = true;
      for (Vertex w = 0; w < n && same; ++w) {
        if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) same = false;
      }
      if (same) return true;
    }
  }
  return false;
}

}  // namespace symbreak
