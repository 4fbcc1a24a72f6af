#include "symbreak/indices.hpp"

#include <algorithm>
#include <string>

#include "symbreak/error.hpp"

namespace symbreak {

Coloring::Coloring(std::vector<int> c, int k) : colors(std::move(c)), palette(k) {
  if (k < 1 && !colors.empty()) throw InvalidArgument("palette must hold at least one colour");
  for (int x : colors) {
    if (x < 1 || x > palette) {
      throw InvalidArgument("colour " + std::to_string(x) + " outside 1.." +
                            std::to_string(palette));
    }
  }
}

Coloring::Coloring(std::vector<int> c)
    : Coloring(c, c.empty() ? 0 : *std::max_element(c.begin(), c.end())) {}

namespace {

void require_length(const AutGroup& group, const Coloring& c) {
  if (c.size() != group.degree()) {
    throw InvalidArgument("colouring has length " + std::to_string(c.size()) +
                          " but the group acts on " + std::to_string(group.degree()) +
                          " points");
  }
}

void require_graph_group(const Graph& g, const AutGroup& group) {
  if (g.order() != group.degree()) {
    throw InvalidArgument("group degree does not match the graph order");
  }
}

// Depth-first walk over restricted-growth strings (set partitions). Each node
// keeps the non-identity elements that still preserve the partial colouring;
// once none survive, every completion is distinguishing and is counted in
// closed form.
class PartitionSearch {
 public:
  PartitionSearch(const AutGroup& group, int max_blocks, const Budget& budget)
      : group_(group), n_(group.degree()), max_blocks_(max_blocks), budget_(budget) {
    colors_.assign(n_, -1);
    alive_.assign(n_ + 1, {});
    counts_.assign(max_blocks_ + 1, 0);
    completions_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 2) * (max_blocks_ + 1), -1);
    last_moved_.assign(group_.order(), -1);
    for (std::size_t e = 0; e < group_.order(); ++e) {
      const auto im = group_.image(e);
      for (Vertex v = n_ - 1; v >= 0; --v) {
        if (im[v] != v) {
          last_moved_[e] = v;
          break;
        }
      }
    }
  }

  std::vector<Count> count() {
    exists_mode_ = false;
    start();
    return counts_;
  }

  bool exists() {
    exists_mode_ = true;
    start();
    return found_;
  }

 private:
  void start() {
    found_ = false;
    visited_ = 0;
    auto& root = alive_[0];
    root.clear();
    for (std::size_t i = 1; i < group_.order(); ++i) root.push_back(static_cast<std::uint32_t>(i));
    if (root.empty()) {
      record(n_, 0);
      return;
    }
    if (n_ > 0 && max_blocks_ >= 1) descend(0, 0);
  }

  // All completions from `used` blocks with `remaining` points left.
  void record(int remaining, int used) {
    found_ = true;
    if (exists_mode_) return;
    for (int j = used; j <= max_blocks_; ++j) {
      counts_[j] = checked_add(counts_[j], completions(remaining, used, j));
    }
  }

  // Number of ways to extend a restricted-growth string with `used` blocks by
  // `remaining` points so that it ends with exactly `target` blocks.
  Count completions(int remaining, int used, int target) {
    if (target < used || target > max_blocks_) return 0;
    if (remaining == 0) return target == used ? 1 : 0;
    Count& memo = completions_[(static_cast<std::size_t>(remaining) * (n_ + 2) + used) *
                                   (max_blocks_ + 1) +
                               target];
    if (memo >= 0) return memo;
    Count value = checked_mul(used, completions(remaining - 1, used, target));
    value = checked_add(value, completions(remaining - 1, used + 1, target));
    memo = value;
    return value;
  }

  void descend(int depth, int used) {
    const int limit = std::min(used + 1, max_blocks_);
    const auto& parent = alive_[depth];
    auto& child = alive_[depth + 1];
    for (int c = 0; c < limit; ++c) {
      if (++visited_ > budget_.max_colorings) {
        throw BudgetExceeded("colouring enumeration exceeds the budget of " +
                             std::to_string(budget_.max_colorings) + " candidates");
      }
      colors_[depth] = c;
      child.clear();
      // An element that moves only coloured points and still survives fixes
      // every completion, so the subtree holds nothing distinguishing.
      bool dead = false;
      for (std::uint32_t e : parent) {
        const Vertex fwd = group_.image(e)[depth];
        const Vertex back = group_.inverse_image(e)[depth];
        if (fwd < depth && colors_[fwd] != c) continue;
        if (back < depth && colors_[back] != c) continue;
        if (last_moved_[e] <= depth) {
          dead = true;
          break;
        }
        child.push_back(e);
      }
      const int now_used = std::max(used, c + 1);
      if (dead) continue;
      if (child.empty()) {
        record(n_ - depth - 1, now_used);
      } else if (depth + 1 < n_) {
        descend(depth + 1, now_used);
      }
      if (exists_mode_ && found_) break;
    }
    colors_[depth] = -1;
  }

  const AutGroup& group_;
  int n_;
  int max_blocks_;
  const Budget& budget_;
  bool exists_mode_ = false;
  bool found_ = false;
  std::uint64_t visited_ = 0;
  std::vector<int> colors_;
  std::vector<std::vector<std::uint32_t>> alive_;
  std::vector<Count> counts_;
  std::vector<Count> completions_;
  std::vector<int> last_moved_;
};

Count exact_div(Count num, std::uint64_t den, const char* what) {
  const auto d = static_cast<Count>(den);
  if (num % d != 0) {
    throw Error(std::string(what) + ": count " + std::to_string(num) +
                " is not divisible by the group order " + std::to_string(den));
  }
  return num / d;
}

}  // namespace

bool is_distinguishing(const AutGroup& group, const Coloring& c) {
  require_length(group, c);
  for (std::size_t i = 1; i < group.order(); ++i) {
    const auto im = group.image(i);
    bool preserved = true;
    for (int v = 0; v < group.degree(); ++v) {
      if (c.colors[v] != c.colors[im[v]]) {
        preserved = false;
        break;
      }
    }
    if (preserved) return false;
  }
  return true;
}

bool are_equivalent(const AutGroup& group, const Coloring& c1, const Coloring& c2) {
  require_length(group, c1);
  require_length(group, c2);
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto im = group.image(i);
    bool match = true;
    for (int v = 0; v < group.degree(); ++v) {
      if (c1.colors[v] != c2.colors[im[v]]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<Count> distinguishing_partition_counts(const AutGroup& group, int max_blocks,
                                                   const Budget& budget) {
  if (max_blocks < 0) throw InvalidArgument("max_blocks must be non-negative");
  PartitionSearch search(group, max_blocks, budget);
  return search.count();
}

int distinguishing_number(const AutGroup& group, const Budget& budget) {
  if (group.degree() == 0 || group.is_trivial()) return 1;
  // Colouring every point differently always works, so the loop ends by n.
  for (int k = 2; k < group.degree(); ++k) {
    PartitionSearch search(group, k, budget);
    if (search.exists()) return k;
  }
  return group.degree();
}

int distinguishing_threshold(const AutGroup& group) {
  const auto best = max_nonidentity_cycle_count(group);
  return best ? *best + 1 : 1;
}

PhiTable phi_table(const AutGroup& group, int kmax, const Budget& budget) {
  if (kmax < 1) throw InvalidArgument("palette size must be at least 1");
  const int n = group.degree();
  if (n < 1) throw InvalidArgument("phi needs at least one vertex");
  PhiTable table;
  table.theta = distinguishing_threshold(group);
  table.group_order = group.order();

  // Below the threshold the counts come from enumeration; from the threshold
  // on every colouring is distinguishing.
  const int enumerated = std::min(kmax, table.theta - 1);
  std::vector<Count> blocks;
  if (enumerated >= 1) blocks = distinguishing_partition_counts(group, enumerated, budget);

  std::vector<Count> Phi(kmax + 1, 0), phi(kmax + 1, 0);
  for (int k = 1; k <= enumerated; ++k) {
    // Distinguishing colourings from a palette of k colours.
    Count colorings = 0;
    for (int j = 1; j <= k; ++j) {
      colorings = checked_add(colorings, checked_mul(blocks[j], falling_factorial(k, j)));
    }
    Phi[k] = exact_div(colorings, group.order(), "Phi");
    // Binomial inversion of Phi_k = sum_i C(k,i) phi_i.
    Count acc = 0;
    for (int i = 1; i <= k; ++i) {
      const Count term = checked_mul(binomial(k, i), Phi[i]);
      acc = ((k - i) % 2 == 0) ? checked_add(acc, term) : checked_add(acc, -term);
    }
    phi[k] = acc;
  }
  for (int k = enumerated + 1; k <= kmax; ++k) {
    phi[k] = k > n ? 0
                   : exact_div(checked_mul(factorial(k), stirling2(n, k)), group.order(), "phi");
    Count acc = 0;
    for (int i = 1; i <= k; ++i) acc = checked_add(acc, checked_mul(binomial(k, i), phi[i]));
    Phi[k] = acc;
  }

  table.distinguishing_number = 0;
  for (int k = 1; k <= kmax; ++k) {
    table.rows.push_back({k, Phi[k], phi[k]});
    if (table.distinguishing_number == 0 && Phi[k] > 0) table.distinguishing_number = k;
  }
  if (table.distinguishing_number == 0) table.distinguishing_number = distinguishing_number(group, budget);

  for (int k = 1; k <= kmax; ++k) {
    Count sum = 0;
    for (int i = 1; i <= k; ++i) sum = checked_add(sum, checked_mul(binomial(k, i), phi[i]));
    if (sum != Phi[k] || phi[k] < 0 || (k > 1 && Phi[k] < Phi[k - 1])) {
      throw Error("internal: Phi/phi table inconsistent at k=" + std::to_string(k));
    }
  }
  return table;
}

bool is_distinguishing(const Graph& g, const AutGroup& group, const Coloring& c) {
  require_graph_group(g, group);
  return is_distinguishing(group, c);
}

bool are_equivalent(const Graph& g, const AutGroup& group, const Coloring& c1,
                    const Coloring& c2) {
  require_graph_group(g, group);
  return are_equivalent(group, c1, c2);
}

int distinguishing_number(const Graph& g, const Budget& budget) {
  if (g.order() < 1) throw InvalidArgument("distinguishing number needs n >= 1");
  return distinguishing_number(enumerate_automorphisms(g, budget), budget);
}

int distinguishing_threshold(const Graph& g, const Budget& budget) {
  if (g.order() >= 2 && has_twins(g)) return g.order();
  return distinguishing_threshold(enumerate_automorphisms(g, budget));
}

PhiRow phi(const Graph& g, int k, const Budget& budget) {
  return phi_table(g, k, budget).at(k);
}

PhiTable phi_table(const Graph& g, int kmax, const Budget& budget) {
  return phi_table(enumerate_automorphisms(g, budget), kmax, budget);
}

namespace {

IndexReport report_for(const AutGroup& group, int phi_max, const Budget& budget) {
  IndexReport r;
  r.aut_order = group.order();
  r.D = distinguishing_number(group, budget);
  r.theta = distinguishing_threshold(group);
  if (phi_max >= 1) {
    r.phi_table = phi_table(group, phi_max, budget);
  } else {
    r.phi_table.theta = r.theta;
    r.phi_table.group_order = r.aut_order;
    r.phi_table.distinguishing_number = r.D;
  }
  return r;
}

}  // namespace

IndexReport analyze(const Graph& g, int phi_max, bool with_steady, const Budget& budget) {
  if (g.order() < 1) throw InvalidArgument("analyze needs n >= 1");
  IndexReport r = report_for(enumerate_automorphisms(g, budget), phi_max, budget);
  if (with_steady) r.steady_vertices = steady_vertices(g, budget);
  return r;
}

IndexReport rooted_indices(const RootedGraph& h, int phi_max, const Budget& budget) {
  return report_for(stabilizer(enumerate_automorphisms(h.graph, budget), h.root), phi_max,
                    budget);
}

bool is_steady(const Graph& g, Vertex u, const Budget& budget) {
  if (u < 0 || u >= g.order()) throw InvalidArgument("is_steady: vertex out of range");
  const auto del = delete_vertex_with_map(g, u);
  std::vector<char> in_nbhd(del.graph.order(), 0);
  for (Vertex w : g.neighbors(u)) in_nbhd[del.old_to_new[w]] = 1;
  const AutGroup aut = enumerate_automorphisms(del.graph, budget);
  for (std::size_t i = 1; i < aut.order(); ++i) {
    const auto im = aut.image(i);
    for (Vertex x = 0; x < del.graph.order(); ++x) {
      if (in_nbhd[x] && !in_nbhd[im[x]]) return false;
    }
  }
  return true;
}

std::vector<Vertex> steady_vertices(const Graph& g, const Budget& budget) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (is_steady(g, u, budget)) out.push_back(u);
  }
  return out;
}

int nu(const Graph& g, const Budget& budget) {
  const auto parts = connected_components(g);
  for (const auto& comp : parts.components) {
    const Graph sub = induced_subgraph(g, comp);
    if (!enumerate_automorphisms(sub, budget).is_trivial()) {
      throw InvalidArgument("nu: component containing vertex " + std::to_string(comp.front()) +
                            " is not asymmetric");
    }
  }
  for (const auto& cls : parts.classes) {
    if (cls.size() > 1) return static_cast<int>(parts.components[cls.front()].size());
  }
  return g.order();
}

}  // namespace symbreak
