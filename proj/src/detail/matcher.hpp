#pragma once

// Backtracking search for isomorphisms between two graphs of equal order.
// Shared by the isomorphism test and the automorphism enumerator.

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak::detail {

class Matcher {
 public:
  // `forced` pairs (a-vertex, b-vertex) are individualised before refinement,
  // so every reported map sends each forced a-vertex to its partner.
  Matcher(const Graph& a, const Graph& b,
          std::span<const std::pair<Vertex, Vertex>> forced = {})
      : a_(a), b_(b), n_(a.order()) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
      feasible_ = false;
      return;
    }
    feasible_ = refine(forced);
    if (feasible_) build_order();
  }

  bool feasible() const { return feasible_; }

  // Calls visit(map) for every isomorphism, where map[v] is the image of the
  // a-vertex v. visit returns false to stop the search.
  template <class Visit>
  void run(Visit&& visit) {
    if (!feasible_) return;
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    stop_ = false;
    if (n_ == 0) {
      visit(std::span<const Vertex>(map_));
      return;
    }
    extend(0, visit);
  }

  bool exists() {
    bool found = false;
    run([&](std::span<const Vertex>) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  // Joint colour refinement of both graphs, starting from degrees.
  bool refine(std::span<const std::pair<Vertex, Vertex>> forced) {
    la_.assign(n_, 0);
    lb_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      la_[v] = a_.degree(v);
      lb_[v] = b_.degree(v);
    }
    int tag = n_ + 1;
    for (const auto& [x, y] : forced) {
      if (la_[x] != lb_[y]) return false;
      la_[x] = tag;
      lb_[y] = tag;
      ++tag;
    }
    std::size_t classes = count_classes();
    while (true) {
      std::map<std::vector<int>, int> ids;
      auto signature = [&](const Graph& g, const std::vector<int>& lab, Vertex v) {
        std::vector<int> sig{lab[v]};
        for (Vertex w : g.neighbors(v)) sig.push_back(lab[w]);
        std::sort(sig.begin() + 1, sig.end());
        return sig;
      };
      std::vector<std::vector<int>> sa(n_), sb(n_);
      for (Vertex v = 0; v < n_; ++v) {
        sa[v] = signature(a_, la_, v);
        sb[v] = signature(b_, lb_, v);
        ids.emplace(sa[v], 0);
        ids.emplace(sb[v], 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (Vertex v = 0; v < n_; ++v) {
        la_[v] = ids[sa[v]];
        lb_[v] = ids[sb[v]];
      }
      if (!same_histogram()) return false;
      const std::size_t now = count_classes();
      if (now == classes) break;
      classes = now;
    }
    return same_histogram();
  }

  std::size_t count_classes() const {
    std::vector<int> s(la_);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  bool same_histogram() const {
    std::vector<int> x(la_), y(lb_);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  // Start from the smallest class; then always take the unplaced vertex with
  // the most placed neighbours, breaking ties by class size and id.
  void build_order() {
    std::map<int, int> class_size;
    for (int l : la_) ++class_size[l];
    candidates_.assign(n_, {});
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w = 0; w < n_; ++w) {
        if (lb_[w] == la_[v]) candidates_[v].push_back(w);
      }
    }
    std::vector<char> placed(n_, 0);
    std::vector<int> placed_nbrs(n_, 0);
    order_.clear();
    for (int step = 0; step < n_; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const auto key = [&](Vertex x) {
          return std::make_tuple(-placed_nbrs[x], class_size[la_[x]], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex w : a_.neighbors(best)) ++placed_nbrs[w];
    }
  }

  template <class Visit>
  void extend(int depth, Visit& visit) {
    const Vertex v = order_[depth];
    for (Vertex w : candidates_[v]) {
      if (used_[w]) continue;
      bool ok = true;
      for (int e = 0; e < depth; ++e) {
        const Vertex u = order_[e];
        if (a_.adjacent(v, u) != b_.adjacent(w, map_[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = 1;
      if (depth + 1 == n_) {
        if (!visit(std::span<const Vertex>(map_))) stop_ = true;
      } else {
        extend(depth + 1, visit);
      }
      used_[w] = 0;
      map_[v] = -1;
      if (stop_) return;
    }
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  bool feasible_ = true;
  bool stop_ = false;
  std::vector<int> la_, lb_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace symbreak::detail
