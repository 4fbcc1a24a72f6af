#pragma once

#include <span>
#include <string>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/combinatorics.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// Value of a closed form together with the hypotheses it was derived under.
// When a hypothesis fails, reason names the first one that did.
struct Prediction {
  Count value = 0;
  bool preconditions_met = true;
  std::string reason;
};

// 1/2 (k^n - k^ceil(n/2)): distinguishing colourings of P_n up to reversal.
Count phi_path_closed(int n, int k);
// C(k, n).
Count phi_complete_closed(int n, int k);

// min{k : Phi_k(G-u) >= t}, claimed exact when u is steady and an upper
// bound otherwise.
Prediction d_vertex_sum_power(const Graph& g, Vertex u, int t, const Budget& budget = {});

// min{k : C(k, n-1) >= t}, t copies of K_n glued at a vertex.
int d_vsum_complete_closed(int n, int t);
// min{k : k^(n-1) - k^ceil((n-1)/2) >= 2t}, t copies of C_n glued at a vertex.
int d_vsum_cycles(int n, int t);

// Radical expressions for the same quantities:
//   K3  floor((1 + sqrt(8t+1)) / 2)
//   K4  ceil(c/3 + 1/c) with c = cbrt(81t + 3 sqrt(729t^2 - 3))
//   K5  ceil((3 + sqrt(5 + 4 sqrt(24t+1))) / 2)
int d_vsum_complete_radical(int n, int t);
//   odd n: ceil( ((1 + sqrt(8t+1)) / 2)^(2/(n-1)) )
int d_vsum_odd_cycle_radical(int n, int t);

struct RadicalRow {
  std::string family;  // "K3", "K4", "K5", "C5", ...
  int t = 0;
  int min_form = 0;
  int radical = 0;
  bool agree() const { return min_form == radical; }
};

// Every radical expression against its min-form for t in [t_min, t_max]:
// K3, K4, K5 and the odd cycles C3..C9.
std::vector<RadicalRow> radical_form_table(int t_min, int t_max);

// max_i D(G_i - u) for a vertex-sum of 2-connected, pairwise non-isomorphic
// rooted factors whose roots are steady.
Prediction d_vsum_nonisomorphic(std::span<const RootedGraph> factors, const Budget& budget = {});

// Threshold of a disjoint union of connected graphs from the thresholds of
// the parts, split by which parts are asymmetric.
Prediction theta_union(std::span<const Graph> components, const Budget& budget = {});

// theta(G') + 1 where G' is the union of the factors minus their roots;
// factors 2-connected with steady roots.
Prediction theta_vsum_2connected(std::span<const RootedGraph> factors,
                                 const Budget& budget = {});
// ceil((n-1)/2) + (n-1)(t-1) + 2.
int theta_vsum_cycles(int n, int t);

// |Aut(G)| |Aut(H,v)|^|G|.
Prediction rooted_aut_order(const Graph& g, const RootedGraph& h, const Budget& budget = {});
// min{k : k Phi_k(H,v) >= D(G)}, where Phi_k(H,v) counts colourings of H-v
// up to the stabiliser of v.
Prediction d_rooted(const Graph& g, const RootedGraph& h, const Budget& budget = {});
// (|G|-1)|H| + theta(H,v), or 1 when Aut(G) and Aut(H,v) are both trivial.
Prediction theta_rooted(const Graph& g, const RootedGraph& h, const Budget& budget = {});

// |Aut(G)| |Aut(H)|^|G|; needs G connected with at least two vertices.
Prediction corona_aut_order(const Graph& g, const Graph& h, const Budget& budget = {});
// min{k : k Phi_k(H) >= D(G)}; needs G not K1.
Prediction d_corona(const Graph& g, const Graph& h, const Budget& budget = {});
// |G| + |H|(|G|-1) + theta(H) when Aut(H) is non-trivial,
// (|H|+1) theta(G) - |H| otherwise.
Prediction theta_corona(const Graph& g, const Graph& h, const Budget& budget = {});

// min{k : Phi_k(H) >= D(G)}; needs every automorphism of G o H natural.
Prediction d_lexicographic(const Graph& g, const Graph& h, const Budget& budget = {});
// (|G|-1)|H| + theta(H) when Aut(H) is non-trivial,
// (theta(G)-1)|H| + 1 otherwise; needs every automorphism natural.
Prediction theta_lexicographic(const Graph& g, const Graph& h, const Budget& budget = {});

}  // namespace symbreak
