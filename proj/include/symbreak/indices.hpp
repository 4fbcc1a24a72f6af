#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/budget.hpp"
#include "symbreak/combinatorics.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// Vertex colouring with colours 1..palette.
struct Coloring {
  std::vector<int> colors;
  int palette = 0;

  Coloring() = default;
  // Throws InvalidArgument when an entry lies outside 1..palette.
  Coloring(std::vector<int> colors, int palette);
  // Palette defaults to the largest colour used.
  explicit Coloring(std::vector<int> colors);

  int size() const { return static_cast<int>(colors.size()); }
};

// Phi = non-equivalent distinguishing colourings with at most k colours,
// phi = the same with exactly k colours.
struct PhiRow {
  int k = 0;
  Count Phi = 0;
  Count phi = 0;
};

struct PhiTable {
  std::vector<PhiRow> rows;  // k = 1..kmax
  int distinguishing_number = 0;
  int theta = 0;
  std::uint64_t group_order = 0;

  const PhiRow& at(int k) const { return rows.at(k - 1); }
};

struct IndexReport {
  int D = 0;
  int theta = 0;
  std::uint64_t aut_order = 0;
  PhiTable phi_table;
  std::optional<std::vector<Vertex>> steady_vertices;
};

// --- group-level computations (the group acts on vertices 0..degree-1) ---

bool is_distinguishing(const AutGroup& group, const Coloring& c);
// True iff some element a has c1(v) == c2(a(v)) for every v.
bool are_equivalent(const AutGroup& group, const Coloring& c1, const Coloring& c2);

// count[j] is the number of set partitions of the points into exactly j
// blocks (j = 0..max_blocks) whose colourings are distinguishing. Colourings
// with a fixed block structure are distinguishing or not together, so this is
// a complete census of distinguishing colourings up to renaming colours.
std::vector<Count> distinguishing_partition_counts(const AutGroup& group, int max_blocks,
                                                   const Budget& budget = {});

int distinguishing_number(const AutGroup& group, const Budget& budget = {});
int distinguishing_threshold(const AutGroup& group);
PhiTable phi_table(const AutGroup& group, int kmax, const Budget& budget = {});

// --- graph-level computations ---

bool is_distinguishing(const Graph& g, const AutGroup& group, const Coloring& c);
bool are_equivalent(const Graph& g, const AutGroup& group, const Coloring& c1,
                    const Coloring& c2);

int distinguishing_number(const Graph& g, const Budget& budget = {});
int distinguishing_threshold(const Graph& g, const Budget& budget = {});
PhiRow phi(const Graph& g, int k, const Budget& budget = {});
PhiTable phi_table(const Graph& g, int kmax, const Budget& budget = {});

// D, theta, |Aut| and Phi/phi for k = 1..phi_max.
IndexReport analyze(const Graph& g, int phi_max, bool with_steady, const Budget& budget = {});

// Same indices for the stabiliser of the root, colourings ranging over all of
// V(H) including the root.
IndexReport rooted_indices(const RootedGraph& h, int phi_max, const Budget& budget = {});

// Every automorphism of G-u maps the (relabelled) neighbourhood of u onto
// itself.
bool is_steady(const Graph& g, Vertex u, const Budget& budget = {});
std::vector<Vertex> steady_vertices(const Graph& g, const Budget& budget = {});

// Size of a member of the smallest isomorphism class with more than one
// component, or |G| when no class repeats. Throws InvalidArgument when some
// component has a non-trivial automorphism.
int nu(const Graph& g, const Budget& budget = {});

}  // namespace symbreak
