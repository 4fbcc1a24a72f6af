#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

// A fully enumerated permutation group. Elements are kept sorted
// lexicographically by image array, so the identity comes first.
// Images are stored flat as bytes, which limits the degree to 256.
class AutGroup {
 public:
  // Sorts and deduplicates `images`; each must be a permutation of 0..degree-1
  // and the identity must be among them.
  AutGroup(int degree, std::vector<std::vector<Vertex>> images);

  // The trivial group on n points.
  static AutGroup trivial(int n);

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::span<const std::uint8_t> image(std::size_t i) const {
    return {images_.data() + i * degree_, static_cast<std::size_t>(degree_)};
  }
  std::span<const std::uint8_t> inverse_image(std::size_t i) const {
    return {inverses_.data() + i * degree_, static_cast<std::size_t>(degree_)};
  }
  Permutation element(std::size_t i) const;
  std::vector<Permutation> elements() const;
  bool contains(const Permutation& p) const;

 private:
  AutGroup() = default;
  int degree_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint8_t> images_;
  std::vector<std::uint8_t> inverses_;

  friend AutGroup stabilizer(const AutGroup&, Vertex);
  friend AutGroup restrict_stabilizer(const AutGroup&, Vertex);
  friend AutGroup enumerate_automorphisms(const Graph&, const Budget&);
};

// Throws InvalidArgument when the lengths differ.
bool is_automorphism(const Graph& g, const Permutation& p);

// Every automorphism of g. Throws BudgetExceeded as soon as the group order
// passes budget.max_automorphisms.
AutGroup enumerate_automorphisms(const Graph& g, const Budget& budget = {});

// |Aut(g)| from a pointwise-stabiliser chain; no element list is built, so it
// works for groups far beyond the enumeration budget.
std::uint64_t automorphism_group_order(const Graph& g);

// Elements fixing u.
AutGroup stabilizer(const AutGroup& group, Vertex u);

// Stabiliser of u acting on the remaining points, renumbered as by
// delete_vertex (points above u shift down by one).
AutGroup restrict_stabilizer(const AutGroup& group, Vertex u);

std::vector<Vertex> orbit(const AutGroup& group, Vertex u);

// Largest cycle count over non-identity elements; empty for a trivial group.
std::optional<int> max_nonidentity_cycle_count(const AutGroup& group);

}  // namespace symbreak
