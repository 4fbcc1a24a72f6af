#pragma once

#include <span>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Bijection on {0..n-1}; image()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless `image` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<const Vertex> image() const { return image_; }
  bool is_identity() const;

  Permutation inverse() const;
  // (p * q)(v) = p(q(v)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

struct CycleDecomposition {
  // Cycles of length >= 2, each starting at its smallest element, ordered by
  // that element.
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> fixed_points;
  // Fixed points count as cycles of length one.
  int cycle_count = 0;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

// Inverse of cycle_decomposition: rebuilds the permutation on n points.
Permutation from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles);

std::string to_cycle_string(const Permutation& p);

}  // namespace symbreak
