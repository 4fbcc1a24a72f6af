#include "symbreak/permutation.hpp"

#include <numeric>

#include "symbreak/error.hpp"

namespace symbreak {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (Vertex v : image_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw InvalidArgument("permutation image is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  Permutation out;
  out.image_ = std::move(inv);
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("composing permutations of different degree");
  std::vector<Vertex> image(q.image_.size());
  for (int i = 0; i < q.degree(); ++i) image[i] = p.image_[q.image_[i]];
  Permutation out;
  out.image_ = std::move(image);
  return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  std::vector<char> seen(p.degree(), 0);
  for (Vertex v = 0; v < p.degree(); ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> cyc;
    for (Vertex w = v; !seen[w]; w = p(w)) {
      seen[w] = 1;
      cyc.push_back(w);
    }
    if (cyc.size() == 1) {
      out.fixed_points.push_back(v);
    } else {
      out.cycles.push_back(std::move(cyc));
    }
  }
  out.cycle_count = static_cast<int>(out.cycles.size() + out.fixed_points.size());
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex from = cyc[i];
      if (from < 0 || from >= n) throw InvalidArgument("cycle element out of range");
      if (used[from]) throw InvalidArgument("point " + std::to_string(from) + " appears twice");
      used[from] = 1;
      image[from] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(image));
}

std::string to_cycle_string(const Permutation& p) {
  const auto dec = cycle_decomposition(p);
  if (dec.cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : dec.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace symbreak
