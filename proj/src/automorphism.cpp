#include "symbreak/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail/matcher.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

namespace {

constexpr int kMaxDegree = 256;

void fill_inverses(int degree, std::span<const std::uint8_t> images,
                   std::vector<std::uint8_t>& inverses) {
  inverses.assign(images.size(), 0);
  for (std::size_t off = 0; off < images.size(); off += degree) {
    for (int i = 0; i < degree; ++i) {
      inverses[off + images[off + i]] = static_cast<std::uint8_t>(i);
    }
  }
}

}  // namespace

AutGroup::AutGroup(int degree, std::vector<std::vector<Vertex>> images) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) throw InvalidArgument("group degree out of range");
  for (const auto& im : images) {
    if (static_cast<int>(im.size()) != degree) throw InvalidArgument("element of wrong degree");
    Permutation check(im);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images.empty() || !Permutation(images.front()).is_identity()) {
    throw InvalidArgument("group must contain the identity");
  }
  order_ = images.size();
  images_.reserve(images.size() * degree);
  for (const auto& im : images) {
    for (Vertex v : im) images_.push_back(static_cast<std::uint8_t>(v));
  }
  fill_inverses(degree_, images_, inverses_);
}

AutGroup AutGroup::trivial(int n) {
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), 0);
  return AutGroup(n, {id});
}

Permutation AutGroup::element(std::size_t i) const {
  const auto im = image(i);
  return Permutation(std::vector<Vertex>(im.begin(), im.end()));
}

std::vector<Permutation> AutGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

bool AutGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  std::size_t lo = 0, hi = order_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto im = image(mid);
    const auto cmp = std::lexicographical_compare_three_way(
        im.begin(), im.end(), p.image().begin(), p.image().end());
    if (cmp == 0) return true;
    if (cmp < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return false;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw InvalidArgument("permutation degree " + std::to_string(p.degree()) +
                          " does not match graph order " + std::to_string(g.order()));
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
    }
  }
  return true;
}

AutGroup enumerate_automorphisms(const Graph& g, const Budget& budget) {
  const int n = g.order();
  if (n > budget.max_vertices || n > kMaxDegree) {
    throw InvalidArgument("graph with " + std::to_string(n) + " vertices exceeds the vertex cap");
  }
  std::vector<std::uint8_t> flat;
  std::uint64_t count = 0;
  detail::Matcher matcher(g, g);
  matcher.run([&](std::span<const Vertex> map) {
    if (++count > budget.max_automorphisms) {
      throw BudgetExceeded("automorphism group exceeds the budget of " +
                           std::to_string(budget.max_automorphisms) + " elements");
    }
    for (Vertex v : map) flat.push_back(static_cast<std::uint8_t>(v));
    return true;
  });

  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * n, flat.begin() + (a + 1) * n,
                                        flat.begin() + b * n, flat.begin() + (b + 1) * n);
  });
  AutGroup out;
  out.degree_ = n;
  out.order_ = count;
  out.images_.reserve(flat.size());
  for (std::size_t i : idx) {
    out.images_.insert(out.images_.end(), flat.begin() + i * n, flat.begin() + (i + 1) * n);
  }
  fill_inverses(n, out.images_, out.inverses_);
  return out;
}

std::uint64_t automorphism_group_order(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<Vertex, Vertex>> fixed;
  std::uint64_t order = 1;
  for (Vertex b = 0; b < n; ++b) {
    std::vector<char> in_orbit(n, 0);
    in_orbit[b] = 1;
    std::uint64_t orbit_size = 1;
    for (Vertex w = 0; w < n; ++w) {
      if (in_orbit[w]) continue;
      auto forced = fixed;
      forced.emplace_back(b, w);
      detail::Matcher m(g, g, forced);
      std::vector<Vertex> found;
      m.run([&](std::span<const Vertex> map) {
        found.assign(map.begin(), map.end());
        return false;
      });
      if (found.empty()) continue;
      // The orbit is closed under the found element.
      std::vector<Vertex> frontier;
      for (Vertex x = 0; x < n; ++x) {
        if (in_orbit[x]) frontier.push_back(x);
      }
      while (!frontier.empty()) {
        const Vertex x = frontier.back();
        frontier.pop_back();
        const Vertex y = found[x];
        if (!in_orbit[y]) {
          in_orbit[y] = 1;
          ++orbit_size;
          frontier.push_back(y);
        }
      }
    }
    if (__builtin_mul_overflow(order, orbit_size, &order)) {
      throw OverflowError("automorphism group order exceeds 64 bits");
    }
    fixed.emplace_back(b, b);
  }
  return order;
}

AutGroup stabilizer(const AutGroup& group, Vertex u) {
  if (u < 0 || u >= group.degree()) throw InvalidArgument("stabilizer: vertex out of range");
  AutGroup out;
  out.degree_ = group.degree_;
  for (std::size_t i = 0; i < group.order_; ++i) {
    const auto im = group.image(i);
    if (im[u] != u) continue;
    out.images_.insert(out.images_.end(), im.begin(), im.end());
    ++out.order_;
  }
  fill_inverses(out.degree_, out.images_, out.inverses_);
  return out;
}

AutGroup restrict_stabilizer(const AutGroup& group, Vertex u) {
  if (u < 0 || u >= group.degree()) throw InvalidArgument("restrict_stabilizer: vertex out of range");
  AutGroup out;
  out.degree_ = group.degree_ - 1;
  const auto shift = [u](int v) { return v < u ? v : v - 1; };
  for (std::size_t i = 0; i < group.order_; ++i) {
    const auto im = group.image(i);
    if (im[u] != u) continue;
    for (int v = 0; v < group.degree_; ++v) {
      if (v != u) out.images_.push_back(static_cast<std::uint8_t>(shift(im[v])));
    }
    ++out.order_;
  }
  // Restriction preserves the lexicographic order of the stabiliser elements.
  fill_inverses(out.degree_, out.images_, out.inverses_);
  return out;
}

std::vector<Vertex> orbit(const AutGroup& group, Vertex u) {
  if (u < 0 || u >= group.degree()) throw InvalidArgument("orbit: vertex out of range");
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < group.order(); ++i) seen.insert(group.image(i)[u]);
  return {seen.begin(), seen.end()};
}

std::optional<int> max_nonidentity_cycle_count(const AutGroup& group) {
  std::optional<int> best;
  const int n = group.degree();
  std::vector<char> seen(n);
  for (std::size_t i = 1; i < group.order(); ++i) {
    const auto im = group.image(i);
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      ++cycles;
      for (int w = v; !seen[w]; w = im[w]) seen[w] = 1;
    }
    if (!best || cycles > *best) best = cycles;
  }
  return best;
}

}  // namespace symbreak
