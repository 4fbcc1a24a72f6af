#include "symbreak/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "symbreak/automorphism.hpp"
#include "symbreak/error.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/products.hpp"

namespace symbreak {

namespace {

constexpr int kMaxPalette = 64;

// Smallest k whose row satisfies ok(k, Phi_k), extending the table as needed.
template <class Pred>
int least_k(const AutGroup& group, Pred ok, const Budget& budget) {
  for (int kmax = 4; kmax <= kMaxPalette; kmax *= 2) {
    const PhiTable table = phi_table(group, kmax, budget);
    for (const PhiRow& row : table.rows) {
      if (ok(row.k, row.Phi)) return row.k;
    }
  }
  throw Error("no palette of at most " + std::to_string(kMaxPalette) +
              " colours meets the criterion");
}

void fail(Prediction& p, const std::string& why) {
  if (p.preconditions_met) p.reason = why;
  p.preconditions_met = false;
}

void require_connected(const Graph& g, const std::string& what) {
  if (!is_connected(g)) throw InvalidArgument(what + " must be connected");
}

std::string factor_name(std::size_t i) { return "factor " + std::to_string(i + 1); }

// Pulls a long double that sits within rounding noise of an integer onto it.
long double snap(long double x) {
  const long double r = std::round(x);
  return std::fabs(x - r) < 1e-9L ? r : x;
}

long long isqrt(long long x) {
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::uint64_t stabilizer_order(const AutGroup& aut, Vertex v) {
  return aut.order() / orbit(aut, v).size();
}

Count power_of(std::uint64_t base, int exp) {
  Count out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, static_cast<Count>(base));
  return out;
}

}  // namespace

Count phi_path_closed(int n, int k) {
  if (n < 1 || k < 1) throw InvalidArgument("phi_path_closed needs n, k >= 1");
  return (checked_pow(k, n) - checked_pow(k, (n + 1) / 2)) / 2;
}

Count phi_complete_closed(int n, int k) {
  if (n < 1 || k < 0) throw InvalidArgument("phi_complete_closed needs n >= 1, k >= 0");
  return binomial(k, n);
}

Prediction d_vertex_sum_power(const Graph& g, Vertex u, int t, const Budget& budget) {
  if (t < 2) throw InvalidArgument("vertex-sum power needs t >= 2");
  if (g.order() < 2) throw InvalidArgument("vertex-sum power needs at least two vertices");
  if (u < 0 || u >= g.order()) throw InvalidArgument("root out of range");
  require_connected(g, "G");
  const Graph rest = delete_vertex(g, u);
  Prediction p;
  p.value = least_k(enumerate_automorphisms(rest, budget),
                    [&](int, Count Phi) { return Phi >= t; }, budget);
  if (!is_steady(g, u, budget)) fail(p, "root not steady");
  return p;
}

int d_vsum_complete_closed(int n, int t) {
  if (n < 2 || t < 1) throw InvalidArgument("d_vsum_complete_closed needs n >= 2, t >= 1");
  int k = n - 1;
  while (binomial(k, n - 1) < t) ++k;
  return k;
}

int d_vsum_cycles(int n, int t) {
  if (n < 3 || t < 1) throw InvalidArgument("d_vsum_cycles needs n >= 3, t >= 1");
  for (int k = 1;; ++k) {
    if (checked_pow(k, n - 1) - checked_pow(k, n / 2) >= 2LL * t) return k;
  }
}

int d_vsum_complete_radical(int n, int t) {
  if (t < 1) throw InvalidArgument("radical forms need t >= 1");
  const long double tt = t;
  switch (n) {
    case 3:
      // floor((1 + s)/2) depends only on floor(s), so the integer root is exact.
      return static_cast<int>((1 + isqrt(8LL * t + 1)) / 2);
    case 4: {
      const long double c = std::cbrt(81 * tt + 3 * std::sqrt(729 * tt * tt - 3));
      return static_cast<int>(std::ceil(snap(c / 3 + 1 / c)));
    }
    case 5:
      return static_cast<int>(
          std::ceil(snap((3 + std::sqrt(5 + 4 * std::sqrt(24 * tt + 1))) / 2)));
    default:
      throw InvalidArgument("radical forms exist for K3, K4 and K5 only");
  }
}

int d_vsum_odd_cycle_radical(int n, int t) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("odd-cycle radical form needs odd n >= 3");
  if (t < 1) throw InvalidArgument("radical forms need t >= 1");
  const long double base = (1 + std::sqrt(8.0L * t + 1)) / 2;
  return static_cast<int>(std::ceil(snap(std::pow(base, 2.0L / (n - 1)))));
}

std::vector<RadicalRow> radical_form_table(int t_min, int t_max) {
  std::vector<RadicalRow> rows;
  for (int n = 3; n <= 5; ++n) {
    for (int t = t_min; t <= t_max; ++t) {
      rows.push_back({"K" + std::to_string(n), t, d_vsum_complete_closed(n, t),
                      d_vsum_complete_radical(n, t)});
    }
  }
  for (int n = 3; n <= 9; n += 2) {
    for (int t = t_min; t <= t_max; ++t) {
      rows.push_back({"C" + std::to_string(n), t, d_vsum_cycles(n, t),
                      d_vsum_odd_cycle_radical(n, t)});
    }
  }
  return rows;
}

Prediction d_vsum_nonisomorphic(std::span<const RootedGraph> factors, const Budget& budget) {
  if (factors.size() < 2) throw InvalidArgument("vertex-sum needs at least two factors");
  Prediction p;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const RootedGraph& f = factors[i];
    require_connected(f.graph, factor_name(i));
    if (f.graph.order() < 2) throw InvalidArgument(factor_name(i) + " has a single vertex");
    p.value = std::max<Count>(p.value, distinguishing_number(delete_vertex(f.graph, f.root), budget));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_2connected(factors[i].graph)) fail(p, factor_name(i) + " is not 2-connected");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_steady(factors[i].graph, factors[i].root, budget)) {
      fail(p, "root not steady in " + factor_name(i));
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (is_isomorphic(factors[i], factors[j])) {
        fail(p, factor_name(i) + " and " + factor_name(j) + " are isomorphic");
      }
    }
  }
  return p;
}

Prediction theta_union(std::span<const Graph> components, const Budget& budget) {
  if (components.empty()) throw InvalidArgument("union needs at least one component");
  std::vector<int> symmetric, asymmetric;
  std::vector<int> theta(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].order() < 1) throw InvalidArgument("empty component");
    require_connected(components[i], "component " + std::to_string(i + 1));
    const AutGroup aut = enumerate_automorphisms(components[i], budget);
    theta[i] = distinguishing_threshold(aut);
    (aut.is_trivial() ? asymmetric : symmetric).push_back(static_cast<int>(i));
  }
  const auto order_of = [&](const std::vector<int>& idx) {
    int n = 0;
    for (int i : idx) n += components[i].order();
    return n;
  };
  // All parts symmetric.
  const auto all_symmetric = [&](const std::vector<int>& idx) {
    const int total = order_of(idx);
    int best = 0;
    for (int i : idx) best = std::max(best, theta[i] + total - components[i].order());
    return best;
  };
  // All parts asymmetric.
  const auto all_asymmetric = [&](const std::vector<int>& idx, bool& union_asymmetric) {
    std::vector<Graph> parts;
    for (int i : idx) parts.push_back(components[i]);
    const Graph un = disjoint_union(parts).graph;
    const int v = nu(un, budget);
    union_asymmetric = v == un.order();
    return un.order() - v + 1;
  };

  Prediction p;
  bool b_asymmetric = false;
  if (asymmetric.empty()) {
    p.value = all_symmetric(symmetric);
  } else if (symmetric.empty()) {
    p.value = all_asymmetric(asymmetric, b_asymmetric);
  } else {
    const int theta_a = all_symmetric(symmetric);
    const int theta_b = all_asymmetric(asymmetric, b_asymmetric);
    const int n_a = order_of(symmetric);
    const int n_b = order_of(asymmetric);
    if (b_asymmetric && theta_a + n_b <= theta_b + n_a) {
      p.value = theta_a + n_b;
    } else {
      p.value = std::max(theta_a + n_b, theta_b + n_a);
    }
  }
  return p;
}

Prediction theta_vsum_2connected(std::span<const RootedGraph> factors, const Budget& budget) {
  if (factors.size() < 2) throw InvalidArgument("vertex-sum needs at least two factors");
  std::vector<Graph> rest;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    require_connected(factors[i].graph, factor_name(i));
    if (factors[i].graph.order() < 2) throw InvalidArgument(factor_name(i) + " has a single vertex");
    rest.push_back(delete_vertex(factors[i].graph, factors[i].root));
  }
  const Graph g_prime = disjoint_union(rest).graph;
  const AutGroup aut = enumerate_automorphisms(g_prime, budget);
  Prediction p;
  p.value = distinguishing_threshold(aut) + 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_2connected(factors[i].graph)) fail(p, factor_name(i) + " is not 2-connected");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_steady(factors[i].graph, factors[i].root, budget)) {
      fail(p, "root not steady in " + factor_name(i));
    }
  }
  return p;
}

int theta_vsum_cycles(int n, int t) {
  if (n < 3 || t < 1) throw InvalidArgument("theta_vsum_cycles needs n >= 3, t >= 1");
  return n / 2 + (n - 1) * (t - 1) + 2;
}

namespace {

void require_rooted_factors(const Graph& g, const RootedGraph& h) {
  require_connected(g, "G");
  require_connected(h.graph, "H");
  if (g.order() < 2 || h.graph.order() < 2) {
    throw InvalidArgument("rooted product needs |G|, |H| >= 2");
  }
}

}  // namespace

Prediction rooted_aut_order(const Graph& g, const RootedGraph& h, const Budget& budget) {
  require_rooted_factors(g, h);
  const AutGroup aut_h = enumerate_automorphisms(h.graph, budget);
  Prediction p;
  p.value = checked_mul(static_cast<Count>(automorphism_group_order(g)),
                        power_of(stabilizer_order(aut_h, h.root), g.order()));
  return p;
}

Prediction d_rooted(const Graph& g, const RootedGraph& h, const Budget& budget) {
  require_rooted_factors(g, h);
  const int d_g = distinguishing_number(g, budget);
  const AutGroup rest = restrict_stabilizer(enumerate_automorphisms(h.graph, budget), h.root);
  Prediction p;
  p.value = least_k(rest, [&](int k, Count Phi) { return checked_mul(k, Phi) >= d_g; }, budget);
  return p;
}

Prediction theta_rooted(const Graph& g, const RootedGraph& h, const Budget& budget) {
  require_rooted_factors(g, h);
  const AutGroup stab = stabilizer(enumerate_automorphisms(h.graph, budget), h.root);
  Prediction p;
  if (stab.is_trivial() && automorphism_group_order(g) == 1) {
    p.value = 1;
  } else {
    p.value = (g.order() - 1) * h.graph.order() + distinguishing_threshold(stab);
  }
  return p;
}

Prediction corona_aut_order(const Graph& g, const Graph& h, const Budget& budget) {
  if (g.order() < 1 || h.order() < 1) throw InvalidArgument("corona factors need vertices");
  Prediction p;
  p.value = checked_mul(static_cast<Count>(automorphism_group_order(g)),
                        power_of(enumerate_automorphisms(h, budget).order(), g.order()));
  if (g.order() < 2) fail(p, "G is K1");
  if (!is_connected(g)) fail(p, "G is disconnected");
  return p;
}

Prediction d_corona(const Graph& g, const Graph& h, const Budget& budget) {
  if (g.order() < 1 || h.order() < 1) throw InvalidArgument("corona factors need vertices");
  const int d_g = distinguishing_number(g, budget);
  Prediction p;
  p.value = least_k(enumerate_automorphisms(h, budget),
                    [&](int k, Count Phi) { return checked_mul(k, Phi) >= d_g; }, budget);
  if (g.order() < 2) fail(p, "G is K1");
  return p;
}

Prediction theta_corona(const Graph& g, const Graph& h, const Budget& budget) {
  if (g.order() < 1 || h.order() < 1) throw InvalidArgument("corona factors need vertices");
  const int n = g.order();
  const int m = h.order();
  const AutGroup aut_h = enumerate_automorphisms(h, budget);
  Prediction p;
  if (!aut_h.is_trivial()) {
    p.value = n + m * (n - 1) + distinguishing_threshold(aut_h);
  } else {
    p.value = (m + 1) * distinguishing_threshold(g, budget) - m;
  }
  return p;
}

Prediction d_lexicographic(const Graph& g, const Graph& h, const Budget& budget) {
  if (g.order() < 1 || h.order() < 1) throw InvalidArgument("lexicographic factors need vertices");
  const int d_g = distinguishing_number(g, budget);
  Prediction p;
  p.value = least_k(enumerate_automorphisms(h, budget),
                    [&](int, Count Phi) { return Phi >= d_g; }, budget);
  if (!all_automorphisms_natural(g, h, budget)) fail(p, "product has unnatural automorphisms");
  return p;
}

Prediction theta_lexicographic(const Graph& g, const Graph& h, const Budget& budget) {
  if (g.order() < 1 || h.order() < 1) throw InvalidArgument("lexicographic factors need vertices");
  const AutGroup aut_h = enumerate_automorphisms(h, budget);
  Prediction p;
  if (!aut_h.is_trivial()) {
    p.value = (g.order() - 1) * h.order() + distinguishing_threshold(aut_h);
  } else {
    p.value = (distinguishing_threshold(g, budget) - 1) * h.order() + 1;
  }
  if (!all_automorphisms_natural(g, h, budget)) fail(p, "product has unnatural automorphisms");
  return p;
}

}  // namespace symbreak
