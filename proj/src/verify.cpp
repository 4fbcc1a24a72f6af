#include "symbreak/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "symbreak/automorphism.hpp"
#include "symbreak/error.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/io.hpp"
#include "symbreak/products.hpp"

namespace symbreak {

namespace detail {
extern const char* const kConnectedFixtures;
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::agree: return "agree";
    case VerdictStatus::disagree: return "disagree";
    case VerdictStatus::inconclusive: return "inconclusive";
    case VerdictStatus::skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> catalog = {
      {"path-phi", "Phi_k(P_n) = (k^n - k^ceil(n/2)) / 2", "n, k"},
      {"complete-phi", "Phi_k(K_n) = C(k, n)", "n, k"},
      {"stirling-phi", "phi_k(G) = k! S(n,k) / |Aut(G)| for k >= theta(G)", "G, k | dk (k = theta + dk)"},
      {"union-threshold", "threshold of a disjoint union from the thresholds of its components",
       "G1, G2, ..."},
      {"vsum-power", "D of t copies of G glued at u is min{k : Phi_k(G-u) >= t}", "G[@u], t"},
      {"vsum-complete", "D of t copies of K_n glued at a vertex is min{k : C(k,n-1) >= t}",
       "n, t"},
      {"vsum-cycle",
       "D of t copies of C_n glued at a vertex is min{k : k^(n-1) - k^ceil((n-1)/2) >= 2t}",
       "n, t"},
      {"vsum-distinct",
       "D of a vertex-sum of distinct 2-connected factors with steady roots is max D(G_i - u)",
       "G1@u1, G2@u2, ..."},
      {"vsum-threshold",
       "threshold of a vertex-sum of 2-connected factors with steady roots is theta(G') + 1",
       "G1@u1, G2@u2, ..."},
      {"vsum-cycle-threshold",
       "threshold of t copies of C_n glued at a vertex is ceil((n-1)/2) + (n-1)(t-1) + 2", "n, t"},
      {"rooted-aut", "|Aut(G_s(H))| = |Aut(G)| |Aut(H,v)|^|G|", "G, H@v"},
      {"rooted-d", "D(G_s(H)) = min{k : k Phi_k(H,v) >= D(G)}", "G, H@v"},
      {"rooted-threshold",
       "theta(G_s(H)) = (|G|-1)|H| + theta(H,v), or 1 when G and (H,v) are asymmetric",
       "G, H@v"},
      {"corona-aut", "|Aut(G o H)| = |Aut(G)| |Aut(H)|^|G| for the corona", "G, H"},
      {"corona-d", "D(G o H) = min{k : k Phi_k(H) >= D(G)} for the corona", "G, H"},
      {"corona-threshold",
       "corona threshold: |G| + |H|(|G|-1) + theta(H), or (|H|+1) theta(G) - |H| when H is "
       "asymmetric",
       "G, H"},
      {"lex-d", "D(G[H]) = min{k : Phi_k(H) >= D(G)} when every automorphism is natural",
       "G, H"},
      {"lex-threshold",
       "lexicographic threshold: (|G|-1)|H| + theta(H), or (theta(G)-1)|H| + 1 when H is "
       "asymmetric",
       "G, H"},
  };
  return catalog;
}

const TheoremInfo& theorem_info(const std::string& id) {
  for (const TheoremInfo& info : theorem_catalog()) {
    if (info.id == id) return info;
  }
  throw InvalidArgument("unknown theorem id \"" + id + "\"");
}

std::optional<int> GridInstance::param(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string GridInstance::describe() const {
  std::string out;
  for (const GridGraph& g : graphs) {
    if (!out.empty()) out += ',';
    out += g.name;
    if (g.root) out += '@' + std::to_string(*g.root);
  }
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + '=' + std::to_string(v);
  }
  return out;
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s, const std::string& field) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw InvalidArgument("grid field \"" + field + "\": \"" + s + "\" is not an integer");
  }
  return v;
}

GridGraph parse_grid_graph(const std::string& token, const Budget& budget) {
  GridGraph out;
  std::string name = token;
  const auto at = token.rfind('@');
  if (at != std::string::npos && at + 1 < token.size() &&
      std::all_of(token.begin() + at + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    name = token.substr(0, at);
    out.root = parse_int(token.substr(at + 1), token);
  }
  out.name = name;
  out.graph = builtin_graph(name, budget);
  if (out.root && *out.root >= out.graph.order()) {
    throw InvalidArgument("grid field \"" + token + "\": root out of range");
  }
  return out;
}

GridGraph named(const Graph& g, std::optional<Vertex> root = std::nullopt) {
  return GridGraph{"g6:" + emit_graph6(g), g, root};
}

GridGraph builtin(const std::string& name, std::optional<Vertex> root = std::nullopt) {
  return GridGraph{name, builtin_graph(name), root};
}

GridInstance with_params(std::vector<GridGraph> graphs,
                         std::vector<std::pair<std::string, int>> params = {}) {
  return GridInstance{std::move(graphs), std::move(params)};
}

// Connected, six vertices, trivial automorphism group.
Graph asymmetric6() {
  const Edge e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}};
  return Graph(6, e);
}

// The smallest asymmetric tree: legs of length 1, 2 and 3 from a centre.
Graph asymmetric_tree7() {
  const Edge e[] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  return Graph(7, e);
}

}  // namespace

std::vector<GridInstance> parse_grid(const std::string& text, const Budget& budget) {
  std::vector<GridInstance> out;
  for (const std::string& chunk : split(text, ';')) {
    if (chunk.empty()) continue;
    std::vector<GridGraph> graphs;
    std::vector<std::pair<std::string, std::vector<int>>> ranges;
    for (const std::string& field : split(chunk, ',')) {
      if (field.empty()) throw InvalidArgument("empty field in grid \"" + chunk + "\"");
      const auto eq = field.find('=');
      if (eq == std::string::npos) {
        graphs.push_back(parse_grid_graph(field, budget));
        continue;
      }
      const std::string key = trim(field.substr(0, eq));
      const std::string value = trim(field.substr(eq + 1));
      if (key.empty()) throw InvalidArgument("grid field \"" + field + "\" has no key");
      std::vector<int> values;
      const auto dots = value.find("..");
      if (dots == std::string::npos) {
        values.push_back(parse_int(value, field));
      } else {
        const int lo = parse_int(value.substr(0, dots), field);
        const int hi = parse_int(value.substr(dots + 2), field);
        if (lo > hi) throw InvalidArgument("grid field \"" + field + "\" has an empty range");
        for (int v = lo; v <= hi; ++v) values.push_back(v);
      }
      ranges.emplace_back(key, std::move(values));
    }
    // Cartesian product, first key varying slowest.
    std::vector<std::vector<std::pair<std::string, int>>> combos = {{}};
    for (const auto& [key, values] : ranges) {
      std::vector<std::vector<std::pair<std::string, int>>> next;
      for (const auto& combo : combos) {
        for (int v : values) {
          auto c = combo;
          c.emplace_back(key, v);
          next.push_back(std::move(c));
        }
      }
      combos = std::move(next);
    }
    for (auto& combo : combos) out.push_back(GridInstance{graphs, std::move(combo)});
  }
  if (out.empty()) throw InvalidArgument("grid \"" + text + "\" holds no instances");
  return out;
}

const std::vector<Graph>& connected_fixtures() {
  static const std::vector<Graph> fixtures = [] {
    std::vector<Graph> out;
    std::istringstream in(detail::kConnectedFixtures);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (!line.empty()) out.push_back(parse_graph6(line));
    }
    return out;
  }();
  return fixtures;
}

namespace {

// One vertex from each orbit of Aut(h).
std::vector<Vertex> orbit_representatives(const Graph& h) {
  const AutGroup aut = enumerate_automorphisms(h);
  std::vector<char> seen(h.order(), 0);
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (seen[v]) continue;
    reps.push_back(v);
    for (Vertex w : orbit(aut, v)) seen[w] = 1;
  }
  return reps;
}

std::vector<GridInstance> parse_fixed(const std::string& text) { return parse_grid(text); }

}  // namespace

std::vector<GridInstance> default_grid(const std::string& id) {
  theorem_info(id);
  const auto& fixtures = connected_fixtures();
  std::vector<GridInstance> out;
  if (id == "path-phi") return parse_fixed("n=2..8,k=1..4");
  if (id == "complete-phi") return parse_fixed("n=2..6,k=1..8");
  if (id == "stirling-phi") {
    for (const Graph& g : fixtures) {
      for (int dk = 0; dk <= 2; ++dk) out.push_back(with_params({named(g)}, {{"dk", dk}}));
    }
    return out;
  }
  if (id == "union-threshold") {
    out = parse_fixed("P3,P3;K2,K2;C4,P3;K3,P4;P4,P4,P4;C5,K3;P3,K1;K1,K1,P3;P4,K1,K1");
    const GridGraph a = named(asymmetric6());
    const GridGraph t = named(asymmetric_tree7());
    const GridGraph k1 = builtin("K1");
    out.push_back(with_params({a, a}));
    out.push_back(with_params({a, k1}));
    out.push_back(with_params({k1, k1, a}));
    out.push_back(with_params({a, a, k1}));
    out.push_back(with_params({t, t}));
    out.push_back(with_params({a, t}));
    out.push_back(with_params({builtin("C4"), a}));
    out.push_back(with_params({builtin("K3"), a, a}));
    out.push_back(with_params({builtin("K2"), a}));
    out.push_back(with_params({builtin("P3"), t}));
    return out;
  }
  if (id == "vsum-power") {
    return parse_fixed(
        "K3@0,t=2..5;K4@0,t=2..4;C5@0,t=2..3;C4@0,t=2..3;diamond@0,t=2;P4@0,t=2;P3@1,t=2;"
        "paw@1,t=2..3");
  }
  if (id == "vsum-complete") return parse_fixed("n=3,t=2..5;n=4,t=2..4;n=5,t=2..3");
  if (id == "vsum-cycle") return parse_fixed("n=4,t=2..3;n=5,t=2..3;n=6,t=2");
  if (id == "vsum-distinct") {
    return parse_fixed(
        "K3@0,diamond@0;S3@0,P3@1;K3@0,K4@0;K3@0,C4@0;C4@0,C5@0;K4@0,C5@0;diamond@1,K3@0;"
        "K3@0,K3@0");
  }
  if (id == "vsum-threshold") {
    return parse_fixed(
        "K3@0,K3@0;C4@0,C4@0;K3@0,K4@0;C4@0,K4@0;C5@0,C5@0;K4@0,K4@0,K4@0;C5@0,K3@0;"
        "diamond@1,K3@0;diamond@0,K3@0");
  }
  if (id == "vsum-cycle-threshold") return parse_fixed("n=3..6,t=2..3");
  if (id.starts_with("rooted-")) {
    for (const Graph& g : fixtures) {
      for (const Graph& h : fixtures) {
        if (g.order() < 2 || h.order() < 2 || g.order() * h.order() > 12) continue;
        for (Vertex v : orbit_representatives(h)) out.push_back(with_params({named(g), named(h, v)}));
      }
    }
    return out;
  }
  if (id.starts_with("corona-")) {
    for (const Graph& g : fixtures) {
      for (const Graph& h : fixtures) {
        if (g.order() < 2 || g.order() * (h.order() + 1) > 12) continue;
        out.push_back(with_params({named(g), named(h)}));
      }
    }
    return out;
  }
  if (id.starts_with("lex-")) {
    for (const Graph& g : fixtures) {
      for (const Graph& h : fixtures) {
        if (g.order() * h.order() > 12) continue;
        out.push_back(with_params({named(g), named(h)}));
      }
    }
    return out;
  }
  throw InvalidArgument("no default grid for \"" + id + "\"");
}

// ---------------------------------------------------------------------------

struct Verifier::Cache {
  struct Facts {
    std::uint64_t order = 0;
    std::optional<AutGroup> group;
    std::optional<int> D;
    std::optional<int> theta;
  };
  std::unordered_map<std::string, Facts> facts;
};

Verifier::Verifier(Budget budget) : budget_(budget), cache_(std::make_unique<Cache>()) {}
Verifier::~Verifier() = default;

namespace {

struct Brute {
  const Budget& budget;
  std::unordered_map<std::string, Verifier::Cache::Facts>& memo;

  Verifier::Cache::Facts& facts(const Graph& g) {
    const std::string key = emit_graph6(g);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, Verifier::Cache::Facts{}).first;
      it->second.order = automorphism_group_order(g);
    }
    return it->second;
  }

  const AutGroup& group(const Graph& g) {
    auto& f = facts(g);
    if (!f.group) {
      if (f.order > budget.max_automorphisms) {
        throw BudgetExceeded("automorphism group of order " + std::to_string(f.order) +
                             " exceeds the budget of " +
                             std::to_string(budget.max_automorphisms));
      }
      f.group = enumerate_automorphisms(g, budget);
    }
    return *f.group;
  }

  Count aut_order(const Graph& g) { return static_cast<Count>(facts(g).order); }

  int D(const Graph& g) {
    auto& f = facts(g);
    if (!f.D) f.D = distinguishing_number(group(g), budget);
    return *f.D;
  }

  int theta(const Graph& g) {
    auto& f = facts(g);
    if (!f.theta) f.theta = has_twins(g) ? g.order() : distinguishing_threshold(group(g));
    return *f.theta;
  }

  // Distinguishing colourings from k colours up to equivalence, from the
  // census of distinguishing set partitions.
  Count Phi(const Graph& g, int k) {
    const AutGroup& aut = group(g);
    const auto blocks = distinguishing_partition_counts(aut, std::min(k, g.order()), budget);
    Count total = 0;
    for (int j = 1; j < static_cast<int>(blocks.size()); ++j) {
      total = checked_add(total, checked_mul(blocks[j], falling_factorial(k, j)));
    }
    return total / static_cast<Count>(aut.order());
  }

  // Same with exactly k colours.
  Count phi_exact(const Graph& g, int k) {
    if (k > g.order()) return 0;
    const AutGroup& aut = group(g);
    const auto blocks = distinguishing_partition_counts(aut, k, budget);
    return checked_mul(blocks[k], factorial(k)) / static_cast<Count>(aut.order());
  }
};

int need(const GridInstance& inst, const std::string& key) {
  const auto v = inst.param(key);
  if (!v) throw InvalidArgument("instance \"" + inst.describe() + "\" lacks " + key);
  return *v;
}

void need_graphs(const GridInstance& inst, std::size_t lo, std::size_t hi) {
  const std::size_t n = inst.graphs.size();
  if (n < lo || n > hi) {
    throw InvalidArgument("instance \"" + inst.describe() + "\" needs " +
                          (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") +
                          " graph(s)");
  }
}

std::vector<RootedGraph> rooted_list(const GridInstance& inst) {
  std::vector<RootedGraph> out;
  for (const GridGraph& g : inst.graphs) out.push_back(g.rooted());
  return out;
}

std::vector<Graph> graph_list(const GridInstance& inst) {
  std::vector<Graph> out;
  for (const GridGraph& g : inst.graphs) out.push_back(g.graph);
  return out;
}

struct Plan {
  Prediction prediction;
  std::function<Count()> brute;
};

}  // namespace

TheoremVerdict Verifier::run(const std::string& id, const GridInstance& inst) {
  theorem_info(id);
  TheoremVerdict v;
  v.theorem_id = id;
  v.instance = inst.describe();
  Brute brute{budget_, cache_->facts};
  const Budget& b = budget_;

  Plan plan;
  try {
    if (id == "path-phi") {
      need_graphs(inst, 0, 0);
      const int n = need(inst, "n"), k = need(inst, "k");
      plan.prediction.value = phi_path_closed(n, k);
      if (n < 2) {
        plan.prediction.preconditions_met = false;
        plan.prediction.reason = "n = 1 lies outside the formula's range";
      }
      plan.brute = [&, n, k] { return brute.Phi(path(n), k); };
    } else if (id == "complete-phi") {
      need_graphs(inst, 0, 0);
      const int n = need(inst, "n"), k = need(inst, "k");
      plan.prediction.value = phi_complete_closed(n, k);
      plan.brute = [&, n, k] { return brute.Phi(complete(n), k); };
    } else if (id == "stirling-phi") {
      need_graphs(inst, 1, 1);
      const Graph& g = inst.graphs[0].graph;
      const int theta = brute.theta(g);
      const auto dk = inst.param("dk");
      const int k = dk ? theta + *dk : need(inst, "k");
      if (k < 1) throw InvalidArgument("stirling-phi needs k >= 1");
      const auto order = static_cast<Count>(brute.aut_order(g));
      const Count top = k > g.order() ? 0 : checked_mul(factorial(k), stirling2(g.order(), k));
      plan.prediction.value = top / order;
      if (k < theta) {
        plan.prediction.preconditions_met = false;
        plan.prediction.reason = "k is below the threshold " + std::to_string(theta);
      } else if (top % order != 0) {
        plan.prediction.reason = "k! S(n,k) is not divisible by |Aut|";
      }
      plan.brute = [&, k] { return brute.phi_exact(g, k); };
    } else if (id == "union-threshold") {
      need_graphs(inst, 1, SIZE_MAX);
      const auto parts = graph_list(inst);
      plan.prediction = theta_union(parts, b);
      plan.brute = [&, parts] { return brute.theta(disjoint_union(parts).graph); };
    } else if (id == "vsum-power") {
      need_graphs(inst, 1, 1);
      const GridGraph& gg = inst.graphs[0];
      const Vertex u = gg.root.value_or(inst.param("u").value_or(0));
      const int t = need(inst, "t");
      plan.prediction = d_vertex_sum_power(gg.graph, u, t, b);
      plan.brute = [&, u, t] { return brute.D(vertex_sum_power(gg.graph, u, t, b).graph); };
    } else if (id == "vsum-complete") {
      need_graphs(inst, 0, 0);
      const int n = need(inst, "n"), t = need(inst, "t");
      plan.prediction.value = d_vsum_complete_closed(n, t);
      plan.brute = [&, n, t] { return brute.D(vertex_sum_power(complete(n), 0, t, b).graph); };
    } else if (id == "vsum-cycle") {
      need_graphs(inst, 0, 0);
      const int n = need(inst, "n"), t = need(inst, "t");
      plan.prediction.value = d_vsum_cycles(n, t);
      plan.brute = [&, n, t] { return brute.D(vertex_sum_power(cycle(n), 0, t, b).graph); };
    } else if (id == "vsum-distinct") {
      need_graphs(inst, 2, SIZE_MAX);
      const auto factors = rooted_list(inst);
      plan.prediction = d_vsum_nonisomorphic(factors, b);
      plan.brute = [&, factors] { return brute.D(vertex_sum(factors, b).graph); };
    } else if (id == "vsum-threshold") {
      need_graphs(inst, 2, SIZE_MAX);
      const auto factors = rooted_list(inst);
      plan.prediction = theta_vsum_2connected(factors, b);
      plan.brute = [&, factors] { return brute.theta(vertex_sum(factors, b).graph); };
    } else if (id == "vsum-cycle-threshold") {
      need_graphs(inst, 0, 0);
      const int n = need(inst, "n"), t = need(inst, "t");
      plan.prediction.value = theta_vsum_cycles(n, t);
      plan.brute = [&, n, t] { return brute.theta(vertex_sum_power(cycle(n), 0, t, b).graph); };
    } else if (id.starts_with("rooted-")) {
      need_graphs(inst, 2, 2);
      const Graph& g = inst.graphs[0].graph;
      const RootedGraph h = inst.graphs[1].rooted();
      if (id == "rooted-aut") plan.prediction = rooted_aut_order(g, h, b);
      if (id == "rooted-d") plan.prediction = d_rooted(g, h, b);
      if (id == "rooted-threshold") plan.prediction = theta_rooted(g, h, b);
      plan.brute = [&, h, id] {
        const Graph prod = rooted_product_smooth(g, h, b).graph;
        if (id == "rooted-aut") return brute.aut_order(prod);
        return static_cast<Count>(id == "rooted-d" ? brute.D(prod) : brute.theta(prod));
      };
    } else if (id.starts_with("corona-")) {
      need_graphs(inst, 2, 2);
      const Graph& g = inst.graphs[0].graph;
      const Graph& h = inst.graphs[1].graph;
      if (id == "corona-aut") plan.prediction = corona_aut_order(g, h, b);
      if (id == "corona-d") plan.prediction = d_corona(g, h, b);
      if (id == "corona-threshold") plan.prediction = theta_corona(g, h, b);
      plan.brute = [&, id] {
        const Graph prod = corona(g, h, b).graph;
        if (id == "corona-aut") return brute.aut_order(prod);
        return static_cast<Count>(id == "corona-d" ? brute.D(prod) : brute.theta(prod));
      };
    } else if (id.starts_with("lex-")) {
      need_graphs(inst, 2, 2);
      const Graph& g = inst.graphs[0].graph;
      const Graph& h = inst.graphs[1].graph;
      plan.prediction = id == "lex-d" ? d_lexicographic(g, h, b) : theta_lexicographic(g, h, b);
      plan.brute = [&, id] {
        const Graph prod = lexicographic(g, h, b).graph;
        return static_cast<Count>(id == "lex-d" ? brute.D(prod) : brute.theta(prod));
      };
    } else {
      throw InvalidArgument("no evaluator for \"" + id + "\"");
    }
  } catch (const BudgetExceeded& e) {
    v.status = VerdictStatus::skipped;
    v.reason = std::string("prediction: ") + e.what();
    return v;
  } catch (const OverflowError& e) {
    v.status = VerdictStatus::skipped;
    v.reason = std::string("prediction: ") + e.what();
    return v;
  }

  v.predicted = plan.prediction.value;
  v.preconditions_met = plan.prediction.preconditions_met;
  v.reason = plan.prediction.reason;
  std::string brute_error;
  try {
    v.brute_force = plan.brute();
  } catch (const BudgetExceeded& e) {
    brute_error = e.what();
  } catch (const OverflowError& e) {
    brute_error = e.what();
  }

  if (!v.brute_force) {
    if (v.preconditions_met) {
      v.status = VerdictStatus::skipped;
      v.reason = "brute force: " + brute_error;
    } else {
      v.status = VerdictStatus::inconclusive;
      v.reason += "; brute force skipped: " + brute_error;
    }
    return v;
  }
  if (!v.preconditions_met) {
    v.status = VerdictStatus::inconclusive;
    if (id == "vsum-power") {
      v.reason += *v.brute_force <= *v.predicted ? "; upper bound holds" : "; upper bound violated";
    }
    return v;
  }
  v.status = v.agree() ? VerdictStatus::agree : VerdictStatus::disagree;
  return v;
}

std::vector<TheoremVerdict> Verifier::run(const std::string& id,
                                          const std::vector<GridInstance>& grid) {
  std::vector<TheoremVerdict> out;
  out.reserve(grid.size());
  for (const GridInstance& inst : grid) out.push_back(run(id, inst));
  return out;
}

std::vector<TheoremVerdict> Verifier::run_all() {
  std::vector<TheoremVerdict> out;
  for (const TheoremInfo& info : theorem_catalog()) {
    auto part = run(info.id, default_grid(info.id));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace symbreak
