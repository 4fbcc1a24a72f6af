// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or fails only in a way listed
// in KNOWN DEVIATIONS below, where the failing check is re-derived and must
// match exactly. Any other failure exits 1.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symbreak/automorphism.hpp"
#include "symbreak/combinatorics.hpp"
#include "symbreak/error.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/io.hpp"
#include "symbreak/products.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  // Set when every failure is the documented one.
  bool known_deviation = false;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
  bool pass() const { return failures.empty(); }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string eq(const std::string& what, long long got, long long want) {
  return what + ": got " + str(got) + ", expected " + str(want);
}

std::vector<Graph> fixtures_from_disk(const std::string& file) {
  std::vector<Graph> out;
  for (const GraphDocument& d : load_graphs(std::string(SYMBREAK_DATA_DIR) + "/" + file)) {
    out.push_back(d.graph);
  }
  return out;
}

std::map<VerdictStatus, int> tally(const std::vector<TheoremVerdict>& vs) {
  std::map<VerdictStatus, int> t;
  for (const auto& v : vs) ++t[v.status];
  return t;
}

std::string tally_text(const std::string& id, const std::vector<TheoremVerdict>& vs) {
  std::string s = id + ":";
  for (const auto& [status, n] : tally(vs)) s += " " + to_string(status) + "=" + str(n);
  return s;
}

// Every verdict agrees, or is inconclusive for the stated reason.
void expect_all_agree(Outcome& o, const std::string& id, const std::vector<TheoremVerdict>& vs,
                      bool allow_inconclusive = false) {
  o.note(tally_text(id, vs));
  for (const auto& v : vs) {
    if (v.status == VerdictStatus::agree) continue;
    if (allow_inconclusive && v.status == VerdictStatus::inconclusive) continue;
    o.expect(false, id + " " + v.instance + " is " + to_string(v.status) +
                        (v.predicted ? " predicted " + str(*v.predicted) : "") +
                        (v.brute_force ? " brute force " + str(*v.brute_force) : "") +
                        (v.reason.empty() ? "" : " (" + v.reason + ")"));
  }
}

int oracle_theta(const Graph& g) { return oracle::threshold_by_cycles(oracle::automorphisms(g)); }

// ---------------------------------------------------------------------------

Outcome baseline_indices() {
  Outcome o;
  const auto timed = [&](const std::string& what, const Graph& g, bool theta, int want) {
    const auto t0 = Clock::now();
    const int got = theta ? distinguishing_threshold(g) : distinguishing_number(g);
    const double s = seconds_since(t0);
    o.expect(got == want, eq(what, got, want));
    o.expect(s < 1.0, what + " took " + str(s) + " s");
  };
  for (int n = 2; n <= 8; ++n) timed("D(P" + str(n) + ")", path(n), false, 2);
  for (int n = 3; n <= 9; ++n) timed("D(C" + str(n) + ")", cycle(n), false, n <= 5 ? 3 : 2);
  for (int n = 1; n <= 6; ++n) timed("D(K" + str(n) + ")", complete(n), false, n);
  for (int n = 1; n <= 3; ++n) timed("D(K" + str(n) + "," + str(n) + ")", complete_bipartite(n, n), false, n + 1);
  for (int n = 2; n <= 10; ++n) timed("theta(P" + str(n) + ")", path(n), true, (n + 1) / 2 + 1);
  timed("theta(P1)", path(1), true, oracle_theta(path(1)));
  for (int n = 3; n <= 10; ++n) timed("theta(C" + str(n) + ")", cycle(n), true, n / 2 + 2);
  for (int n = 1; n <= 6; ++n) timed("theta(K" + str(n) + ")", complete(n), true, n);
  timed("theta(K(5,2))", kneser(5, 2), true, 8);
  return o;
}

Outcome path_closed_form() {
  Outcome o;
  const auto t0 = Clock::now();
  int rows = 0;
  for (int n = 2; n <= 8; ++n) {
    const PhiTable t = phi_table(path(n), 4);
    for (int k = 1; k <= 4; ++k, ++rows) {
      o.expect(t.at(k).Phi == phi_path_closed(n, k),
               eq("Phi_" + str(k) + "(P" + str(n) + ")", t.at(k).Phi, phi_path_closed(n, k)));
    }
  }
  const double s = seconds_since(t0);
  o.expect(s < 30.0, "took " + str(s) + " s");
  o.note(str(rows) + " (n, k) pairs in " + str(s) + " s");
  return o;
}

Outcome exact_counts() {
  Outcome o;
  const auto graphs = fixtures_from_disk("connected_le6.g6");
  int checks = 0;
  for (const Graph& g : graphs) {
    const int n = g.order();
    const int theta = distinguishing_threshold(g);
    const PhiTable t = phi_table(g, theta + 2);
    const Count aut = static_cast<Count>(t.group_order);
    for (int k = theta; k <= theta + 2; ++k, ++checks) {
      const Count want = factorial(k) * oracle::stirling2(n, k) / aut;
      o.expect(t.at(k).phi == want, eq("phi_" + str(k) + "(" + emit_graph6(g) + ")", t.at(k).phi, want));
    }
    for (int k = 1; k <= theta + 2; ++k, ++checks) {
      Count sum = 0;
      for (int i = 1; i <= k; ++i) sum += oracle::binomial(k, i) * t.at(i).phi;
      o.expect(t.at(k).Phi == sum, eq("Phi_" + str(k) + "(" + emit_graph6(g) + ")", t.at(k).Phi, sum));
    }
  }
  o.note(str(graphs.size()) + " graphs read from graph6, " + str(checks) + " identities");
  return o;
}

Outcome freeness() {
  Outcome o;
  long long colourings = 0;
  for (const Graph& g : fixtures_from_disk("connected_le6.g6")) {
    const auto group = oracle::automorphisms(g);
    for (int k = 1; k <= 3; ++k) {
      oracle::for_each_coloring(g.order(), k, [&](const std::vector<int>& c) {
        if (!oracle::distinguishing(group, c)) return;
        ++colourings;
        std::set<std::vector<int>> orbit;
        for (const auto& p : group) orbit.insert(oracle::apply(p, c));
        if (orbit.size() != group.size()) o.expect(false, "short orbit in " + emit_graph6(g));
      });
    }
  }
  o.note(str(colourings) + " distinguishing colourings checked");
  return o;
}

template <class F>
void for_each_partition(int n, F&& f) {
  std::vector<int> s(n, 0);
  while (true) {
    f(s);
    int i = n - 1;
    while (i > 0) {
      const int prefix_max = *std::max_element(s.begin(), s.begin() + i);
      if (s[i] <= prefix_max) break;
      s[i] = 0;
      --i;
    }
    if (i <= 0) return;
    ++s[i];
  }
}

Outcome steady_vertices_check() {
  Outcome o;
  const auto graphs = fixtures_from_disk("connected_le6.g6");
  const auto seven = fixtures_from_disk("connected_7.g6");
  int pairs = 0;
  for (const std::vector<Graph>* set : {&graphs, &seven}) {
    for (const Graph& g : *set) {
      if (g.order() < 2) continue;
      const auto group = oracle::automorphisms(g);
      for (Vertex u = 0; u < g.order(); ++u, ++pairs) {
        std::size_t stab = 0;
        for (const auto& p : group) stab += p[u] == u;
        const bool by_order = stab == oracle::automorphisms(delete_vertex(g, u)).size();
        if (is_steady(g, u) != by_order) {
          o.expect(false, "is_steady(" + emit_graph6(g) + ", " + str(u) + ")");
        }
      }
    }
  }
  o.note(str(pairs) + " (graph, vertex) pairs against |Stab(u)| = |Aut(G-u)|");

  int restriction = 0;
  for (const Graph& g : graphs) {
    if (g.order() < 2) continue;
    const auto group = oracle::automorphisms(g);
    for (Vertex u = 0; u < g.order(); ++u, ++restriction) {
      const auto rest_group = oracle::automorphisms(delete_vertex(g, u));
      bool survives = true;
      for_each_partition(g.order(), [&](const std::vector<int>& c) {
        if (!survives || !oracle::distinguishing(group, c)) return;
        std::vector<int> induced;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (v != u) induced.push_back(c[v]);
        }
        survives = oracle::distinguishing(rest_group, induced);
      });
      if (is_steady(g, u) != survives) {
        o.expect(false, "restriction property at " + emit_graph6(g) + ", " + str(u));
      }
    }
  }
  o.note(str(restriction) + " pairs checked for the restriction property in both directions");
  return o;
}

Outcome vertex_sum_distinguishing() {
  Outcome o;
  Verifier v;
  const auto grid = v.run("vsum-power", parse_grid("K3@0,t=2..5;K4@0,t=2..4;C5@0,t=2..3"));
  expect_all_agree(o, "vsum-power", grid);

  const Graph diamond = builtin_graph("diamond");
  Vertex deg2 = 0;
  while (diamond.degree(deg2) != 2) ++deg2;
  const int d_diamond = oracle::distinguishing_number(vertex_sum_power(diamond, deg2, 2).graph);
  o.expect(d_diamond == 2, eq("D((K4-e)^2)", d_diamond, 2));
  const Count bound = d_vertex_sum_power(diamond, deg2, 2).value;
  o.expect(bound == 3, eq("bound for (K4-e)^2", bound, 3));

  const int d_p4 = oracle::distinguishing_number(vertex_sum_power(path(4), 0, 2).graph);
  o.expect(d_p4 == 2, eq("D((P4)^2 at an end)", d_p4, 2));
  o.expect(d_vertex_sum_power(path(4), 0, 2).value == 2, "min-form for (P4)^2 at an end");

  const RootedGraph fig1[] = {RootedGraph(complete(3), 0), RootedGraph(diamond, deg2)};
  const int d1 = oracle::distinguishing_number(vertex_sum(fig1).graph);
  o.expect(d1 == 2, eq("D(first two-factor sum)", d1, 2));
  const RootedGraph fig2[] = {RootedGraph(star(3), 0), RootedGraph(path(3), 1)};
  const int d2 = oracle::distinguishing_number(vertex_sum(fig2).graph);
  o.expect(d2 == 5, eq("D(second two-factor sum)", d2, 5));

  std::string table = "K3 radical vs min-form:";
  for (const RadicalRow& r : radical_form_table(2, 4)) {
    if (r.family != "K3") continue;
    table += " t=" + str(r.t) + " " + str(r.radical) + "/" + str(r.min_form) +
             (r.agree() ? "" : " (differs)");
    if ((r.t == 2 || r.t == 4) && r.agree()) o.expect(false, "K3 radical agrees at t=" + str(r.t));
  }
  o.note(table);

  // KNOWN DEVIATION: the quoted bound for (K4-e)^2 is 3, but G-u is a
  // triangle, Phi_k(K3) = C(k,3) and C(3,3) = 1 < 2, so the min-form is 4.
  if (o.failures.size() == 1 && bound == 4 && binomial(3, 3) < 2 && binomial(4, 3) >= 2 &&
      is_isomorphic(delete_vertex(diamond, deg2), complete(3))) {
    o.known_deviation = true;
    o.note("documented: min{k : C(k,3) >= 2} = 4, the quoted value 3 is an arithmetic slip");
  }
  return o;
}

Outcome vertex_sum_thresholds() {
  Outcome o;
  const RootedGraph f2[] = {RootedGraph(complete(3), 0), RootedGraph(complete(3), 0)};
  const Count f2_formula = theta_vsum_2connected(f2).value;
  const int f2_brute = oracle_theta(vertex_sum(f2).graph);
  o.expect(f2_formula == 5, eq("theta(F2) formula", f2_formula, 5));
  o.expect(f2_brute == 5, eq("theta(F2) brute force", f2_brute, 5));

  const Graph c4c4 = vertex_sum_power(cycle(4), 0, 2).graph;
  const RootedGraph cc[] = {RootedGraph(cycle(4), 0), RootedGraph(cycle(4), 0)};
  o.expect(theta_vsum_cycles(4, 2) == 7, eq("cycle formula", theta_vsum_cycles(4, 2), 7));
  o.expect(theta_vsum_2connected(cc).value == 7, "theta(G')+1 for two C4");
  o.expect(oracle_theta(c4c4) == 7, eq("theta(two C4) brute force", oracle_theta(c4c4), 7));

  Verifier v;
  const auto unions = v.run("union-threshold", default_grid("union-threshold"));
  expect_all_agree(o, "union-threshold", unions);
  std::set<char> cases;
  for (const GridInstance& inst : default_grid("union-threshold")) {
    bool sym = false, asym = false;
    for (const GridGraph& g : inst.graphs) {
      (oracle::automorphisms(g.graph).size() == 1 ? asym : sym) = true;
    }
    cases.insert(sym && asym ? 'c' : sym ? 'a' : 'b');
  }
  o.expect(unions.size() >= 10, "fewer than 10 unions");
  o.expect(cases.size() == 3, "not every union case covered");
  o.note(str(unions.size()) + " unions over cases a, b, c");
  return o;
}

Outcome rooted_products() {
  Outcome o;
  Verifier v;
  expect_all_agree(o, "rooted-aut", v.run("rooted-aut", default_grid("rooted-aut")));
  expect_all_agree(o, "rooted-d", v.run("rooted-d", default_grid("rooted-d")));
  const auto thresholds = v.run("rooted-threshold", default_grid("rooted-threshold"));
  const std::size_t before = o.failures.size();
  expect_all_agree(o, "rooted-threshold", thresholds);
  const std::size_t threshold_failures = o.failures.size() - before;

  const Count p6 = d_rooted(complete(2), RootedGraph(path(3), 0)).value;
  o.expect(p6 == oracle::distinguishing_number(path(6)), "K2 with P3 at an end against D(P6)");
  const Count p4 = theta_rooted(path(2), RootedGraph(path(2), 0)).value;
  o.expect(p4 == oracle_theta(path(4)), "P2 with P2 at an end against theta(P4)");
  const Graph asym_tree = builtin_graph("g6:Fp_GG");
  const Edge e6[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}};
  const Count both = theta_rooted(Graph(6, e6), RootedGraph(asym_tree, 0)).value;
  o.expect(both == 1, eq("both factors asymmetric", both, 1));

  // KNOWN DEVIATION: when Aut(H,v) is trivial but Aut(G) is not, the stated
  // (|G|-1)|H| + 1 overshoots; brute force gives |H|(theta(G)-1) + 1.
  if (threshold_failures > 0 && threshold_failures == o.failures.size()) {
    bool all_match = true;
    int disagreements = 0;
    const auto grid = default_grid("rooted-threshold");
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      const TheoremVerdict& t = thresholds[i];
      if (t.status == VerdictStatus::agree) continue;
      ++disagreements;
      const Graph& g = grid[i].graphs[0].graph;
      const RootedGraph h = grid[i].graphs[1].rooted();
      const std::uint64_t stab = stabilizer(enumerate_automorphisms(h.graph), h.root).order();
      const Count expected = Count(h.graph.order()) * (distinguishing_threshold(g) - 1) + 1;
      all_match = all_match && t.status == VerdictStatus::disagree && stab == 1 &&
                  enumerate_automorphisms(g).order() > 1 && t.brute_force == expected;
    }
    if (all_match) {
      o.known_deviation = true;
      o.note("documented: " + str(disagreements) +
             " threshold disagreements, each with Aut(H,v) trivial, G symmetric and "
             "brute force = |H|(theta(G)-1)+1");
    }
  }
  return o;
}

Outcome corona_products() {
  Outcome o;
  Verifier v;
  for (const char* id : {"corona-aut", "corona-d", "corona-threshold"}) {
    expect_all_agree(o, id, v.run(id, default_grid(id)));
  }
  o.expect(is_isomorphic(corona(Graph(1), complete(2)).graph, complete(3)), "K1 o K2 = K3");
  o.expect(is_isomorphic(corona(path(2), Graph(1)).graph, path(4)), "P2 o K1 = P4");
  return o;
}

Outcome lexicographic_products() {
  Outcome o;
  o.expect(lexicographic(path(2), complete(2)).graph == complete(4), "P2[K2] is K4");
  o.expect(!all_automorphisms_natural(path(2), complete(2)), "P2[K2] reported natural");
  Verifier v;
  for (const char* id : {"lex-d", "lex-threshold"}) {
    const auto grid = default_grid(id);
    const auto verdicts = v.run(id, grid);
    expect_all_agree(o, id, verdicts, true);
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].status != VerdictStatus::inconclusive) continue;
      const bool natural = all_automorphisms_natural(grid[i].graphs[0].graph, grid[i].graphs[1].graph);
      o.expect(!natural, std::string(id) + " " + verdicts[i].instance + " inconclusive but natural");
    }
  }
  int identity = 0;
  for (const Graph& g : connected_fixtures()) {
    if (g.order() > 6) continue;
    const int theta = oracle_theta(g);
    o.expect(theta_lexicographic(g, Graph(1)).value == theta, "G o K1 for " + emit_graph6(g));
    o.expect(theta_lexicographic(Graph(1), g).value == theta, "K1 o H for " + emit_graph6(g));
    o.expect(d_lexicographic(Graph(1), g).value == oracle::distinguishing_number(g),
             "D(K1 o H) for " + emit_graph6(g));
    identity += 3;
  }
  o.note(str(identity) + " identity-factor checks");
  return o;
}

Outcome graph6_robustness() {
  Outcome o;
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> order(0, 12);
  std::bernoulli_distribution coin(0.5);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = order(rng);
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) e.emplace_back(a, b);
      }
    }
    const Graph g(n, e);
    if (parse_graph6(emit_graph6(g)) != g) ++failures;
  }
  o.expect(failures == 0, str(failures) + " round-trip failures");

  using K = Graph6Error::Kind;
  const std::vector<std::pair<std::string, K>> corpus = {
      {"D?{ ", K::bad_byte},        {std::string("C\0\0", 3), K::bad_byte},
      {"A\x7f", K::bad_byte},       {"D?", K::wrong_length},
      {"D", K::wrong_length},       {"~?", K::wrong_length},
      {"~??", K::wrong_length},     {"A`", K::nonzero_padding},
      {"B~", K::nonzero_padding},   {"", K::empty},
  };
  for (const auto& [text, kind] : corpus) {
    try {
      parse_graph6(text);
      o.expect(false, "accepted malformed input of length " + str(text.size()));
    } catch (const Graph6Error& e) {
      o.expect(e.kind() == kind, "wrong error kind for input of length " + str(text.size()));
    } catch (...) {
      o.expect(false, "unstructured error");
    }
  }
  int structured = 0;
  std::uniform_int_distribution<int> len(0, 16), byte(0, 255);
  for (int i = 0; i < 20000; ++i) {
    std::string s(len(rng), '\0');
    for (char& c : s) c = static_cast<char>(byte(rng));
    try {
      parse_graph6(s);
    } catch (const InvalidArgument&) {
      ++structured;
    } catch (...) {
      o.expect(false, "unstructured error on fuzz input");
    }
  }
  o.note("10000 round-trips, " + str(corpus.size()) + " malformed cases, " + str(structured) +
         " of 20000 fuzz inputs rejected with structured errors");
  return o;
}

Outcome performance() {
  Outcome o;
  const auto t0 = Clock::now();
  Verifier v;
  const auto all = v.run_all();
  const double s = seconds_since(t0);
  o.expect(s < 300.0, "verify all took " + str(s) + " s");
  const auto t = tally(all);
  const int skipped = t.count(VerdictStatus::skipped) ? t.at(VerdictStatus::skipped) : 0;
  o.expect(skipped == 0, str(skipped) + " instances exceeded a budget");
  o.note(str(all.size()) + " verdicts in " + str(s) + " s");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "baseline indices", baseline_indices},
      {2, "path Phi closed form", path_closed_form},
      {3, "exact-k counts and binomial sum on the graph6 fixtures", exact_counts},
      {4, "distinguishing colourings are free", freeness},
      {5, "steady vertices", steady_vertices_check},
      {6, "vertex-sum distinguishing numbers", vertex_sum_distinguishing},
      {7, "vertex-sum and union thresholds", vertex_sum_thresholds},
      {8, "rooted products", rooted_products},
      {9, "corona products", corona_products},
      {10, "lexicographic products", lexicographic_products},
      {11, "graph6 round-trip and malformed input", graph6_robustness},
      {12, "full default grid within budget and time", performance},
  };
  int passed = 0, documented = 0, unexpected = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass() ? "PASS" : "FAIL") << " " << c.number << " " << c.title << "\n";
    for (const std::string& n : o.notes) std::cout << "     " << n << "\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) {
      std::cout << "     x " << o.failures[i] << "\n";
    }
    if (o.failures.size() > 10) std::cout << "     x ... " << o.failures.size() - 10 << " more\n";
    if (o.pass()) ++passed;
    else if (o.known_deviation) ++documented;
    else ++unexpected;
  }
  std::cout << passed << " passed, " << documented + unexpected << " failed (" << documented
            << " documented deviations, " << unexpected << " unexpected)\n";
  return unexpected == 0 ? 0 : 1;
}
