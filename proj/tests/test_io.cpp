#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "symbreak/error.hpp"
#include "symbreak/io.hpp"

using namespace symbreak;

namespace {

Graph random_graph(std::mt19937& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph6Error::Kind graph6_kind(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Graph6Error& e) {
    return e.kind();
  }
  FAIL("parsed without error: " << std::string(text));
  return Graph6Error::Kind::empty;
}

std::filesystem::path scratch_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "symbreak_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("graph6 worked examples") {
  // '?' '{' -> 000000 111100: the first ten bits set x(0,4), x(1,4), x(2,4), x(3,4).
  const Edge d_edges[] = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(parse_graph6("D?{") == Graph(5, d_edges));
  CHECK(emit_graph6(Graph(5, d_edges)) == "D?{");
  // Bits 0011110000 read the other way round: x(1,2), x(0,3), x(1,3), x(2,3).
  const Edge n_edges[] = {{1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(emit_graph6(Graph(5, n_edges)) == "DN?");
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("?") == Graph(0));
  CHECK(parse_graph6(">>graph6<<A_\n") == complete(2));
  CHECK(parse_graph6("A_\r\n") == complete(2));
}

TEST_CASE("graph6 round-trips builtin families") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& g : {path(n), complete(n), empty_graph(n), star(n - 1 < 1 ? 1 : n - 1)}) {
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    if (n >= 3) CHECK(parse_graph6(emit_graph6(cycle(n))) == cycle(n));
  }
  CHECK(parse_graph6(emit_graph6(kneser(5, 2))) == kneser(5, 2));
}

TEST_CASE("graph6 round-trips random graphs") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> order(0, 12);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const Graph g = random_graph(rng, order(rng));
    if (parse_graph6(emit_graph6(g)) != g) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("graph6 extended size prefix") {
  std::mt19937 rng(7);
  for (int n : {62, 63, 64}) {
    const Graph g = random_graph(rng, n);
    const std::string code = emit_graph6(g);
    CHECK((code[0] == '~') == (n >= 63));
    CHECK(parse_graph6(code) == g);
  }
  Budget small;
  small.max_vertices = 10;
  CHECK_THROWS_AS(parse_graph6(emit_graph6(path(11)), small), InvalidArgument);
}

TEST_CASE("malformed graph6 yields structured errors") {
  using K = Graph6Error::Kind;
  CHECK(graph6_kind("") == K::empty);
  CHECK(graph6_kind("\n") == K::empty);
  CHECK(graph6_kind("D?{ ") == K::bad_byte);
  CHECK(graph6_kind("A\x7f") == K::bad_byte);
  CHECK(graph6_kind("D?") == K::wrong_length);
  CHECK(graph6_kind("D?{?") == K::wrong_length);
  CHECK(graph6_kind("~?") == K::wrong_length);
  CHECK(graph6_kind("A`") == K::nonzero_padding);
  CHECK(graph6_kind("B~") == K::nonzero_padding);
}

TEST_CASE("arbitrary bytes never escape as anything but structured errors") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 12), byte(0, 255);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string s(len(rng), '\0');
    for (char& c : s) c = static_cast<char>(byte(rng));
    if (i % 2 == 0 && !s.empty()) s[0] = static_cast<char>(63 + i % 14);
    try {
      parse_graph6(s);
      ++parsed;
    } catch (const Graph6Error&) {
      ++rejected;
    } catch (const InvalidArgument&) {
      ++rejected;  // vertex cap
    }
  }
  CHECK(parsed + rejected == 20000);
  CHECK(rejected > 0);
}

TEST_CASE("edge-list parsing") {
  CHECK(parse_edgelist("3 2\n0 1\n1 2") == path(3));
  CHECK(parse_edgelist("# comment\n\n3 2\n0 1\n\n1 2\n") == path(3));
  CHECK(parse_edgelist(emit_edgelist(kneser(5, 2))) == kneser(5, 2));
  CHECK(parse_edgelist("1 0\n") == Graph(1));

  const auto line_of = [](std::string_view text) {
    try {
      parse_edgelist(text);
    } catch (const EdgeListError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("3 2\n0 1\n") == 2);
  CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 1\n0 1 2\n") == 2);
  CHECK(line_of("3 1\n0 1\n0 2\n") == 3);
  CHECK(line_of("-1 0\n") == 1);
}

TEST_CASE("several edge-list blocks") {
  const auto graphs = parse_edgelists("2 1\n0 1\n# next\n3 3\n0 1\n1 2\n0 2\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == complete(2));
  CHECK(graphs[1] == complete(3));
}

TEST_CASE("builtin names") {
  CHECK(builtin_graph("P4") == path(4));
  CHECK(builtin_graph("C5") == cycle(5));
  CHECK(builtin_graph("K3") == complete(3));
  CHECK(builtin_graph("E2") == empty_graph(2));
  CHECK(builtin_graph("S3") == star(3));
  CHECK(builtin_graph("K2_3") == complete_bipartite(2, 3));
  CHECK(builtin_graph("KG5_2") == kneser(5, 2));
  CHECK(builtin_graph("petersen") == kneser(5, 2));
  CHECK(builtin_graph("builtin:K3") == complete(3));
  CHECK(builtin_graph("g6:A_") == complete(2));
  CHECK(builtin_graph("paw").edge_count() == 4);
  CHECK(builtin_graph("diamond").edge_count() == 5);
  CHECK_THROWS_AS(builtin_graph("Q3"), InvalidArgument);
  CHECK_THROWS_AS(builtin_graph("P"), InvalidArgument);
  CHECK_THROWS_AS(builtin_graph("g6:D?"), Graph6Error);
}

TEST_CASE("loading files") {
  const auto g6 = scratch_file("two.g6", ">>graph6<<A_\nD?{\n");
  auto docs = load_graphs(g6.string());
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].name == "two#1");
  CHECK(docs[0].source == GraphSource::graph6);
  CHECK(docs[1].graph.order() == 5);

  const auto el = scratch_file("p3.txt", "3 2\n0 1\n1 2\n");
  docs = load_graphs(el.string());
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].graph == path(3));
  CHECK(docs[0].source == GraphSource::edgelist);

  docs = load_graphs("builtin:petersen");
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].source == GraphSource::builtin);

  const auto bad = scratch_file("bad.g6", "A_\nA`\n");
  try {
    load_graphs(bad.string());
    FAIL("bad file accepted");
  } catch (const Graph6Error& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_graphs("/nonexistent/file.g6"), InvalidArgument);
}
