#include "symbreak/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace symbreak {

namespace {

constexpr int kBias = 63;
constexpr int kLargeMarker = 126;

using G6Kind = Graph6Error::Kind;

int g6_value(std::string_view s, std::size_t pos) {
  const auto b = static_cast<unsigned char>(s[pos]);
  if (b < kBias || b > kLargeMarker) {
    throw Graph6Error(G6Kind::bad_byte, "graph6: byte " + std::to_string(b) + " at offset " +
                                            std::to_string(pos) + " outside 63..126");
  }
  return b - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line, const Budget& budget) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error(G6Kind::empty, "graph6: empty record");
  for (std::size_t i = 0; i < line.size(); ++i) g6_value(line, i);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  const auto read_bytes = [&](int count) {
    if (pos + count > line.size()) {
      throw Graph6Error(G6Kind::wrong_length, "graph6: truncated size prefix");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(g6_value(line, pos++));
    return v;
  };
  if (g6_value(line, 0) < kLargeMarker - kBias) {
    n = read_bytes(1);
  } else if (line.size() > 1 && g6_value(line, 1) < kLargeMarker - kBias) {
    pos = 1;
    n = read_bytes(3);
  } else {
    pos = 2;
    n = read_bytes(6);
  }
  if (n > static_cast<std::uint64_t>(budget.max_vertices)) {
    throw InvalidArgument("graph6: " + std::to_string(n) + " vertices exceed the cap of " +
                          std::to_string(budget.max_vertices));
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t data_bytes = (bits + 5) / 6;
  if (line.size() - pos != data_bytes) {
    throw Graph6Error(G6Kind::wrong_length,
                      "graph6: expected " + std::to_string(data_bytes) + " data bytes for n=" +
                          std::to_string(n) + ", found " + std::to_string(line.size() - pos));
  }
  std::vector<int> values(data_bytes);
  for (std::uint64_t i = 0; i < data_bytes; ++i) values[i] = g6_value(line, pos + i);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  const int order = static_cast<int>(n);
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((values[k / 6] >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < data_bytes * 6; ++k) {
    if ((values[k / 6] >> (5 - k % 6)) & 1) {
      throw Graph6Error(G6Kind::nonzero_padding, "graph6: padding bits are not zero");
    }
  }
  return build_graph(order, edges, budget);
}

std::string emit_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  const auto put = [&](std::uint64_t v, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((v >> (6 * i)) & 63) + kBias));
  };
  if (n < 63) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kLargeMarker));
    put(n, 3);
  } else {
    out.push_back(static_cast<char>(kLargeMarker));
    out.push_back(static_cast<char>(kLargeMarker));
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int number = 0;

  // Next line that is neither blank nor a comment.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.remove_suffix(1);
      }
      while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
      if (!line.empty() && line.front() != '#') return true;
    }
    return false;
  }
};

// Exactly two non-negative integers separated by whitespace.
bool two_ints(std::string_view line, long long& a, long long& b) {
  std::istringstream in{std::string(line)};
  std::string rest;
  if (!(in >> a >> b)) return false;
  if (in >> rest) return false;
  return a >= 0 && b >= 0;
}

Graph read_block(LineReader& reader, std::string_view header, const Budget& budget) {
  long long n = 0, m = 0;
  const int header_line = reader.number;
  if (!two_ints(header, n, m)) throw EdgeListError(header_line, "expected header \"n m\"");
  if (n > budget.max_vertices) {
    throw EdgeListError(header_line, std::to_string(n) + " vertices exceed the cap");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    std::string_view line;
    if (!reader.next(line)) {
      throw EdgeListError(reader.number, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(i));
    }
    long long u = 0, v = 0;
    if (!two_ints(line, u, v)) throw EdgeListError(reader.number, "expected edge \"u v\"");
    if (u >= n || v >= n) throw EdgeListError(reader.number, "endpoint out of range");
    if (u == v) throw EdgeListError(reader.number, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<int>(n), edges, budget);
}

}  // namespace

Graph parse_edgelist(std::string_view text, const Budget& budget) {
  LineReader reader{text};
  std::string_view header;
  if (!reader.next(header)) throw EdgeListError(1, "empty edge list");
  Graph g = read_block(reader, header, budget);
  std::string_view extra;
  if (reader.next(extra)) throw EdgeListError(reader.number, "unexpected trailing content");
  return g;
}

std::vector<Graph> parse_edgelists(std::string_view text, const Budget& budget) {
  LineReader reader{text};
  std::vector<Graph> out;
  std::string_view header;
  while (reader.next(header)) out.push_back(read_block(reader, header, budget));
  return out;
}

std::string emit_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_string(GraphSource source) {
  switch (source) {
    case GraphSource::graph6: return "graph6";
    case GraphSource::edgelist: return "edgelist";
    case GraphSource::builtin: return "builtin";
  }
  return "unknown";
}

namespace {

int to_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("unknown builtin graph \"" + std::string(whole) + "\"");
  }
  return v;
}

std::pair<int, int> two_params(std::string_view s, std::string_view whole) {
  const auto sep = s.find('_');
  if (sep == std::string_view::npos) {
    throw InvalidArgument("builtin \"" + std::string(whole) + "\" needs two parameters a_b");
  }
  return {to_int(s.substr(0, sep), whole), to_int(s.substr(sep + 1), whole)};
}

}  // namespace

Graph builtin_graph(std::string_view name, const Budget& budget) {
  const std::string_view whole = name;
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  if (name.starts_with("g6:")) return parse_graph6(name.substr(3), budget);
  if (name == "petersen") return kneser(5, 2);
  if (name == "paw") {
    const Edge e[] = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
    return Graph(4, e);
  }
  if (name == "diamond") {
    const Edge e[] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    return Graph(4, e);
  }
  if (name.empty()) throw InvalidArgument("empty builtin graph name");
  std::vector<int> params;
  Family kind{};
  if (name.starts_with("KG")) {
    const auto [a, b] = two_params(name.substr(2), whole);
    kind = Family::kneser;
    params = {a, b};
  } else if (name.front() == 'K' && name.find('_') != std::string_view::npos) {
    const auto [a, b] = two_params(name.substr(1), whole);
    kind = Family::complete_bipartite;
    params = {a, b};
  } else {
    const int v = to_int(name.substr(1), whole);
    switch (name.front()) {
      case 'P': kind = Family::path; break;
      case 'C': kind = Family::cycle; break;
      case 'K': kind = Family::complete; break;
      case 'E': kind = Family::empty; break;
      case 'S': kind = Family::star; break;
      default: throw InvalidArgument("unknown builtin graph \"" + std::string(whole) + "\"");
    }
    params = {v};
  }
  return family(kind, params, budget);
}

std::vector<GraphDocument> load_graphs(const std::string& spec, const Budget& budget) {
  if (spec.starts_with("builtin:")) {
    return {GraphDocument{spec.substr(8), builtin_graph(spec, budget), GraphSource::builtin}};
  }
  std::ifstream in(spec, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open \"" + spec + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string stem = std::filesystem::path(spec).stem().string();
  std::vector<GraphDocument> out;
  if (std::filesystem::path(spec).extension() == ".g6") {
    std::istringstream lines(text);
    std::string line;
    int index = 1;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back({stem + "#" + std::to_string(index++), parse_graph6(line, budget),
                       GraphSource::graph6});
      } catch (const Graph6Error& e) {
        throw Graph6Error(e.kind(), spec + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  } else {
    int index = 1;
    for (Graph& g : parse_edgelists(text, budget)) {
      out.push_back({stem + "#" + std::to_string(index++), std::move(g), GraphSource::edgelist});
    }
  }
  if (out.empty()) throw InvalidArgument("\"" + spec + "\" holds no graphs");
  return out;
}

}  // namespace symbreak
