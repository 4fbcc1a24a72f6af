#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/error.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

class Graph6Error : public InvalidArgument {
 public:
  enum class Kind { empty, bad_byte, wrong_length, nonzero_padding };

  Graph6Error(Kind kind, const std::string& what) : InvalidArgument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class EdgeListError : public InvalidArgument {
 public:
  EdgeListError(int line, const std::string& what)
      : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One graph6 record (an optional ">>graph6<<" header and trailing line break
// are accepted).
Graph parse_graph6(std::string_view line, const Budget& budget = {});
std::string emit_graph6(const Graph& g);

// "n m" followed by m lines "u v", 0-indexed. Blank lines and lines starting
// with '#' are skipped.
Graph parse_edgelist(std::string_view text, const Budget& budget = {});
// Several edge-list blocks back to back.
std::vector<Graph> parse_edgelists(std::string_view text, const Budget& budget = {});
std::string emit_edgelist(const Graph& g);

enum class GraphSource { graph6, edgelist, builtin };
std::string to_string(GraphSource source);

struct GraphDocument {
  std::string name;
  Graph graph;
  GraphSource source = GraphSource::builtin;
};

// Builtin names: Pn, Cn, Kn, En (edgeless), Sn (star with n leaves),
// Km_n (complete bipartite), KGn_k (Kneser), petersen, paw, diamond (K4-e),
// and g6:<code>. Throws InvalidArgument for anything else.
Graph builtin_graph(std::string_view name, const Budget& budget = {});

// "builtin:<name>", or a path to a file of graph6 lines (.g6) or edge-list
// blocks (any other extension).
std::vector<GraphDocument> load_graphs(const std::string& spec, const Budget& budget = {});

}  // namespace symbreak
