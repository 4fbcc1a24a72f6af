#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/combinatorics.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

enum class VerdictStatus { agree, disagree, inconclusive, skipped };
std::string to_string(VerdictStatus status);

struct TheoremVerdict {
  std::string theorem_id;
  std::string instance;
  std::optional<Count> predicted;
  std::optional<Count> brute_force;
  bool preconditions_met = false;
  VerdictStatus status = VerdictStatus::skipped;
  std::string reason;

  bool agree() const { return predicted && brute_force && *predicted == *brute_force; }
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  // What a grid instance must supply, e.g. "G[@u], t".
  std::string grid_shape;
};

// Every checkable statement, in a fixed order.
const std::vector<TheoremInfo>& theorem_catalog();
// Throws InvalidArgument for an unknown id.
const TheoremInfo& theorem_info(const std::string& id);

struct GridGraph {
  std::string name;
  Graph graph;
  std::optional<Vertex> root;

  RootedGraph rooted() const { return RootedGraph(graph, root.value_or(0)); }
};

struct GridInstance {
  std::vector<GridGraph> graphs;
  std::vector<std::pair<std::string, int>> params;

  std::optional<int> param(const std::string& key) const;
  std::string describe() const;
};

// Instances are separated by ';', fields by ','. A field is either
// key=a..b / key=a (ranges expand to every combination) or a builtin graph
// name with an optional @root suffix, e.g. "K3,t=2..5;C5,t=2..3".
std::vector<GridInstance> parse_grid(const std::string& text, const Budget& budget = {});

// All connected graphs on at most six vertices, in a fixed order.
const std::vector<Graph>& connected_fixtures();

// Grid used by "verify all" for one statement.
std::vector<GridInstance> default_grid(const std::string& id);

// Runs instances against brute force. Facts about constructed graphs are
// cached across calls, so one verifier should serve a whole batch.
class Verifier {
 public:
  explicit Verifier(Budget budget = {});
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  TheoremVerdict run(const std::string& id, const GridInstance& instance);
  std::vector<TheoremVerdict> run(const std::string& id, const std::vector<GridInstance>& grid);
  std::vector<TheoremVerdict> run_all();

  struct Cache;

 private:
  Budget budget_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace symbreak
