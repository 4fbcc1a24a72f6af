#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace symbreak {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitBudget = 3 };

// Runs one command line (without the program name). Data goes to out,
// diagnostics to err.
//
//   analyze <file|builtin> [--phi-max K] [--steady]
//   product <kind> <graph>... [--emit g6|edgelist|json]
//   verify <theorem|all> [--grid spec]
//   table <family> <range> [--phi-max K]
//   convert <in> <out>
//
// Global: --format json|csv, --max-aut N, --max-colorings N, --max-vertices N.
// SYMBREAK_MAX_AUT, SYMBREAK_MAX_COLORINGS and SYMBREAK_MAX_VERTICES set the
// budgets when the flags are absent.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Catalog id for a numbered alias such as "thm3.7"; anything else is
// returned unchanged.
std::string resolve_theorem_id(std::string_view name);

struct TheoremAlias {
  std::string_view alias;
  std::string_view id;
};
const std::vector<TheoremAlias>& theorem_aliases();

}  // namespace symbreak
