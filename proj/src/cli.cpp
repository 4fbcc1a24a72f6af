#include "symbreak/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "symbreak/error.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/io.hpp"
#include "symbreak/products.hpp"
#include "symbreak/report.hpp"
#include "symbreak/verify.hpp"

namespace symbreak {

namespace {

struct Options {
  std::string format = "json";
  std::optional<std::uint64_t> max_aut, max_colorings;
  std::optional<int> max_vertices;

  std::string input;
  int phi_max = 3;
  bool steady = false;

  std::string kind;
  std::vector<std::string> factors;
  std::string emit = "g6";

  std::string theorem;
  std::string grid;

  std::string family;
  std::string range;

  std::string out_path;
};

std::uint64_t env_number(const char* name) {
  const char* raw = std::getenv(name);
  std::uint64_t v = 0;
  const std::string_view s(raw);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v == 0) {
    throw InvalidArgument(std::string(name) + " must be a positive integer, got \"" + raw + "\"");
  }
  return v;
}

Budget resolve_budget(const Options& o) {
  Budget b;
  if (o.max_aut) b.max_automorphisms = *o.max_aut;
  else if (std::getenv("SYMBREAK_MAX_AUT")) b.max_automorphisms = env_number("SYMBREAK_MAX_AUT");
  if (o.max_colorings) b.max_colorings = *o.max_colorings;
  else if (std::getenv("SYMBREAK_MAX_COLORINGS"))
    b.max_colorings = env_number("SYMBREAK_MAX_COLORINGS");
  if (o.max_vertices) b.max_vertices = *o.max_vertices;
  else if (std::getenv("SYMBREAK_MAX_VERTICES"))
    b.max_vertices = static_cast<int>(std::min<std::uint64_t>(env_number("SYMBREAK_MAX_VERTICES"), 1 << 20));
  return b;
}

bool is_file(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

// A file path, "builtin:<name>" or a bare builtin name.
std::vector<GraphDocument> load_input(const std::string& spec, const Budget& budget) {
  if (spec.rfind("builtin:", 0) == 0 || is_file(spec)) return load_graphs(spec, budget);
  try {
    return {GraphDocument{spec, builtin_graph(spec, budget), GraphSource::builtin}};
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("\"" + spec + "\" is neither a file nor a builtin graph (" + e.what() + ")");
  }
}

struct Token {
  GraphDocument doc;
  std::optional<Vertex> root;
};

// name[@root], taking the first graph when the name is a file.
Token load_token(const std::string& token, const Budget& budget) {
  Token t;
  std::string name = token;
  const auto at = token.rfind('@');
  if (at != std::string::npos && at > 0 && at + 1 < token.size() &&
      std::all_of(token.begin() + at + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    name = token.substr(0, at);
    Vertex r = 0;
    const auto [end, ec] = std::from_chars(token.data() + at + 1, token.data() + token.size(), r);
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw InvalidArgument("bad root in \"" + token + "\"");
    }
    t.root = r;
  }
  auto docs = load_input(name, budget);
  if (docs.empty()) throw InvalidArgument("\"" + name + "\" holds no graph");
  t.doc = std::move(docs.front());
  if (t.root && *t.root >= t.doc.graph.order()) {
    throw InvalidArgument("root of \"" + token + "\" is out of range");
  }
  return t;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto number = [&](std::string_view s) {
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw InvalidArgument("bad range \"" + text + "\"");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  const int lo = number(std::string_view(text).substr(0, dots));
  const int hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw InvalidArgument("empty range \"" + text + "\"");
  return {lo, hi};
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const std::string& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, const Options& o, std::ostream& out,
         std::ostream& err)
      : o_(o), out_(out), err_(err), budget_(resolve_budget(o)) {
    report_.command = join(args);
    report_.budget = budget_;
    digest_input_ = report_.command + "\n" + std::to_string(budget_.max_vertices) + " " +
                    std::to_string(budget_.max_automorphisms) + " " +
                    std::to_string(budget_.max_colorings) + "\n";
  }

  int analyze() {
    for (const GraphDocument& doc : load_input(o_.input, budget_)) {
      const std::string g6 = emit_graph6(doc.graph);
      note(g6);
      try {
        report_.graphs.push_back({doc.name, g6, doc.graph.order(), doc.graph.edge_count(),
                                  symbreak::analyze(doc.graph, o_.phi_max, o_.steady, budget_)});
      } catch (const BudgetExceeded& e) {
        skip("analyze " + doc.name, e.what());
      } catch (const OverflowError& e) {
        skip("analyze " + doc.name, e.what());
      }
    }
    return finish();
  }

  int product() {
    const bool power = o_.kind == "power";
    std::vector<Token> t;
    for (std::size_t i = 0; i < o_.factors.size(); ++i) {
      // power takes G@u and a copy count
      if (!(power && i == 1)) t.push_back(load_token(o_.factors[i], budget_));
    }
    const auto arity = [&](std::size_t n) {
      if (o_.factors.size() != n) {
        throw InvalidArgument("product " + o_.kind + " takes " + std::to_string(n) + " arguments");
      }
    };
    const auto rooted = [](const Token& x) { return RootedGraph(x.doc.graph, x.root.value_or(0)); };
    Product p;
    if (o_.kind == "vertex-sum") {
      if (t.size() < 2) throw InvalidArgument("product vertex-sum takes at least two graphs");
      std::vector<RootedGraph> f;
      for (const Token& x : t) f.push_back(rooted(x));
      p = vertex_sum(f, budget_);
    } else if (power) {
      arity(2);
      int copies = 0;
      const std::string& s = o_.factors[1];
      const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), copies);
      if (ec != std::errc() || end != s.data() + s.size()) {
        throw InvalidArgument("power needs a copy count, got \"" + s + "\"");
      }
      p = vertex_sum_power(t[0].doc.graph, t[0].root.value_or(0), copies, budget_);
    } else if (o_.kind == "rooted") {
      arity(2);
      p = rooted_product_smooth(t[0].doc.graph, rooted(t[1]), budget_);
    } else if (o_.kind == "corona") {
      arity(2);
      p = corona(t[0].doc.graph, t[1].doc.graph, budget_);
    } else {
      arity(2);
      p = lexicographic(t[0].doc.graph, t[1].doc.graph, budget_);
    }
    if (o_.emit == "g6") {
      out_ << emit_graph6(p.graph) << "\n";
    } else if (o_.emit == "edgelist") {
      out_ << emit_edgelist(p.graph);
    } else {
      nlohmann::ordered_json j;
      j["kind"] = o_.kind;
      j["factors"] = o_.factors;
      j["order"] = p.graph.order();
      j["edges"] = p.graph.edge_count();
      j["graph6"] = emit_graph6(p.graph);
      j["special"] = p.layout.special;
      out_ << j.dump(2) << "\n";
    }
    return kExitOk;
  }

  int verify() {
    Verifier verifier(budget_);
    std::vector<TheoremVerdict> verdicts;
    if (o_.theorem == "all") {
      if (!o_.grid.empty()) throw InvalidArgument("--grid needs a single theorem, not \"all\"");
      verdicts = verifier.run_all();
    } else {
      const std::string id = resolve_theorem_id(o_.theorem);
      theorem_info(id);
      const auto grid = o_.grid.empty() ? default_grid(id) : parse_grid(o_.grid, budget_);
      verdicts = verifier.run(id, grid);
    }
    // Per-theorem tallies, in catalog order.
    std::map<std::string, std::map<VerdictStatus, int>> tally;
    for (const TheoremVerdict& v : verdicts) {
      note(v.theorem_id + " " + v.instance);
      ++tally[v.theorem_id][v.status];
      if (v.status == VerdictStatus::skipped) budget_hit_ = true;
    }
    for (const TheoremInfo& info : theorem_catalog()) {
      const auto it = tally.find(info.id);
      if (it == tally.end()) continue;
      err_ << info.id << ":";
      for (const auto& [status, n] : it->second) err_ << " " << to_string(status) << "=" << n;
      err_ << "\n";
    }
    report_.verdicts = std::move(verdicts);
    return finish();
  }

  int table() {
    const auto [lo, hi] = parse_range(o_.range);
    if (o_.family == "radical") {
      if (lo < 1) throw InvalidArgument("radical table needs t >= 1");
      note("radical");
      report_.radical_rows = radical_form_table(lo, hi);
      return finish();
    }
    if (o_.phi_max < 1) throw InvalidArgument("--phi-max must be at least 1");
    for (int n = lo; n <= hi; ++n) {
      Graph g;
      std::string name;
      if (o_.family == "path") {
        g = path(n), name = "P" + std::to_string(n);
      } else if (o_.family == "cycle") {
        g = cycle(n), name = "C" + std::to_string(n);
      } else if (o_.family == "complete") {
        g = complete(n), name = "K" + std::to_string(n);
      } else if (o_.family == "star") {
        g = star(n), name = "S" + std::to_string(n);
      } else {
        g = empty_graph(n), name = "E" + std::to_string(n);
      }
      const std::string g6 = emit_graph6(g);
      note(g6);
      IndexReport r;
      try {
        r = symbreak::analyze(g, o_.phi_max, false, budget_);
      } catch (const BudgetExceeded& e) {
        skip("table " + name, e.what());
        continue;
      } catch (const OverflowError& e) {
        skip("table " + name, e.what());
        continue;
      }
      for (const PhiRow& row : r.phi_table.rows) {
        if (o_.family == "path" && n >= 2) {
          report_.closed_forms.push_back({"path", n, row.k, row.Phi, phi_path_closed(n, row.k)});
        } else if (o_.family == "complete") {
          report_.closed_forms.push_back(
              {"complete", n, row.k, row.Phi, phi_complete_closed(n, row.k)});
        }
      }
      report_.graphs.push_back({name, g6, g.order(), g.edge_count(), std::move(r)});
    }
    return finish();
  }

  int convert() {
    const auto docs = load_input(o_.input, budget_);
    std::string text;
    const bool g6 = o_.out_path == "-" || std::filesystem::path(o_.out_path).extension() == ".g6";
    for (const GraphDocument& d : docs) text += g6 ? emit_graph6(d.graph) + "\n" : emit_edgelist(d.graph);
    if (o_.out_path == "-") {
      out_ << text;
      return kExitOk;
    }
    std::ofstream f(o_.out_path, std::ios::binary);
    f << text;
    f.close();
    if (!f) throw InvalidArgument("cannot write \"" + o_.out_path + "\"");
    err_ << "wrote " << docs.size() << (docs.size() == 1 ? " graph" : " graphs") << " to "
         << o_.out_path << "\n";
    return kExitOk;
  }

 private:
  void note(const std::string& s) { digest_input_ += s + "\n"; }

  void skip(const std::string& what, const std::string& why) {
    report_.skipped.push_back({what, why});
    budget_hit_ = true;
  }

  int finish() {
    report_.input_digest = "fnv1a64:" + fnv1a_hex(digest_input_);
    report_.generated_at = utc_timestamp();
    out_ << emit_report(report_, o_.format == "csv" ? ReportFormat::csv : ReportFormat::json);
    for (const SkipRecord& s : report_.skipped) err_ << "skipped " << s.what << ": " << s.reason << "\n";
    return budget_hit_ ? kExitBudget : kExitOk;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  Budget budget_;
  ReportEnvelope report_;
  std::string digest_input_;
  bool budget_hit_ = false;
};

}  // namespace

const std::vector<TheoremAlias>& theorem_aliases() {
  static const std::vector<TheoremAlias> table = {
      {"eq1", "path-phi"},           {"eq2", "stirling-phi"},
      {"thm2.1", "union-threshold"}, {"thm3.7", "vsum-power"},
      {"cor3.8", "vsum-complete"},   {"cor3.9", "vsum-cycle"},
      {"thm3.10", "vsum-distinct"},  {"thm3.12", "vsum-threshold"},
      {"thm3.13", "vsum-cycle-threshold"},
      {"thm4.2", "rooted-aut"},      {"thm4.3", "rooted-d"},
      {"thm4.4", "rooted-threshold"},
      {"eq3", "corona-aut"},         {"thm5.1", "corona-d"},
      {"thm5.2", "corona-threshold"},
      {"thm6.1", "lex-threshold"},
  };
  return table;
}

std::string resolve_theorem_id(std::string_view name) {
  for (const TheoremAlias& a : theorem_aliases()) {
    if (a.alias == name) return std::string(a.id);
  }
  return std::string(name);
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Distinguishing number and threshold toolkit", std::string(kToolName)};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-aut", o.max_aut, "Largest automorphism group to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-colorings", o.max_colorings, "Largest colouring search to run")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-vertices", o.max_vertices, "Largest graph accepted")
      ->check(CLI::PositiveNumber);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* analyze = app.add_subcommand("analyze", "D, theta, |Aut| and Phi for each input graph");
  analyze->add_option("input", o.input, "graph6 file, edge-list file or builtin name")->required();
  analyze->add_option("--phi-max", o.phi_max, "Largest palette in the Phi table")
      ->check(CLI::NonNegativeNumber);
  analyze->add_flag("--steady", o.steady, "List steady vertices");

  auto* product = app.add_subcommand("product", "Build a product graph");
  product->add_option("kind", o.kind, "vertex-sum, power, rooted, corona or lexicographic")
      ->required()
      ->check(CLI::IsMember({"vertex-sum", "power", "rooted", "corona", "lexicographic"}));
  product->add_option("graphs", o.factors, "Factors as name[@root]; power takes G@u t")
      ->required();
  product->add_option("--emit", o.emit, "Output form")
      ->check(CLI::IsMember({"g6", "edgelist", "json"}));

  auto* verify = app.add_subcommand("verify", "Check closed forms against brute force");
  verify->add_option("theorem", o.theorem, "Theorem id, numbered alias or \"all\"")->required();
  verify->add_option("--grid", o.grid, "Instances, e.g. \"K3,t=2..5;C5,t=2..3\"");

  auto* table = app.add_subcommand("table", "Phi tables for a family, or the radical-form table");
  table->add_option("family", o.family, "path, cycle, complete, star, empty or radical")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "empty", "radical"}));
  table->add_option("range", o.range, "n (or t for radical) as a or a..b")->required();
  table->add_option("--phi-max", o.phi_max, "Largest palette in the Phi table");

  auto* convert = app.add_subcommand("convert", "Rewrite graphs as graph6 (.g6 or -) or edge lists");
  convert->add_option("in", o.input, "Input file or builtin")->required();
  convert->add_option("out", o.out_path, "Output path, or - for graph6 on stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    Runner run(args, o, out, err);
    if (*analyze) return run.analyze();
    if (*product) return run.product();
    if (*verify) return run.verify();
    if (*table) return run.table();
    return run.convert();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace symbreak
