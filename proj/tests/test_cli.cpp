#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symbreak/cli.hpp"
#include "symbreak/io.hpp"
#include "symbreak/report.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli_main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "symbreak_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("analyze the Petersen graph") {
  const Run r = cli({"analyze", "builtin:petersen"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  REQUIRE(j["graphs"].size() == 1);
  CHECK(j["graphs"][0]["D"] == 3);
  CHECK(j["graphs"][0]["theta"] == 8);
  CHECK(j["graphs"][0]["aut_order"] == 120);
  CHECK(j["tool"] == "symbreak");
  CHECK(j["skipped"].empty());
}

TEST_CASE("analyze with steady vertices and a file of graphs") {
  const auto file = scratch_dir() / "pair.g6";
  std::ofstream(file) << "Bw\nCr\n";
  const Run r = cli({"analyze", file.string(), "--steady", "--phi-max", "2"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  REQUIRE(j["graphs"].size() == 2);
  CHECK(j["graphs"][0]["steady_vertices"].size() == 3);
  CHECK(j["graphs"][1]["phi"].size() == 2);
}

TEST_CASE("verify through a numbered alias") {
  const Run r = cli({"verify", "thm3.7", "--grid", "K3,t=2..5"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  REQUIRE(j["verdicts"].size() == 4);
  for (const auto& v : j["verdicts"]) {
    CHECK(v["status"] == "agree");
    CHECK(v["theorem"] == "vsum-power");
  }
  CHECK(r.err.find("vsum-power: agree=4") != std::string::npos);
  for (const TheoremAlias& a : theorem_aliases()) CHECK_NOTHROW(theorem_info(std::string(a.id)));
  CHECK(resolve_theorem_id("corona-d") == "corona-d");
}

TEST_CASE("Phi table for paths matches the closed form") {
  const Run r = cli({"table", "path", "2..8", "--phi-max", "4"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["closed_forms"].size() == 7 * 4);
  for (const auto& row : j["closed_forms"]) CHECK(row["agree"] == true);
}

TEST_CASE("radical table lists the K3 mismatches") {
  const Run r = cli({"table", "radical", "2..4"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  std::vector<int> k3;
  for (const auto& row : j["radical_table"]) {
    if (row["family"] == "K3" && row["agree"] == false) k3.push_back(row["t"]);
  }
  CHECK(k3 == std::vector<int>{2, 4});
}

TEST_CASE("product output") {
  Run r = cli({"product", "corona", "K1", "K2"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse_graph6(r.out) == parse_graph6("Bw"));
  r = cli({"product", "power", "K3@0", "2"});
  CHECK(r.code == kExitOk);
  CHECK(parse_graph6(r.out).order() == 5);
  r = cli({"product", "lexicographic", "P3", "K2", "--emit", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["order"] == 6);
  r = cli({"product", "rooted", "P2", "P3@0", "--emit", "edgelist"});
  CHECK(r.code == kExitOk);
  CHECK(parse_edgelist(r.out).order() == 6);
  CHECK(cli({"product", "rooted", "P2"}).code == kExitUsage);
  CHECK(cli({"product", "power", "K3@0", "x"}).code == kExitUsage);
}

TEST_CASE("convert between formats") {
  const auto dir = scratch_dir();
  const auto el = dir / "out.txt";
  REQUIRE(cli({"convert", "petersen", el.string()}).code == kExitOk);
  const auto g6 = dir / "out.g6";
  REQUIRE(cli({"convert", el.string(), g6.string()}).code == kExitOk);
  const Run r = cli({"convert", g6.string(), "-"});
  CHECK(r.out == emit_graph6(kneser(5, 2)) + "\n");
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"analyze", "K3", "--no-such-flag"}).code == kExitUsage);
  CHECK(cli({"analyze", "nonsense"}).code == kExitUsage);
  CHECK(cli({"analyze", "g6:A`"}).code == kExitUsage);
  CHECK(cli({"verify", "thm9.9"}).code == kExitUsage);
  CHECK(cli({"verify", "all", "--grid", "K3"}).code == kExitUsage);
  CHECK(cli({"table", "path", "5..2"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  const Run budget = cli({"analyze", "K8", "--max-aut", "100"});
  CHECK(budget.code == kExitBudget);
  const json j = json::parse(budget.out);
  REQUIRE(j["skipped"].size() == 1);
  CHECK(j["skipped"][0]["reason"].get<std::string>().find("budget") != std::string::npos);
  CHECK(!budget.err.empty());
}

TEST_CASE("skipped verdicts land in the skip section") {
  const Run r = cli({"--max-aut", "10", "verify", "vsum-power", "--grid", "K4@0,t=3"});
  CHECK(r.code == kExitBudget);
  const json j = json::parse(r.out);
  CHECK(j["verdicts"].empty());
  REQUIRE(j["skipped"].size() == 1);
  CHECK(j["skipped"][0]["what"] == "vsum-power K4@0,t=3");
  CHECK_FALSE(j["skipped"][0]["reason"].get<std::string>().empty());
}

TEST_CASE("budget environment overrides") {
  setenv("SYMBREAK_MAX_AUT", "100", 1);
  Run r = cli({"analyze", "K8"});
  CHECK(r.code == kExitBudget);
  r = cli({"analyze", "K8", "--max-aut", "100000"});
  CHECK(r.code == kExitOk);
  setenv("SYMBREAK_MAX_AUT", "zero", 1);
  CHECK(cli({"analyze", "K3"}).code == kExitUsage);
  unsetenv("SYMBREAK_MAX_AUT");

  setenv("SYMBREAK_MAX_VERTICES", "5", 1);
  CHECK(cli({"analyze", "P6"}).code == kExitUsage);
  unsetenv("SYMBREAK_MAX_VERTICES");
  setenv("SYMBREAK_MAX_COLORINGS", "3", 1);
  CHECK(cli({"analyze", "petersen"}).code == kExitBudget);
  unsetenv("SYMBREAK_MAX_COLORINGS");
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  const auto strip = [](std::string text) {
    json j = json::parse(text);
    CHECK(j.contains("generated_at"));
    j.erase("generated_at");
    return j.dump();
  };
  const std::vector<std::string> args = {"verify", "corona-threshold"};
  const Run a = cli(args), b = cli(args);
  CHECK(strip(a.out) == strip(b.out));
  CHECK(json::parse(a.out)["input_digest"] == json::parse(b.out)["input_digest"]);
  CHECK(json::parse(a.out)["input_digest"] != json::parse(cli({"verify", "corona-d"}).out)["input_digest"]);

  const Run c1 = cli({"--format", "csv", "analyze", "C5"});
  const Run c2 = cli({"--format", "csv", "analyze", "C5"});
  const auto drop_first_rows = [](const std::string& s) { return s.substr(s.find("\n\n")); };
  CHECK(drop_first_rows(c1.out) == drop_first_rows(c2.out));
}

TEST_CASE("report emitter") {
  ReportEnvelope r;
  r.command = "x";
  TheoremVerdict v;
  v.theorem_id = "rooted-d";
  v.instance = "K2,P3@0";
  v.status = VerdictStatus::skipped;
  v.reason = "automorphism group exceeds the budget";
  r.verdicts.push_back(v);
  const json j = json::parse(emit_report(r, ReportFormat::json));
  CHECK(j["verdicts"].empty());
  REQUIRE(j["skipped"].size() == 1);
  CHECK(j["skipped"][0]["reason"] == v.reason);

  const std::string csv = emit_report(r, ReportFormat::csv);
  CHECK(csv.find("skipped,reason") != std::string::npos);
  CHECK(csv.find("\"rooted-d K2,P3@0\"") != std::string::npos);

  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
