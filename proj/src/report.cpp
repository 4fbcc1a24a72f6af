#include "symbreak/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace symbreak {

namespace {

using Json = nlohmann::ordered_json;

Json optional_count(const std::optional<Count>& c) { return c ? Json(*c) : Json(nullptr); }

Json graph_json(const GraphEntry& g) {
  Json j;
  j["name"] = g.name;
  j["graph6"] = g.graph6;
  j["order"] = g.order;
  j["edges"] = g.edges;
  j["D"] = g.indices.D;
  j["theta"] = g.indices.theta;
  j["aut_order"] = g.indices.aut_order;
  Json rows = Json::array();
  for (const PhiRow& r : g.indices.phi_table.rows) {
    rows.push_back({{"k", r.k}, {"Phi", r.Phi}, {"phi", r.phi}});
  }
  j["phi"] = rows;
  if (g.indices.steady_vertices) j["steady_vertices"] = *g.indices.steady_vertices;
  return j;
}

Json verdict_json(const TheoremVerdict& v) {
  return {{"theorem", v.theorem_id},
          {"instance", v.instance},
          {"predicted", optional_count(v.predicted)},
          {"brute_force", optional_count(v.brute_force)},
          {"preconditions_met", v.preconditions_met},
          {"status", to_string(v.status)},
          {"reason", v.reason}};
}

std::vector<SkipRecord> all_skips(const ReportEnvelope& r) {
  std::vector<SkipRecord> out = r.skipped;
  for (const TheoremVerdict& v : r.verdicts) {
    if (v.status == VerdictStatus::skipped) {
      out.push_back({v.theorem_id + " " + v.instance, v.reason});
    }
  }
  return out;
}

std::string to_json(const ReportEnvelope& r) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["generated_at"] = r.generated_at;
  j["budget"] = {{"max_vertices", r.budget.max_vertices},
                 {"max_automorphisms", r.budget.max_automorphisms},
                 {"max_colorings", r.budget.max_colorings}};
  j["graphs"] = Json::array();
  for (const GraphEntry& g : r.graphs) j["graphs"].push_back(graph_json(g));
  j["verdicts"] = Json::array();
  for (const TheoremVerdict& v : r.verdicts) {
    if (v.status != VerdictStatus::skipped) j["verdicts"].push_back(verdict_json(v));
  }
  j["closed_forms"] = Json::array();
  for (const ClosedFormRow& c : r.closed_forms) {
    j["closed_forms"].push_back({{"family", c.family},
                                 {"n", c.n},
                                 {"k", c.k},
                                 {"brute_force", c.brute_force},
                                 {"closed_form", c.closed_form},
                                 {"agree", c.agree()}});
  }
  j["radical_table"] = Json::array();
  for (const RadicalRow& row : r.radical_rows) {
    j["radical_table"].push_back({{"family", row.family},
                                  {"t", row.t},
                                  {"min_form", row.min_form},
                                  {"radical", row.radical},
                                  {"agree", row.agree()}});
  }
  j["skipped"] = Json::array();
  for (const SkipRecord& s : all_skips(r)) {
    j["skipped"].push_back({{"what", s.what}, {"reason", s.reason}});
  }
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const std::string& f : fields) {
    if (!first) out += ',';
    out += csv_field(f);
    first = false;
  }
  return out + "\n";
}

std::string opt(const std::optional<Count>& c) { return c ? std::to_string(*c) : ""; }
std::string yes_no(bool b) { return b ? "true" : "false"; }

// Sections separated by blank lines, each with its own header; empty
// sections are left out.
std::string to_csv(const ReportEnvelope& r) {
  std::ostringstream out;
  out << csv_row({"tool", "version", "command", "input_digest", "generated_at"})
      << csv_row({std::string(kToolName), std::string(kToolVersion), r.command, r.input_digest,
                  r.generated_at});
  if (!r.graphs.empty()) {
    out << "\n" << csv_row({"name", "graph6", "order", "edges", "D", "theta", "aut_order"});
    for (const GraphEntry& g : r.graphs) {
      out << csv_row({g.name, g.graph6, std::to_string(g.order), std::to_string(g.edges),
                      std::to_string(g.indices.D), std::to_string(g.indices.theta),
                      std::to_string(g.indices.aut_order)});
    }
    out << "\n" << csv_row({"name", "k", "Phi", "phi"});
    for (const GraphEntry& g : r.graphs) {
      for (const PhiRow& row : g.indices.phi_table.rows) {
        out << csv_row({g.name, std::to_string(row.k), std::to_string(row.Phi),
                        std::to_string(row.phi)});
      }
    }
  }
  bool header = false;
  for (const TheoremVerdict& v : r.verdicts) {
    if (v.status == VerdictStatus::skipped) continue;
    if (!header) {
      out << "\n"
          << csv_row({"theorem", "instance", "predicted", "brute_force", "preconditions_met",
                      "status", "reason"});
      header = true;
    }
    out << csv_row({v.theorem_id, v.instance, opt(v.predicted), opt(v.brute_force),
                    yes_no(v.preconditions_met), to_string(v.status), v.reason});
  }
  if (!r.closed_forms.empty()) {
    out << "\n" << csv_row({"family", "n", "k", "brute_force", "closed_form", "agree"});
    for (const ClosedFormRow& c : r.closed_forms) {
      out << csv_row({c.family, std::to_string(c.n), std::to_string(c.k),
                      std::to_string(c.brute_force), std::to_string(c.closed_form),
                      yes_no(c.agree())});
    }
  }
  if (!r.radical_rows.empty()) {
    out << "\n" << csv_row({"family", "t", "min_form", "radical", "agree"});
    for (const RadicalRow& row : r.radical_rows) {
      out << csv_row({row.family, std::to_string(row.t), std::to_string(row.min_form),
                      std::to_string(row.radical), yes_no(row.agree())});
    }
  }
  const auto skips = all_skips(r);
  if (!skips.empty()) {
    out << "\n" << csv_row({"skipped", "reason"});
    for (const SkipRecord& s : skips) out << csv_row({s.what, s.reason});
  }
  return out.str();
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string emit_report(const ReportEnvelope& report, ReportFormat format) {
  return format == ReportFormat::json ? to_json(report) : to_csv(report);
}

}  // namespace symbreak
