#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/combinatorics.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/verify.hpp"

namespace symbreak {

inline constexpr std::string_view kToolName = "symbreak";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct GraphEntry {
  std::string name;
  std::string graph6;
  int order = 0;
  std::size_t edges = 0;
  IndexReport indices;
};

// One brute-force Phi value next to a closed form for the same family.
struct ClosedFormRow {
  std::string family;
  int n = 0;
  int k = 0;
  Count brute_force = 0;
  Count closed_form = 0;
  bool agree() const { return brute_force == closed_form; }
};

// Something that was asked for but not computed.
struct SkipRecord {
  std::string what;
  std::string reason;
};

struct ReportEnvelope {
  std::string command;
  std::string input_digest;
  // Wall-clock time of the run; left out of the digest and of comparisons.
  std::string generated_at;
  Budget budget;
  std::vector<GraphEntry> graphs;
  // Verdicts with status skipped are written to the skip section instead.
  std::vector<TheoremVerdict> verdicts;
  std::vector<SkipRecord> skipped;
  std::vector<ClosedFormRow> closed_forms;
  std::vector<RadicalRow> radical_rows;
};

enum class ReportFormat { json, csv };

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::string emit_report(const ReportEnvelope& report, ReportFormat format);

}  // namespace symbreak
