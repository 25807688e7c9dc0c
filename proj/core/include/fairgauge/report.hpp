#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairgauge/hybrid.hpp"

namespace fairgauge::report {

struct Row {
  std::string id;
  std::optional<std::string> partner;
  std::string principle;  // sub-principle label, e.g. R1.3
  registry::Target target = registry::Target::Metadata;
  registry::Mode mode = registry::Mode::ManualOnly;
  hybrid::Basis basis = hybrid::Basis::Manual;
  int point = 0;
  std::optional<autoeval::MetricStatus> metric_status;
  std::optional<manual::MaturityLevel> maturity;
  std::vector<std::string> evidence;
};

struct OverrideNote {
  std::string metric_id;
  std::string decided;  // "Pass" / "Fail"
  std::string justification;
};

struct ReportDocument {
  std::string target_identifier;
  std::string generated_at;
  hybrid::FairScore score;
  bool exclude_na = false;
  std::vector<Row> rows;  // one per scoring indicator
  std::vector<OverrideNote> overrides;
  std::string config_digest;
};

ReportDocument build_report(const std::string& target_identifier,
                            const std::vector<hybrid::HybridOutcome>& outcomes,
                            const registry::Registry& reg, bool exclude_na,
                            const std::vector<hybrid::Override>& overrides,
                            const std::string& config_digest);

// Canonical JSON with stable key order; parse_report inverts it exactly.
std::string render_json(const ReportDocument& report);
ReportDocument parse_report(const std::string& json_text);

// One horizontal bar per indicator, grouped and colored by principle letter;
// bar length is the maturity level, or Pass=4 / Partial=2 / Fail=1 / NA=0
// for automated verdicts. Deterministic bytes.
std::string render_svg(const ReportDocument& report);

// Per-principle subtotals, the headline score, and failed or partial
// indicators with their evidence.
std::string render_text(const ReportDocument& report);

// Maps a row onto the 0-4 bar axis.
int bar_length(const Row& row);

}  // namespace fairgauge::report
