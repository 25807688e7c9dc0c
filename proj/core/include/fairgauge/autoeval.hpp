#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fairgauge/harvest.hpp"

namespace fairgauge::autoeval {

enum class MetricStatus { Pass, Partial, Fail, NotApplicable };

struct MetricResult {
  std::string metric_id;
  MetricStatus status = MetricStatus::Fail;
  std::vector<std::string> evidence;
  std::vector<std::string> checked_keys;
};

// Verdicts for the 17 automated metrics, keyed by metric id; exactly one
// result per metric, always.
struct AutoReport {
  std::map<std::string, MetricResult> results;
  std::string target_identifier;
  std::string harvested_at;

  const MetricResult& result(const std::string& metric_id) const;
};

// Reference lists the metric rules consult. Defaults ship embedded; a config
// file overrides individual keys.
struct EvalConfig {
  std::vector<std::string> trusted_repositories;
  std::vector<std::string> known_semantic_resources;
  std::vector<std::string> license_registry;
  std::vector<std::string> community_standards;
  std::vector<std::string> open_formats;
  harvest::PidPrefixes pid_prefixes;

  static EvalConfig defaults();
  // Defaults with the file's keys replacing the matching lists.
  // Keys: trusted_repositories, known_semantic_resources, license_registry,
  // community_standards, open_formats, pid_prefix_<scheme>.
  static EvalConfig load(const std::filesystem::path& path);

  std::string digest() const;
};

AutoReport evaluate_metrics(const harvest::MetadataGraph& graph,
                            const harvest::AssessmentTarget& target,
                            const EvalConfig& config);

const char* status_name(MetricStatus status);
MetricStatus status_from_name(std::string_view name);

}  // namespace fairgauge::autoeval
