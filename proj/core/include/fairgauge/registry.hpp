#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairgauge::registry {

// Sub-principle label (F1, A1.1, R1.3, ...). The letter is always the first
// character of the label.
struct PrincipleId {
  char letter;
  std::string sub;
};

// Resource the indicator evaluates: metadata (M), data (D), or both (MD).
enum class Target { Metadata, Data, Both };

enum class Mode { ManualOnly, AutomatedOnly, Dual };
enum class Source { RDA, FsF };

// One scoring indicator. A Dual indicator carries both the RDA maturity id
// (as `id`) and the paired automated metric id (as `dual_partner`); it counts
// as a single point.
struct Indicator {
  std::string id;
  Source source;
  PrincipleId principle;
  Target target;
  std::string description;
  Mode mode;
  std::optional<std::string> dual_partner;

  bool automated() const { return mode != Mode::ManualOnly; }

  // Metric id consulted by the automated evaluator. Valid iff automated().
  const std::string& automated_id() const { return dual_partner ? *dual_partner : id; }
};

class Registry {
 public:
  Registry(std::string version, std::vector<Indicator> indicators);

  const std::string& version() const { return version_; }
  const std::vector<Indicator>& indicators() const { return indicators_; }

  // Resolves an indicator by its own id or its dual partner's id.
  // Throws UnknownIndicator when no row matches.
  const Indicator& lookup(std::string_view id) const;
  const Indicator* find(std::string_view id) const;

  // The automated metric ids, in table order (17 for the built-in set).
  std::vector<std::string> automated_metric_ids() const;
  // Maximum points for one principle letter (F/A/I/R).
  int max_points(char letter) const;

 private:
  std::string version_;
  std::vector<Indicator> indicators_;
};

// The consolidated indicator set transcribed from the published table:
// 47 scoring indicators, 11 dual pairs, 6 automated-only, 30 manual-only.
const Registry& builtin_registry();

std::string target_suffix(Target target);
Target target_from_suffix(std::string_view suffix);
const char* mode_name(Mode mode);
const char* source_name(Source source);

}  // namespace fairgauge::registry
