#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairgauge/autoeval.hpp"
#include "fairgauge/manual.hpp"
#include "fairgauge/registry.hpp"

namespace fairgauge::hybrid {

enum class Decision { Pass, Fail };

// A justified manual reversal of an automated metric verdict.
struct Override {
  std::string metric_id;
  Decision decided = Decision::Pass;
  std::string justification;
};

enum class Basis { Automated, Manual, Override };

struct HybridOutcome {
  std::string indicator_id;  // the registry row's own id
  int point = 0;             // 0 or 1
  Basis basis = Basis::Manual;
  std::optional<autoeval::MetricStatus> metric_status;
  std::optional<manual::MaturityLevel> maturity;
  std::vector<std::string> evidence;
};

struct LetterScore {
  int earned = 0;
  int max = 0;
};

struct FairScore {
  std::vector<std::pair<char, LetterScore>> per_letter;  // F, A, I, R
  int total_earned = 0;
  int total_max = 0;
  double percent = 0.0;  // one decimal, rounded half away from zero

  std::string percent_text() const;  // e.g. "83.0"
  const LetterScore& letter(char c) const;
};

// One outcome per registry indicator, in table order. Dual and automated-only
// indicators take the automated verdict (Pass earns the point) unless an
// override names their metric; manual-only indicators earn the point at
// maturity level 4.
std::vector<HybridOutcome> merge(const manual::AnswerSet& answers, const autoeval::AutoReport& auto_report,
                                 const registry::Registry& reg, const std::vector<Override>& overrides);

// Sums points per principle letter. With exclude_na, indicators answered
// "not applicable" (level 0) or evaluated NotApplicable leave both the
// numerator and the denominator.
FairScore compute_score(const std::vector<HybridOutcome>& outcomes, const registry::Registry& reg,
                        bool exclude_na = false);

// CLI override syntax: `<metric>=pass|fail: <justification>`.
Override parse_override(std::string_view text);

double round_percent(int earned, int max);

}  // namespace fairgauge::hybrid
