#include "fairgauge/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fairgauge/errors.hpp"
#include "util.hpp"

namespace fairgauge::hybrid {

using autoeval::AutoReport;
using autoeval::MetricStatus;
using manual::AnswerSet;
using manual::MaturityLevel;
using registry::Indicator;
using registry::Mode;
using registry::Registry;

double round_percent(int earned, int max) {
  if (max <= 0) return 0.0;
  double scaled = 1000.0 * earned / max;
  return std::round(scaled) / 10.0;  // std::round is half away from zero
}

std::string FairScore::percent_text() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", percent);
  return buf;
}

const LetterScore& FairScore::letter(char c) const {
  for (const auto& [letter, score] : per_letter) {
    if (letter == c) return score;
  }
  fail(Errc::IncompleteOutcomes, std::string("no score for principle letter ") + c);
}

Override parse_override(std::string_view text) {
  size_t eq = text.find('=');
  if (eq == std::string_view::npos) {
    fail(Errc::OverrideWithoutJustification,
         "override must be '<metric>=pass|fail: <justification>', got '" + std::string(text) + "'");
  }
  Override ov;
  ov.metric_id = util::trim(text.substr(0, eq));
  std::string rest = util::trim(text.substr(eq + 1));
  size_t colon = rest.find(':');
  std::string decision = util::trim(colon == std::string::npos ? rest : rest.substr(0, colon));
  if (util::iequals(decision, "pass")) {
    ov.decided = Decision::Pass;
  } else if (util::iequals(decision, "fail")) {
    ov.decided = Decision::Fail;
  } else {
    fail(Errc::OverrideWithoutJustification, "override decision must be pass or fail: '" + decision + "'");
  }
  if (colon != std::string::npos) ov.justification = util::trim(rest.substr(colon + 1));
  if (ov.justification.empty()) {
    fail(Errc::OverrideWithoutJustification, ov.metric_id + " override carries no justification");
  }
  return ov;
}

std::vector<HybridOutcome> merge(const AnswerSet& answers, const AutoReport& auto_report,
                                 const Registry& reg, const std::vector<Override>& overrides) {
  // validate overrides up front
  std::map<std::string, const Override*> by_metric;
  for (const Override& ov : overrides) {
    if (util::trim(ov.justification).empty()) {
      fail(Errc::OverrideWithoutJustification, ov.metric_id + " override carries no justification");
    }
    const Indicator& ind = reg.lookup(ov.metric_id);
    if (ind.mode == Mode::ManualOnly) {
      fail(Errc::OverrideOnManualIndicator,
           ov.metric_id + " is a manual maturity indicator; overrides apply to automated metrics");
    }
    by_metric[ind.automated_id()] = &ov;
  }

  std::vector<HybridOutcome> outcomes;
  outcomes.reserve(reg.indicators().size());

  for (const Indicator& ind : reg.indicators()) {
    HybridOutcome outcome;
    outcome.indicator_id = ind.id;

    if (ind.mode == Mode::ManualOnly) {
      auto it = answers.answers.find(ind.id);
      if (it == answers.answers.end()) {
        fail(Errc::MissingAnswers, ind.id + " has no validated manual answer");
      }
      outcome.basis = Basis::Manual;
      outcome.maturity = it->second.level;
      outcome.point = it->second.level == MaturityLevel::FullyImplemented ? 1 : 0;
      outcome.evidence.push_back(std::string("maturity: ") + manual::level_name(it->second.level));
      if (!it->second.note.empty()) outcome.evidence.push_back("note: " + it->second.note);
      outcomes.push_back(std::move(outcome));
      continue;
    }

    const std::string& metric_id = ind.automated_id();
    const autoeval::MetricResult& result = auto_report.result(metric_id);
    outcome.metric_status = result.status;

    if (auto it = by_metric.find(metric_id); it != by_metric.end()) {
      outcome.basis = Basis::Override;
      outcome.point = it->second->decided == Decision::Pass ? 1 : 0;
      outcome.evidence.push_back(metric_id + " overridden to " +
                                 (it->second->decided == Decision::Pass ? "pass" : "fail") + ": " +
                                 it->second->justification);
      outcome.evidence.push_back(std::string("automated status was ") + autoeval::status_name(result.status));
    } else {
      outcome.basis = Basis::Automated;
      outcome.point = result.status == MetricStatus::Pass ? 1 : 0;
      outcome.evidence.push_back(metric_id + ": " + autoeval::status_name(result.status));
      outcome.evidence.insert(outcome.evidence.end(), result.evidence.begin(), result.evidence.end());
    }

    if (ind.mode == Mode::Dual) {
      if (auto it = answers.answers.find(ind.id); it != answers.answers.end()) {
        outcome.maturity = it->second.level;
        outcome.evidence.push_back("manual answer (level " +
                                   std::to_string(static_cast<int>(it->second.level)) +
                                   ") superseded by automated result");
      }
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

FairScore compute_score(const std::vector<HybridOutcome>& outcomes, const Registry& reg, bool exclude_na) {
  if (outcomes.size() != reg.indicators().size()) {
    fail(Errc::IncompleteOutcomes, "expected " + std::to_string(reg.indicators().size()) +
                                       " outcomes, got " + std::to_string(outcomes.size()));
  }

  FairScore score;
  for (char letter : {'F', 'A', 'I', 'R'}) score.per_letter.emplace_back(letter, LetterScore{});

  std::map<std::string, const HybridOutcome*> by_id;
  for (const HybridOutcome& outcome : outcomes) {
    if (!by_id.emplace(outcome.indicator_id, &outcome).second) {
      fail(Errc::IncompleteOutcomes, "duplicate outcome for " + outcome.indicator_id);
    }
  }

  for (const Indicator& ind : reg.indicators()) {
    auto it = by_id.find(ind.id);
    if (it == by_id.end()) fail(Errc::IncompleteOutcomes, "no outcome for " + ind.id);
    const HybridOutcome& outcome = *it->second;

    bool not_applicable =
        (outcome.basis == Basis::Manual && outcome.maturity == MaturityLevel::NotApplicable) ||
        (outcome.basis == Basis::Automated && outcome.metric_status == MetricStatus::NotApplicable);
    if (exclude_na && not_applicable) continue;

    for (auto& [letter, ls] : score.per_letter) {
      if (letter == ind.principle.letter) {
        ls.max += 1;
        ls.earned += outcome.point;
      }
    }
    score.total_max += 1;
    score.total_earned += outcome.point;
  }

  score.percent = round_percent(score.total_earned, score.total_max);
  return score;
}

}  // namespace fairgauge::hybrid
