#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairgauge/registry.hpp"

namespace fairgauge::manual {

// RDA maturity scale.
enum class MaturityLevel {
  NotApplicable = 0,
  NotConsidered = 1,
  UnderConsideration = 2,
  InImplementation = 3,
  FullyImplemented = 4,
};

struct Answer {
  MaturityLevel level = MaturityLevel::NotConsidered;
  std::string note;
};

struct AnswerSet {
  std::map<std::string, Answer> answers;  // indicator id -> answer
  std::string subject;
};

// Answer file: one `<indicator-id> <level> [# note]` per line; blank lines
// and '#' comments ignored.
AnswerSet parse_answers(const std::filesystem::path& path);
AnswerSet parse_answers_text(const std::string& text, const std::string& origin);
std::string serialize_answers(const AnswerSet& answers);

enum class Severity { Warning, Error };

struct Finding {
  Severity severity;
  std::string kind;  // MissingAnswer, SupersededByAutomated, UnknownManualIndicator
  std::string indicator_id;
  std::string message;
};

struct Validation {
  std::vector<Finding> findings;
  // Total assignment over the ManualOnly indicators (lenient mode fills
  // gaps with NotConsidered).
  AnswerSet effective;

  bool ok() const;
};

// Strict mode: every ManualOnly indicator must be answered (MissingAnswers
// otherwise). Lenient mode: gaps default to level 1 with a warning. Answers
// keyed by an automated metric id are dropped with an UnknownManualIndicator
// finding; answers for Dual indicators are kept but flagged as superseded.
Validation validate_answers(const AnswerSet& answers, const registry::Registry& reg, bool strict);

struct PromptIo {
  std::istream& in;
  std::ostream& out;
};

// Prompts once per ManualOnly indicator; pre-fills from `existing`. On
// end-of-input the answers so far are written to `draft_path` and Aborted
// is thrown.
AnswerSet interactive_fill(const registry::Registry& reg, const AnswerSet* existing, PromptIo io,
                           const std::filesystem::path& draft_path);

MaturityLevel level_from_int(int value);  // throws LevelOutOfRange
const char* level_name(MaturityLevel level);

}  // namespace fairgauge::manual
