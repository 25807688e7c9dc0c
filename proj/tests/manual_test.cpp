#include "fairgauge/manual.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "fairgauge/errors.hpp"
#include "support/temp_dir.hpp"

using namespace fairgauge;
using manual::AnswerSet;
using manual::MaturityLevel;
using manual::parse_answers_text;
using manual::Severity;
using registry::builtin_registry;
using testsupport::TempDir;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::UnknownIndicator;
}

}  // namespace

TEST_CASE("answer line parsing") {
  auto set = parse_answers_text("RDA-F1-01M 4\n", "t");
  REQUIRE(set.answers.count("RDA-F1-01M"));
  CHECK(set.answers["RDA-F1-01M"].level == MaturityLevel::FullyImplemented);

  CHECK(code_of([] { parse_answers_text("RDA-F1-01M 5\n", "t"); }) == Errc::LevelOutOfRange);
  CHECK(code_of([] { parse_answers_text("RDA-F1-01M -1\n", "t"); }) == Errc::LevelOutOfRange);
  CHECK(code_of([] { parse_answers_text("RDA-A1-01M 2\nRDA-A1-01M 3\n", "t"); }) == Errc::DuplicateAnswer);
}

TEST_CASE("comments, notes, and blank lines") {
  auto set = parse_answers_text("# a file comment\n\nRDA-F1-01M 3 # still working on it\n", "t");
  REQUIRE(set.answers.size() == 1);
  CHECK(set.answers["RDA-F1-01M"].level == MaturityLevel::InImplementation);
  CHECK(set.answers["RDA-F1-01M"].note == "still working on it");
}

TEST_CASE("serialize/parse round trip is the identity") {
  AnswerSet original;
  original.subject = "https://doi.org/10.1234/x";
  original.answers["RDA-F1-01M"] = {MaturityLevel::FullyImplemented, ""};
  original.answers["RDA-A1-02D"] = {MaturityLevel::NotApplicable, "n/a for this release"};
  original.answers["RDA-I2-01M"] = {MaturityLevel::UnderConsideration, ""};

  AnswerSet reparsed = parse_answers_text(manual::serialize_answers(original), "t");
  CHECK(reparsed.subject == original.subject);
  REQUIRE(reparsed.answers.size() == original.answers.size());
  for (const auto& [id, answer] : original.answers) {
    CHECK(reparsed.answers[id].level == answer.level);
    CHECK(reparsed.answers[id].note == answer.note);
  }
  // fixed point: serializing again gives identical bytes
  CHECK(manual::serialize_answers(reparsed) == manual::serialize_answers(original));
}

TEST_CASE("strict validation demands all 30 manual answers") {
  const auto& reg = builtin_registry();
  auto full = manual::parse_answers(std::filesystem::path(FAIRGAUGE_FIXTURES_DIR) / "xplacer-pre" /
                                    "answers.txt");
  auto validation = manual::validate_answers(full, reg, true);
  CHECK(validation.ok());
  CHECK(validation.findings.empty());
  CHECK(validation.effective.answers.size() == 30);

  AnswerSet partial = full;
  partial.answers.erase("RDA-I2-01M");
  CHECK(code_of([&] { manual::validate_answers(partial, reg, true); }) == Errc::MissingAnswers);
}

TEST_CASE("lenient validation defaults gaps to level 1 with a warning") {
  const auto& reg = builtin_registry();
  auto full = manual::parse_answers(std::filesystem::path(FAIRGAUGE_FIXTURES_DIR) / "xplacer-pre" /
                                    "answers.txt");
  AnswerSet partial = full;
  partial.answers.erase("RDA-I2-01M");

  auto validation = manual::validate_answers(partial, reg, false);
  CHECK(validation.ok());
  REQUIRE(validation.findings.size() == 1);
  CHECK(validation.findings[0].kind == "MissingAnswer");
  CHECK(validation.findings[0].severity == Severity::Warning);
  CHECK(validation.effective.answers.size() == 30);
  CHECK(validation.effective.answers["RDA-I2-01M"].level == MaturityLevel::NotConsidered);
}

TEST_CASE("lenient validation is total for arbitrary subsets") {
  const auto& reg = builtin_registry();
  std::mt19937 rng(11);
  auto full = manual::parse_answers(std::filesystem::path(FAIRGAUGE_FIXTURES_DIR) / "xplacer-post" /
                                    "answers.txt");
  std::vector<std::string> ids;
  for (const auto& [id, answer] : full.answers) ids.push_back(id);

  for (int trial = 0; trial < 25; ++trial) {
    AnswerSet subset;
    for (const std::string& id : ids) {
      if (rng() % 2) subset.answers[id] = full.answers[id];
    }
    auto validation = manual::validate_answers(subset, reg, false);
    CHECK(validation.effective.answers.size() == 30);
  }
}

TEST_CASE("answers keyed by automated metric ids are rejected") {
  const auto& reg = builtin_registry();
  AnswerSet set;
  set.answers["FsF-F1-01D"] = {MaturityLevel::FullyImplemented, ""};
  auto validation = manual::validate_answers(set, reg, false);
  bool found = false;
  for (const auto& finding : validation.findings) {
    if (finding.kind == "UnknownManualIndicator" && finding.indicator_id == "FsF-F1-01D") found = true;
  }
  CHECK(found);
  CHECK_FALSE(validation.effective.answers.count("FsF-F1-01D"));
}

TEST_CASE("dual answers are kept but flagged superseded") {
  const auto& reg = builtin_registry();
  AnswerSet set;
  set.answers["RDA-F1-01D"] = {MaturityLevel::FullyImplemented, ""};
  auto validation = manual::validate_answers(set, reg, false);
  bool flagged = false;
  for (const auto& finding : validation.findings) {
    if (finding.kind == "SupersededByAutomated" && finding.indicator_id == "RDA-F1-01D") flagged = true;
  }
  CHECK(flagged);
  CHECK(validation.effective.answers.count("RDA-F1-01D"));
}

TEST_CASE("unknown indicator ids are an error") {
  const auto& reg = builtin_registry();
  AnswerSet set;
  set.answers["RDA-X9-99Z"] = {MaturityLevel::FullyImplemented, ""};
  CHECK(code_of([&] { manual::validate_answers(set, reg, true); }) == Errc::UnknownIndicator);
}

TEST_CASE("interactive fill answers every manual indicator") {
  const auto& reg = builtin_registry();
  TempDir dir;
  std::string input;
  for (int i = 0; i < 30; ++i) input += "4\n";
  std::istringstream in(input);
  std::ostringstream out;
  auto set = manual::interactive_fill(reg, nullptr, {in, out}, dir.path() / "draft.txt");
  CHECK(set.answers.size() == 30);
  for (const auto& [id, answer] : set.answers) CHECK(answer.level == MaturityLevel::FullyImplemented);
}

TEST_CASE("interactive fill accepts defaults from an existing set") {
  const auto& reg = builtin_registry();
  TempDir dir;
  auto existing = manual::parse_answers(std::filesystem::path(FAIRGAUGE_FIXTURES_DIR) / "xplacer-post" /
                                        "answers.txt");
  std::string input;
  for (int i = 0; i < 30; ++i) input += "\n";  // accept every default
  std::istringstream in(input);
  std::ostringstream out;
  auto set = manual::interactive_fill(reg, &existing, {in, out}, dir.path() / "draft.txt");
  REQUIRE(set.answers.size() == 30);
  for (const auto& [id, answer] : set.answers) {
    CHECK(answer.level == existing.answers[id].level);
  }
}

TEST_CASE("interrupting the interactive flow saves a draft") {
  const auto& reg = builtin_registry();
  TempDir dir;
  std::istringstream in("4\n3\n2\n");  // input ends after three answers
  std::ostringstream out;
  auto draft = dir.path() / "draft.txt";
  CHECK(code_of([&] { manual::interactive_fill(reg, nullptr, {in, out}, draft); }) == Errc::Aborted);
  std::string saved = testsupport::read_all(draft);
  int lines = 0;
  for (char c : saved) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 3);
}

TEST_CASE("level names follow the published scale") {
  CHECK(std::string(manual::level_name(MaturityLevel::NotApplicable)) == "not applicable");
  CHECK(std::string(manual::level_name(MaturityLevel::FullyImplemented)) == "fully implemented");
  CHECK(code_of([] { manual::level_from_int(9); }) == Errc::LevelOutOfRange);
}
