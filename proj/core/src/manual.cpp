#include "fairgauge/manual.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fairgauge/errors.hpp"
#include "util.hpp"

namespace fairgauge::manual {

using registry::Indicator;
using registry::Mode;
using registry::Registry;

MaturityLevel level_from_int(int value) {
  if (value < 0 || value > 4) {
    fail(Errc::LevelOutOfRange, "maturity level " + std::to_string(value) + " is outside 0-4");
  }
  return static_cast<MaturityLevel>(value);
}

const char* level_name(MaturityLevel level) {
  switch (level) {
    case MaturityLevel::NotApplicable: return "not applicable";
    case MaturityLevel::NotConsidered: return "not been considered";
    case MaturityLevel::UnderConsideration: return "under consideration or in planning";
    case MaturityLevel::InImplementation: return "in implementation";
    case MaturityLevel::FullyImplemented: return "fully implemented";
  }
  return "not been considered";
}

AnswerSet parse_answers_text(const std::string& text, const std::string& origin) {
  AnswerSet set;
  int line_no = 0;
  for (const std::string& raw : util::split(text, '\n')) {
    ++line_no;
    std::string where = origin + ":" + std::to_string(line_no);
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::string note;
    if (size_t hash = line.find('#'); hash != std::string::npos) {
      note = util::trim(line.substr(hash + 1));
      line.resize(hash);
    }
    line = util::trim(line);
    if (line.empty()) {
      if (note.starts_with("subject:")) set.subject = util::trim(note.substr(8));
      continue;
    }

    std::istringstream fields(line);
    std::string id, level_text, extra;
    fields >> id >> level_text;
    if (id.empty() || level_text.empty() || (fields >> extra)) {
      fail(Errc::LevelOutOfRange, "expected '<indicator-id> <level>' at " + where);
    }
    auto level_value = util::parse_int(level_text);
    if (!level_value) fail(Errc::LevelOutOfRange, "level '" + level_text + "' is not a number at " + where);
    MaturityLevel level;
    try {
      level = level_from_int(static_cast<int>(*level_value));
    } catch (const Error&) {
      fail(Errc::LevelOutOfRange, "level " + level_text + " is outside 0-4 at " + where);
    }
    if (set.answers.count(id)) fail(Errc::DuplicateAnswer, id + " answered twice at " + where);
    set.answers[id] = Answer{level, note};
  }
  return set;
}

AnswerSet parse_answers(const std::filesystem::path& path) {
  return parse_answers_text(util::read_file(path.string()), path.string());
}

std::string serialize_answers(const AnswerSet& set) {
  std::string out;
  if (!set.subject.empty()) out += "# subject: " + set.subject + "\n";
  for (const auto& [id, answer] : set.answers) {
    out += id + " " + std::to_string(static_cast<int>(answer.level));
    if (!answer.note.empty()) out += " # " + answer.note;
    out += "\n";
  }
  return out;
}

bool Validation::ok() const {
  return std::none_of(findings.begin(), findings.end(),
                      [](const Finding& f) { return f.severity == Severity::Error; });
}

Validation validate_answers(const AnswerSet& answers, const Registry& reg, bool strict) {
  Validation result;
  result.effective.subject = answers.subject;

  for (const auto& [id, answer] : answers.answers) {
    const Indicator* ind = reg.find(id);
    if (!ind) {
      fail(Errc::UnknownIndicator, id + " is not in registry " + reg.version());
    }
    if (ind->id != id) {
      // keyed by the automated metric id, not the maturity indicator id
      result.findings.push_back({strict ? Severity::Error : Severity::Warning, "UnknownManualIndicator", id,
                                 id + " names an automated metric; manual answers use the RDA id " + ind->id});
      continue;
    }
    if (ind->mode == Mode::AutomatedOnly) {
      result.findings.push_back({strict ? Severity::Error : Severity::Warning, "UnknownManualIndicator", id,
                                 id + " is evaluated automatically only"});
      continue;
    }
    if (ind->mode == Mode::Dual) {
      result.findings.push_back({Severity::Warning, "SupersededByAutomated", id,
                                 id + " is dual; the automated result decides the point"});
    }
    result.effective.answers[id] = answer;
  }

  std::vector<std::string> missing;
  for (const Indicator& ind : reg.indicators()) {
    if (ind.mode != Mode::ManualOnly) continue;
    if (result.effective.answers.count(ind.id)) continue;
    missing.push_back(ind.id);
    if (strict) {
      result.findings.push_back({Severity::Error, "MissingAnswer", ind.id, ind.id + " has no answer"});
    } else {
      result.findings.push_back({Severity::Warning, "MissingAnswer", ind.id,
                                 ind.id + " defaulted to level 1 (not been considered)"});
      result.effective.answers[ind.id] = Answer{MaturityLevel::NotConsidered, "defaulted"};
    }
  }
  if (strict && !missing.empty()) {
    std::string list;
    for (size_t i = 0; i < missing.size(); ++i) list += (i ? ", " : "") + missing[i];
    fail(Errc::MissingAnswers, std::to_string(missing.size()) + " manual indicator(s) unanswered: " + list);
  }
  return result;
}

AnswerSet interactive_fill(const Registry& reg, const AnswerSet* existing, PromptIo io,
                           const std::filesystem::path& draft_path) {
  AnswerSet result;
  if (existing) result.subject = existing->subject;

  auto save_draft = [&] {
    std::ofstream out(draft_path);
    out << serialize_answers(result);
  };

  std::vector<const Indicator*> manual_inds;
  for (const Indicator& ind : reg.indicators()) {
    if (ind.mode == Mode::ManualOnly) manual_inds.push_back(&ind);
  }

  io.out << "Maturity levels: (0) not applicable; (1) not been considered; (2) under consideration or in "
            "planning; (3) in implementation; (4) fully implemented\n";

  size_t asked = 0;
  for (const Indicator* ind : manual_inds) {
    ++asked;
    std::optional<MaturityLevel> preset;
    if (existing) {
      auto it = existing->answers.find(ind->id);
      if (it != existing->answers.end()) preset = it->second.level;
    }
    io.out << "[" << asked << "/" << manual_inds.size() << "] " << ind->id << " (" << ind->principle.sub
           << "): " << ind->description << "\n";

    while (true) {
      io.out << "level";
      if (preset) io.out << " [" << static_cast<int>(*preset) << "]";
      io.out << "> " << std::flush;
      std::string line;
      if (!std::getline(io.in, line)) {
        save_draft();
        fail(Errc::Aborted, "input ended after " + std::to_string(result.answers.size()) +
                                " answer(s); draft saved to " + draft_path.string());
      }
      line = util::trim(line);
      if (line.empty()) {
        if (preset) {
          result.answers[ind->id] = Answer{*preset, ""};
          break;
        }
        continue;
      }
      auto value = util::parse_int(line);
      if (!value || *value < 0 || *value > 4) {
        io.out << "enter a level between 0 and 4\n";
        continue;
      }
      result.answers[ind->id] = Answer{static_cast<MaturityLevel>(*value), ""};
      break;
    }
  }
  return result;
}

}  // namespace fairgauge::manual
