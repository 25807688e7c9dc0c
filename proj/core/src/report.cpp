#include "fairgauge/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "fairgauge/errors.hpp"
#include "util.hpp"

namespace fairgauge::report {

using hybrid::Basis;
using hybrid::FairScore;
using hybrid::HybridOutcome;
using autoeval::MetricStatus;
using manual::MaturityLevel;
using registry::Indicator;
using registry::Registry;
using ordered_json = nlohmann::ordered_json;

namespace {

const char* basis_name(Basis basis) {
  switch (basis) {
    case Basis::Automated: return "Automated";
    case Basis::Manual: return "Manual";
    case Basis::Override: return "Override";
  }
  return "Manual";
}

Basis basis_from_name(std::string_view name) {
  if (name == "Automated") return Basis::Automated;
  if (name == "Manual") return Basis::Manual;
  if (name == "Override") return Basis::Override;
  fail(Errc::InvalidReport, "unknown basis '" + std::string(name) + "'");
}

registry::Mode mode_from_name(std::string_view name) {
  if (name == "ManualOnly") return registry::Mode::ManualOnly;
  if (name == "AutomatedOnly") return registry::Mode::AutomatedOnly;
  if (name == "Dual") return registry::Mode::Dual;
  fail(Errc::InvalidReport, "unknown mode '" + std::string(name) + "'");
}

// Recomputes the score from rows and verifies it matches the stored one.
void check_consistency(const ReportDocument& report) {
  if (report.rows.empty()) fail(Errc::InvalidReport, "report has no rows");
  FairScore recomputed;
  for (char letter : {'F', 'A', 'I', 'R'}) recomputed.per_letter.emplace_back(letter, hybrid::LetterScore{});
  for (const Row& row : report.rows) {
    bool not_applicable = (row.basis == Basis::Manual && row.maturity == MaturityLevel::NotApplicable) ||
                          (row.basis == Basis::Automated && row.metric_status == MetricStatus::NotApplicable);
    if (report.exclude_na && not_applicable) continue;
    for (auto& [letter, ls] : recomputed.per_letter) {
      if (letter == row.principle.front()) {
        ls.max += 1;
        ls.earned += row.point;
      }
    }
    recomputed.total_max += 1;
    recomputed.total_earned += row.point;
  }
  recomputed.percent = hybrid::round_percent(recomputed.total_earned, recomputed.total_max);
  if (recomputed.total_earned != report.score.total_earned ||
      recomputed.total_max != report.score.total_max ||
      recomputed.percent != report.score.percent) {
    fail(Errc::InvalidReport, "score does not match the report rows");
  }
  for (const auto& [letter, ls] : recomputed.per_letter) {
    const hybrid::LetterScore& stored = report.score.letter(letter);
    if (stored.earned != ls.earned || stored.max != ls.max) {
      fail(Errc::InvalidReport, std::string("per-letter score mismatch for ") + letter);
    }
  }
}

}  // namespace

int bar_length(const Row& row) {
  if (row.basis == Basis::Manual && row.maturity) return static_cast<int>(*row.maturity);
  if (row.basis == Basis::Override) return row.point == 1 ? 4 : 1;
  if (row.metric_status) {
    switch (*row.metric_status) {
      case MetricStatus::Pass: return 4;
      case MetricStatus::Partial: return 2;
      case MetricStatus::Fail: return 1;
      case MetricStatus::NotApplicable: return 0;
    }
  }
  return 0;
}

ReportDocument build_report(const std::string& target_identifier,
                            const std::vector<HybridOutcome>& outcomes, const Registry& reg,
                            bool exclude_na, const std::vector<hybrid::Override>& overrides,
                            const std::string& config_digest) {
  ReportDocument report;
  report.target_identifier = target_identifier;
  report.generated_at = util::iso8601_now();
  report.exclude_na = exclude_na;
  report.config_digest = config_digest;
  report.score = hybrid::compute_score(outcomes, reg, exclude_na);

  std::map<std::string, const HybridOutcome*> by_id;
  for (const HybridOutcome& outcome : outcomes) by_id[outcome.indicator_id] = &outcome;

  for (const Indicator& ind : reg.indicators()) {
    auto it = by_id.find(ind.id);
    if (it == by_id.end()) fail(Errc::IncompleteOutcomes, "no outcome for " + ind.id);
    const HybridOutcome& outcome = *it->second;
    Row row;
    row.id = ind.id;
    row.partner = ind.dual_partner;
    row.principle = ind.principle.sub;
    row.target = ind.target;
    row.mode = ind.mode;
    row.basis = outcome.basis;
    row.point = outcome.point;
    row.metric_status = outcome.metric_status;
    row.maturity = outcome.maturity;
    row.evidence = outcome.evidence;
    report.rows.push_back(std::move(row));
  }

  for (const hybrid::Override& ov : overrides) {
    report.overrides.push_back(
        {ov.metric_id, ov.decided == hybrid::Decision::Pass ? "Pass" : "Fail", ov.justification});
  }
  return report;
}

std::string render_json(const ReportDocument& report) {
  check_consistency(report);
  ordered_json doc;
  doc["fairgauge_report"] = 1;
  doc["target"] = report.target_identifier;
  doc["generated_at"] = report.generated_at;

  ordered_json score;
  ordered_json per_letter;
  for (const auto& [letter, ls] : report.score.per_letter) {
    ordered_json entry;
    entry["earned"] = ls.earned;
    entry["max"] = ls.max;
    per_letter[std::string(1, letter)] = entry;
  }
  score["per_principle"] = per_letter;
  score["earned"] = report.score.total_earned;
  score["max"] = report.score.total_max;
  score["percent"] = report.score.percent_text();
  doc["score"] = score;
  doc["exclude_na"] = report.exclude_na;

  ordered_json rows = ordered_json::array();
  for (const Row& row : report.rows) {
    ordered_json r;
    r["id"] = row.id;
    r["partner"] = row.partner ? ordered_json(*row.partner) : ordered_json(nullptr);
    r["principle"] = row.principle;
    r["target"] = registry::target_suffix(row.target);
    r["mode"] = registry::mode_name(row.mode);
    r["basis"] = basis_name(row.basis);
    r["point"] = row.point;
    if (row.metric_status) r["metric_status"] = autoeval::status_name(*row.metric_status);
    if (row.maturity) r["maturity"] = static_cast<int>(*row.maturity);
    r["evidence"] = row.evidence;
    rows.push_back(std::move(r));
  }
  doc["rows"] = rows;

  ordered_json overrides = ordered_json::array();
  for (const OverrideNote& ov : report.overrides) {
    ordered_json o;
    o["metric"] = ov.metric_id;
    o["decided"] = ov.decided;
    o["justification"] = ov.justification;
    overrides.push_back(std::move(o));
  }
  doc["overrides"] = overrides;
  doc["config_digest"] = report.config_digest;
  return doc.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(Errc::InvalidReport, std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows")) fail(Errc::InvalidReport, "not a fairgauge report");

  ReportDocument report;
  report.target_identifier = doc.value("target", "");
  report.generated_at = doc.value("generated_at", "");
  report.exclude_na = doc.value("exclude_na", false);
  report.config_digest = doc.value("config_digest", "");

  if (doc.contains("score")) {
    const auto& score = doc["score"];
    report.score.total_earned = score.value("earned", 0);
    report.score.total_max = score.value("max", 0);
    if (score.contains("percent")) {
      auto p = util::parse_double(score["percent"].get<std::string>());
      report.score.percent = p ? *p : 0.0;
    }
    if (score.contains("per_principle")) {
      for (const auto& [letter, entry] : score["per_principle"].items()) {
        report.score.per_letter.emplace_back(letter[0],
                                             hybrid::LetterScore{entry.value("earned", 0), entry.value("max", 0)});
      }
    }
  }

  for (const auto& r : doc["rows"]) {
    Row row;
    row.id = r.value("id", "");
    if (r.contains("partner") && r["partner"].is_string()) row.partner = r["partner"].get<std::string>();
    row.principle = r.value("principle", "");
    row.target = registry::target_from_suffix(r.value("target", "M"));
    row.mode = mode_from_name(r.value("mode", "ManualOnly"));
    row.basis = basis_from_name(r.value("basis", "Manual"));
    row.point = r.value("point", 0);
    if (row.point != 0 && row.point != 1) fail(Errc::InvalidReport, row.id + " point must be 0 or 1");
    if (r.contains("metric_status")) {
      row.metric_status = autoeval::status_from_name(r["metric_status"].get<std::string>());
    }
    if (r.contains("maturity")) {
      int level = r["maturity"].get<int>();
      if (level < 0 || level > 4) fail(Errc::InvalidReport, row.id + " maturity outside 0-4");
      row.maturity = static_cast<MaturityLevel>(level);
    }
    if (r.contains("evidence")) {
      for (const auto& e : r["evidence"]) row.evidence.push_back(e.get<std::string>());
    }
    if (row.principle.empty()) fail(Errc::InvalidReport, "row without principle");
    report.rows.push_back(std::move(row));
  }

  if (doc.contains("overrides")) {
    for (const auto& o : doc["overrides"]) {
      report.overrides.push_back(
          {o.value("metric", ""), o.value("decided", ""), o.value("justification", "")});
    }
  }
  check_consistency(report);
  return report;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace {

const char* letter_color(char letter) {
  switch (letter) {
    case 'F': return "#2c7fb8";
    case 'A': return "#31a354";
    case 'I': return "#d95f0e";
    case 'R': return "#c51b8a";
  }
  return "#888888";
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c; break;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const ReportDocument& report) {
  check_consistency(report);

  const int row_height = 16;
  const int label_width = 170;
  const int unit_width = 60;  // width per maturity level
  const int top = 48;
  const int width = label_width + 4 * unit_width + 40;
  int height = top + static_cast<int>(report.rows.size()) * row_height + 20;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
  svg << "  <text x=\"12\" y=\"22\" font-size=\"16\">FAIR score: " << report.score.percent_text()
      << "% (" << report.score.total_earned << "/" << report.score.total_max << ")</text>\n";
  svg << "  <text x=\"12\" y=\"38\" fill=\"#555\">" << escape_xml(report.target_identifier)
      << "</text>\n";

  int y = top;
  char current_letter = '\0';
  for (const Row& row : report.rows) {
    int length = bar_length(row);
    char letter = row.principle.front();
    if (letter != current_letter) {
      current_letter = letter;
      svg << "  <text x=\"" << label_width + 4 * unit_width + 14 << "\" y=\"" << y + 11
          << "\" fill=\"" << letter_color(letter) << "\" font-weight=\"bold\">" << letter
          << "</text>\n";
    }
    std::string label = row.id;
    if (row.partner) label += " / " + *row.partner;
    svg << "  <text x=\"12\" y=\"" << y + 11 << "\">" << escape_xml(label) << "</text>\n";
    // zero-length bars keep their element so every indicator stays visible
    int bar = length * unit_width;
    svg << "  <rect class=\"bar\" x=\"" << label_width << "\" y=\"" << y + 2 << "\" width=\"" << bar
        << "\" height=\"" << row_height - 4 << "\" fill=\"" << letter_color(letter) << "\"/>\n";
    y += row_height;
  }
  svg << "</svg>\n";
  return svg.str();
}

// ---------------------------------------------------------------------------
// text
// ---------------------------------------------------------------------------

std::string render_text(const ReportDocument& report) {
  check_consistency(report);

  std::ostringstream out;
  out << "Target: " << report.target_identifier << "\n";
  for (const auto& [letter, ls] : report.score.per_letter) {
    out << letter << " " << ls.earned << "/" << ls.max << "\n";
  }
  out << "FAIR score: " << report.score.percent_text() << "%\n";

  std::vector<const Row*> flagged;
  for (const Row& row : report.rows) {
    if (row.point == 0 ||
        (row.metric_status && *row.metric_status == MetricStatus::Partial)) {
      flagged.push_back(&row);
    }
  }
  if (!flagged.empty()) {
    out << "\nIndicators without full marks:\n";
    for (const Row* row : flagged) {
      out << "  " << row->id;
      if (row->partner) out << " / " << *row->partner;
      out << " (" << row->principle << "): ";
      if (row->basis == Basis::Manual && row->maturity) {
        out << "level " << static_cast<int>(*row->maturity);
      } else if (row->metric_status) {
        out << autoeval::status_name(*row->metric_status);
      }
      if (row->basis == Basis::Override) out << " [override]";
      out << "\n";
      for (const std::string& e : row->evidence) out << "      " << e << "\n";
    }
  }

  if (!report.overrides.empty()) {
    out << "\nOverrides applied:\n";
    for (const OverrideNote& ov : report.overrides) {
      out << "  " << ov.metric_id << " -> " << ov.decided << ": " << ov.justification << "\n";
    }
  }
  return out.str();
}

}  // namespace fairgauge::report
