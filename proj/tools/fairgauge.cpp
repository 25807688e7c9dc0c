// fairgauge: hybrid FAIRness assessment and linked-data annotation CLI.
//
// Subcommands: registry list, assess auto|manual|hybrid, annotate csv|tree,
// tree eval, report. Exit codes: 0 success, 1 usage error, 2 domain error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fairgauge/annotate.hpp"
#include "fairgauge/autoeval.hpp"
#include "fairgauge/errors.hpp"
#include "fairgauge/harvest.hpp"
#include "fairgauge/hybrid.hpp"
#include "fairgauge/manual.hpp"
#include "fairgauge/registry.hpp"
#include "fairgauge/report.hpp"
#include "fairgauge/treemodel.hpp"

namespace fg = fairgauge;
using nlohmann::ordered_json;

namespace {

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fg::fail(fg::Errc::TargetUnreadable, "cannot write " + path);
  out << bytes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fg::fail(fg::Errc::TargetUnreadable, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

fg::autoeval::EvalConfig load_config(const std::string& config_path) {
  if (!config_path.empty()) return fg::autoeval::EvalConfig::load(config_path);
  if (const char* env = std::getenv("FAIRGAUGE_CONFIG"); env && *env) {
    return fg::autoeval::EvalConfig::load(env);
  }
  return fg::autoeval::EvalConfig::defaults();
}

struct AssessInputs {
  fg::harvest::AssessmentTarget target;
  fg::harvest::MetadataGraph graph;
  fg::autoeval::AutoReport auto_report;
  fg::autoeval::EvalConfig config;
};

AssessInputs run_automated(const std::string& target_spec, const std::string& config_path,
                           bool no_network) {
  AssessInputs inputs;
  inputs.config = load_config(config_path);
  inputs.target = fg::harvest::load_target(target_spec);
  auto fetcher = no_network ? fg::harvest::make_offline_fetcher() : fg::harvest::make_http_fetcher();
  inputs.graph = fg::harvest::harvest(inputs.target, fetcher.get());
  if (inputs.target.kind == fg::harvest::TargetKind::LiveUrl && inputs.target.data_files.empty()) {
    inputs.target.data_files = fg::harvest::data_files_from_metadata(inputs.graph);
  }
  for (const std::string& warning : inputs.graph.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  inputs.auto_report = fg::autoeval::evaluate_metrics(inputs.graph, inputs.target, inputs.config);
  return inputs;
}

std::string auto_report_json(const fg::autoeval::AutoReport& report) {
  ordered_json doc;
  doc["target"] = report.target_identifier;
  doc["harvested_at"] = report.harvested_at;
  ordered_json results = ordered_json::array();
  for (const std::string& id : fg::registry::builtin_registry().automated_metric_ids()) {
    const auto& result = report.result(id);
    ordered_json r;
    r["metric"] = result.metric_id;
    r["status"] = fg::autoeval::status_name(result.status);
    r["evidence"] = result.evidence;
    r["checked_keys"] = result.checked_keys;
    results.push_back(std::move(r));
  }
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Hybrid FAIRness assessment and linked-data annotation"};
  app.require_subcommand(1);

  // ---- registry list ----
  auto* registry_cmd = app.add_subcommand("registry", "Inspect the indicator registry");
  registry_cmd->require_subcommand(1);
  auto* registry_list = registry_cmd->add_subcommand("list", "List all scoring indicators");
  bool registry_json = false;
  registry_list->add_flag("--json", registry_json, "Emit JSON");

  // ---- assess ----
  auto* assess = app.add_subcommand("assess", "Run FAIRness assessments");
  assess->require_subcommand(1);

  std::string target_spec, config_path, json_out, svg_out, answers_path, out_path, existing_path;
  std::vector<std::string> override_texts;
  std::string override_file;
  bool no_network = false, lenient = false, exclude_na = false, interactive = false, text_out = false;

  auto* assess_auto = assess->add_subcommand("auto", "Automated metric tests over a target");
  assess_auto->add_option("target", target_spec, "URL, fixture directory, or manifest file")->required();
  assess_auto->add_option("--config", config_path, "Evaluation config file");
  assess_auto->add_option("--json", json_out, "Write the automated report as JSON");
  assess_auto->add_flag("--no-network", no_network, "Forbid live fetches");

  auto* assess_manual = assess->add_subcommand("manual", "Manual maturity questionnaire");
  assess_manual->add_option("--answers", answers_path, "Answer file to validate");
  assess_manual->add_flag("--interactive", interactive, "Prompt for every manual indicator");
  assess_manual->add_option("--existing", existing_path, "Pre-fill prompts from this answer file");
  assess_manual->add_option("--out", out_path, "Where to write the collected answers");
  assess_manual->add_flag("--lenient", lenient, "Default missing answers to level 1");

  auto* assess_hybrid = assess->add_subcommand("hybrid", "Merged manual + automated scoring");
  assess_hybrid->add_option("target", target_spec, "URL, fixture directory, or manifest file")->required();
  assess_hybrid->add_option("--answers", answers_path, "Manual answer file")->required();
  assess_hybrid->add_option("--override", override_texts,
                            "Override an automated verdict: '<metric>=pass|fail: <justification>'");
  assess_hybrid->add_option("--override-file", override_file, "File with one override per line");
  assess_hybrid->add_option("--config", config_path, "Evaluation config file");
  assess_hybrid->add_option("--json", json_out, "Write the report as JSON");
  assess_hybrid->add_option("--svg", svg_out, "Write the maturity chart as SVG");
  assess_hybrid->add_flag("--text", text_out, "Print the text report (default when no output file given)");
  assess_hybrid->add_flag("--no-network", no_network, "Forbid live fetches");
  assess_hybrid->add_flag("--lenient", lenient, "Default missing answers to level 1");
  assess_hybrid->add_flag("--exclude-na", exclude_na, "Drop not-applicable indicators from both sides");

  // ---- annotate ----
  auto* annotate = app.add_subcommand("annotate", "Convert data to linked-data documents");
  annotate->require_subcommand(1);

  std::string csv_path, mapping_path, annotate_out, format = "jsonld", tree_path;
  auto* annotate_csv = annotate->add_subcommand("csv", "Annotate a CSV file row by row");
  annotate_csv->add_option("data", csv_path, "CSV file with a header row")->required();
  annotate_csv->add_option("--mapping", mapping_path, "Column binding spec")->required();
  annotate_csv->add_option("--out", annotate_out, "Output path (stdout when omitted)");
  annotate_csv->add_option("--format", format, "jsonld or nt")
      ->check(CLI::IsMember({"jsonld", "nt"}));

  auto* annotate_tree = annotate->add_subcommand("tree", "Annotate a decision tree");
  annotate_tree->add_option("tree", tree_path, "Native tree file")->required();
  annotate_tree->add_option("--out", annotate_out, "Output path (stdout when omitted)");
  annotate_tree->add_option("--format", format, "jsonld or nt")
      ->check(CLI::IsMember({"jsonld", "nt"}));

  // ---- tree eval ----
  auto* tree_cmd = app.add_subcommand("tree", "Decision tree tools");
  tree_cmd->require_subcommand(1);
  std::string features_text;
  auto* tree_eval = tree_cmd->add_subcommand("eval", "Evaluate a tree on a feature vector");
  tree_eval->add_option("tree", tree_path, "Native tree file or annotated .jsonld")->required();
  tree_eval->add_option("--features", features_text, "Comma-separated name=value pairs")->required();

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "Re-render a stored assessment report");
  std::string report_path;
  report_cmd->add_option("result", report_path, "Report JSON produced by assess hybrid")->required();
  report_cmd->add_option("--svg", svg_out, "Write the maturity chart as SVG");
  report_cmd->add_flag("--text", text_out, "Print the text report");

  app.failure_message(CLI::FailureMessage::help);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1, help exits 0
  }

  const fg::registry::Registry& reg = fg::registry::builtin_registry();

  if (registry_list->parsed()) {
    if (registry_json) {
      ordered_json list = ordered_json::array();
      for (const auto& ind : reg.indicators()) {
        ordered_json j;
        j["id"] = ind.id;
        j["partner"] = ind.dual_partner ? ordered_json(*ind.dual_partner) : ordered_json(nullptr);
        j["principle"] = ind.principle.sub;
        j["target"] = fg::registry::target_suffix(ind.target);
        j["mode"] = fg::registry::mode_name(ind.mode);
        j["description"] = ind.description;
        list.push_back(std::move(j));
      }
      std::cout << list.dump(2) << "\n";
    } else {
      for (const auto& ind : reg.indicators()) {
        std::string id = ind.id;
        if (ind.dual_partner) id += " / " + *ind.dual_partner;
        std::printf("%-28s %-5s %-3s %-14s %s\n", id.c_str(), ind.principle.sub.c_str(),
                    fg::registry::target_suffix(ind.target).c_str(), fg::registry::mode_name(ind.mode),
                    ind.description.c_str());
      }
    }
    return 0;
  }

  if (assess_auto->parsed()) {
    AssessInputs inputs = run_automated(target_spec, config_path, no_network);
    if (!json_out.empty()) write_file(json_out, auto_report_json(inputs.auto_report));
    for (const std::string& id : reg.automated_metric_ids()) {
      const auto& result = inputs.auto_report.result(id);
      std::printf("%-14s %-14s %s\n", result.metric_id.c_str(),
                  fg::autoeval::status_name(result.status),
                  result.evidence.empty() ? "" : result.evidence.front().c_str());
    }
    return 0;
  }

  if (assess_manual->parsed()) {
    if (interactive) {
      if (out_path.empty()) {
        std::cerr << "--interactive needs --out\n";
        return 1;
      }
      fg::manual::AnswerSet existing;
      const fg::manual::AnswerSet* existing_ptr = nullptr;
      if (!existing_path.empty()) {
        existing = fg::manual::parse_answers(existing_path);
        existing_ptr = &existing;
      }
      fg::manual::PromptIo io{std::cin, std::cerr};
      fg::manual::AnswerSet collected =
          fg::manual::interactive_fill(reg, existing_ptr, io, out_path + ".draft");
      write_file(out_path, fg::manual::serialize_answers(collected));
      std::cerr << collected.answers.size() << " answers written to " << out_path << "\n";
      return 0;
    }
    if (answers_path.empty()) {
      std::cerr << "give --answers <file> or --interactive\n";
      return 1;
    }
    fg::manual::AnswerSet answers = fg::manual::parse_answers(answers_path);
    fg::manual::Validation validation = fg::manual::validate_answers(answers, reg, !lenient);
    for (const auto& finding : validation.findings) {
      std::cerr << (finding.severity == fg::manual::Severity::Error ? "error: " : "warning: ")
                << finding.message << "\n";
    }
    std::cout << validation.effective.answers.size() << " manual answers valid\n";
    return validation.ok() ? 0 : 2;
  }

  if (assess_hybrid->parsed()) {
    AssessInputs inputs = run_automated(target_spec, config_path, no_network);

    fg::manual::AnswerSet answers = fg::manual::parse_answers(answers_path);
    fg::manual::Validation validation = fg::manual::validate_answers(answers, reg, !lenient);
    for (const auto& finding : validation.findings) {
      std::cerr << (finding.severity == fg::manual::Severity::Error ? "error: " : "warning: ")
                << finding.message << "\n";
    }
    if (!validation.ok()) return 2;

    std::vector<fg::hybrid::Override> overrides;
    for (const std::string& text : override_texts) {
      overrides.push_back(fg::hybrid::parse_override(text));
    }
    if (!override_file.empty()) {
      for (const std::string& raw : split(read_file(override_file), '\n')) {
        std::string line = trim(raw);
        if (line.empty() || line.starts_with("#")) continue;
        overrides.push_back(fg::hybrid::parse_override(line));
      }
    }

    auto outcomes = fg::hybrid::merge(validation.effective, inputs.auto_report, reg, overrides);
    fg::report::ReportDocument doc = fg::report::build_report(
        inputs.target.identifier, outcomes, reg, exclude_na, overrides, inputs.config.digest());

    if (!json_out.empty()) write_file(json_out, fg::report::render_json(doc));
    if (!svg_out.empty()) write_file(svg_out, fg::report::render_svg(doc));
    if (text_out || (json_out.empty() && svg_out.empty())) {
      std::cout << fg::report::render_text(doc);
    }
    return 0;
  }

  if (annotate_csv->parsed()) {
    fg::annotate::MappingSpec spec = fg::annotate::parse_mapping(mapping_path);
    for (const std::string& prop : fg::annotate::unregistered_properties(spec)) {
      std::cerr << "warning: " << prop << " is not in the embedded vocabulary\n";
    }
    fg::linked_data::LinkedDataDoc doc = fg::annotate::annotate_csv(csv_path, spec);
    std::string bytes = format == "nt" ? fg::linked_data::serialize_ntriples(doc)
                                       : fg::linked_data::serialize_jsonld(doc);
    if (annotate_out.empty()) {
      std::cout << bytes;
    } else {
      write_file(annotate_out, bytes);
    }
    return 0;
  }

  if (annotate_tree->parsed()) {
    fg::treemodel::DecisionTree tree = fg::treemodel::parse_tree(tree_path);
    fg::linked_data::LinkedDataDoc doc = fg::treemodel::annotate_tree(tree);
    std::string bytes = format == "nt" ? fg::linked_data::serialize_ntriples(doc)
                                       : fg::linked_data::serialize_jsonld(doc);
    if (annotate_out.empty()) {
      std::cout << bytes;
    } else {
      write_file(annotate_out, bytes);
    }
    return 0;
  }

  if (tree_eval->parsed()) {
    std::string text = read_file(tree_path);
    fg::treemodel::DecisionTree tree;
    if (text.find("\"@context\"") != std::string::npos || text.find("\"@graph\"") != std::string::npos) {
      tree = fg::treemodel::parse_annotated(fg::linked_data::parse_jsonld(text));
    } else {
      tree = fg::treemodel::parse_tree_text(text, tree_path);
    }
    fg::treemodel::FeatureVector features;
    for (const std::string& pair : split(features_text, ',')) {
      size_t eq = pair.find('=');
      if (eq == std::string::npos) {
        std::cerr << "features must be name=value pairs, got '" << pair << "'\n";
        return 1;
      }
      std::string value_text = trim(pair.substr(eq + 1));
      char* end = nullptr;
      double value = std::strtod(value_text.c_str(), &end);
      if (value_text.empty() || end != value_text.c_str() + value_text.size()) {
        std::cerr << "feature value is not a number: '" << pair << "'\n";
        return 1;
      }
      features[trim(pair.substr(0, eq))] = value;
    }
    std::cout << fg::treemodel::evaluate(tree, features) << "\n";
    return 0;
  }

  if (report_cmd->parsed()) {
    fg::report::ReportDocument doc = fg::report::parse_report(read_file(report_path));
    if (!svg_out.empty()) write_file(svg_out, fg::report::render_svg(doc));
    if (text_out || svg_out.empty()) std::cout << fg::report::render_text(doc);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
