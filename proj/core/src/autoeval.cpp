#include "fairgauge/autoeval.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "fairgauge/errors.hpp"
#include "fairgauge/registry.hpp"
#include "util.hpp"

namespace fairgauge::autoeval {

using harvest::AssessmentTarget;
using harvest::MetadataGraph;
using nlohmann::json;
namespace keys = harvest::keys;

namespace {

bool list_contains_iri(const std::vector<std::string>& list, std::string_view iri) {
  std::string n = util::normalize_iri(iri);
  return std::any_of(list.begin(), list.end(),
                     [&](const std::string& entry) { return util::normalize_iri(entry) == n; });
}

bool locator_is_standard(const std::string& locator) {
  size_t scheme_end = locator.find("://");
  if (scheme_end == std::string::npos) return true;  // fixture-relative path
  std::string scheme = util::lowercase(locator.substr(0, scheme_end));
  return scheme == "https" || scheme == "http" || scheme == "ftp";
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

struct RuleContext {
  const MetadataGraph& graph;
  const AssessmentTarget& target;
  const EvalConfig& config;
};

struct Verdict {
  MetricStatus status;
  std::vector<std::string> evidence;
  std::vector<std::string> checked_keys;
};

Verdict check_unique_identifier(const RuleContext& ctx) {
  auto cls = harvest::classify_identifier(ctx.target.identifier, ctx.config.pid_prefixes);
  Verdict v{cls.globally_unique ? MetricStatus::Pass : MetricStatus::Fail, {}, {"identifier"}};
  v.evidence.push_back(std::string("identifier scheme: ") + harvest::scheme_name(cls.scheme));
  return v;
}

Verdict check_persistent_identifier(const RuleContext& ctx) {
  auto cls = harvest::classify_identifier(ctx.target.identifier, ctx.config.pid_prefixes);
  Verdict v{cls.persistent ? MetricStatus::Pass : MetricStatus::Fail, {}, {"identifier"}};
  if (cls.persistent) {
    v.evidence.push_back(std::string("persistent identifier scheme: ") + harvest::scheme_name(cls.scheme));
  } else {
    v.evidence.push_back(std::string("not a persistent identifier scheme: ") + harvest::scheme_name(cls.scheme));
  }
  return v;
}

Verdict check_core_elements(const RuleContext& ctx) {
  static const std::vector<std::string> core = {"identifier", "title",       "creator",     "publisher",
                                                "publication_date", "resource_type", "description", "keywords"};
  std::vector<std::string> missing;
  size_t present = 0;
  for (const std::string& key : core) {
    if (ctx.graph.has_key(key)) {
      ++present;
    } else {
      missing.push_back(key);
    }
  }
  MetricStatus status = present == core.size() ? MetricStatus::Pass
                        : present >= 4         ? MetricStatus::Partial
                                               : MetricStatus::Fail;
  Verdict v{status, {}, core};
  v.evidence.push_back(std::to_string(present) + "/8 core descriptive elements present");
  if (!missing.empty()) v.evidence.push_back("missing: " + join(missing, ", "));
  return v;
}

Verdict check_data_identifier_in_metadata(const RuleContext& ctx) {
  size_t locators = ctx.graph.count_key(keys::file_locator) + ctx.graph.count_key(keys::file_pid);
  Verdict v{locators > 0 ? MetricStatus::Pass : MetricStatus::Fail,
            {},
            {std::string(keys::file_locator), std::string(keys::file_pid)}};
  v.evidence.push_back(locators > 0
                           ? std::to_string(locators) + " data content locator(s) found in metadata"
                           : "metadata carries no locator or PID for the data content");
  return v;
}

Verdict harvestable_formats(const RuleContext& ctx, const std::set<std::string>& wanted,
                            const char* what) {
  std::vector<std::string> found;
  for (const std::string& format : ctx.graph.formats) {
    if (wanted.count(format)) found.push_back(format);
  }
  Verdict v{found.empty() ? MetricStatus::Fail : MetricStatus::Pass, {}, {}};
  v.evidence.push_back(found.empty() ? std::string("no ") + what + " found"
                                     : std::string(what) + ": " + join(found, ", "));
  return v;
}

Verdict check_access_level(const RuleContext& ctx) {
  static const std::vector<std::string> levels = {"open", "embargoed", "restricted", "closed"};
  Verdict v{MetricStatus::Fail, {}, {"access_level"}};
  auto value = ctx.graph.first_value(keys::access_level);
  if (!value) {
    v.evidence.push_back("no access level specified in metadata");
    return v;
  }
  std::string lower = util::lowercase(*value);
  for (const std::string& level : levels) {
    if (lower.find(level) != std::string::npos) {
      v.status = MetricStatus::Pass;
      v.evidence.push_back("access level: " + level);
      return v;
    }
  }
  v.evidence.push_back("access level '" + *value + "' not recognized");
  return v;
}

Verdict check_metadata_protocol(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail, {}, {"identifier"}};
  if (ctx.target.kind == harvest::TargetKind::LiveUrl) {
    size_t scheme_end = ctx.target.identifier.find("://");
    std::string scheme =
        scheme_end == std::string::npos ? "" : util::lowercase(ctx.target.identifier.substr(0, scheme_end));
    if (scheme == "https" || scheme == "http" || scheme == "ftp") {
      v.status = MetricStatus::Pass;
      v.evidence.push_back("standard protocol for metadata access: " + scheme);
    } else {
      v.evidence.push_back("nonstandard metadata access scheme: " + scheme);
    }
    return v;
  }
  if (ctx.target.kind == harvest::TargetKind::ManifestFile) {
    v.evidence.push_back("manifest targets carry no metadata location");
    return v;
  }
  bool landing = std::filesystem::exists(ctx.target.root / "landing.html");
  v.status = landing ? MetricStatus::Pass : MetricStatus::Fail;
  v.evidence.push_back(landing ? "landing page present (stands for a standard-protocol page)"
                               : "no landing page in fixture");
  return v;
}

Verdict check_data_protocol(const RuleContext& ctx) {
  Verdict v{MetricStatus::NotApplicable, {}, {"file.locator"}};
  if (ctx.target.data_files.empty()) {
    v.evidence.push_back("no data files known");
    return v;
  }
  for (const harvest::DataFile& file : ctx.target.data_files) {
    if (!locator_is_standard(file.locator)) {
      v.status = MetricStatus::Fail;
      v.evidence.push_back("nonstandard access scheme for " + file.locator);
      return v;
    }
  }
  v.status = MetricStatus::Pass;
  v.evidence.push_back(std::to_string(ctx.target.data_files.size()) +
                       " data file(s) reachable over standard protocols");
  return v;
}

Verdict check_metadata_preservation(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail, {}, {"preservation_policy", "publisher"}};
  if (ctx.graph.has_key(keys::preservation_policy)) {
    v.status = MetricStatus::Pass;
    v.evidence.push_back("preservation policy stated in metadata");
    return v;
  }
  std::vector<std::string> publishers = ctx.graph.values(keys::publisher);
  if (ctx.target.publisher_hint) publishers.push_back(*ctx.target.publisher_hint);
  for (const std::string& publisher : publishers) {
    std::string lower = util::lowercase(publisher);
    for (const std::string& trusted : ctx.config.trusted_repositories) {
      if (lower.find(util::lowercase(trusted)) != std::string::npos) {
        v.status = MetricStatus::Pass;
        v.evidence.push_back("publisher '" + publisher + "' is a trusted repository");
        return v;
      }
    }
  }
  v.evidence.push_back("no preservation guarantee: no policy and publisher not in trusted list");
  return v;
}

Verdict check_semantic_resources(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail, {}, {}};
  std::vector<std::string> hits;
  for (const std::string& ns : ctx.graph.namespaces) {
    if (list_contains_iri(ctx.config.known_semantic_resources, ns)) hits.push_back(ns);
  }
  if (!hits.empty()) {
    v.status = MetricStatus::Pass;
    v.evidence.push_back("semantic resource namespaces: " + join(hits, ", "));
  } else {
    v.evidence.push_back("no known semantic resource namespace found in metadata");
  }
  return v;
}

Verdict check_related_resources(const RuleContext& ctx) {
  size_t n = ctx.graph.count_key(keys::related);
  Verdict v{n > 0 ? MetricStatus::Pass : MetricStatus::Fail, {}, {"related"}};
  v.evidence.push_back(n > 0 ? std::to_string(n) + " related resource reference(s) found"
                             : "no related resource retrieved from metadata");
  return v;
}

Verdict check_content_described(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail, {}, {"description", "file.locator", "file.media_type"}};
  const auto& files = ctx.target.data_files;
  bool described = ctx.graph.has_key(keys::description);
  bool all_media = true;
  bool all_full = true;
  for (const harvest::DataFile& file : files) {
    if (!file.media_type) all_media = false;
    if (!file.media_type || !file.declared_size || !file.checksum) all_full = false;
  }
  if (described && all_full) {
    v.status = MetricStatus::Pass;
    v.evidence.push_back("content described; all data files carry size, media type and checksum");
    return v;
  }
  if (!files.empty() && all_media && !all_full) {
    v.status = MetricStatus::Partial;
    v.evidence.push_back("media types known for all files, but size or checksum missing");
    return v;
  }
  v.evidence.push_back(described ? "technical file properties missing from metadata"
                                 : "no dataset-level description of the data content");
  return v;
}

Verdict check_license(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail, {}, {"license"}};
  std::vector<std::string> licenses = ctx.graph.values(keys::license);
  if (licenses.empty()) {
    v.evidence.push_back("license information unavailable in metadata");
    return v;
  }
  for (const std::string& license : licenses) {
    std::string norm = util::normalize_iri(license);
    for (const std::string& entry : ctx.config.license_registry) {
      std::string entry_norm = util::normalize_iri(entry);
      if (norm == entry_norm || norm.starts_with(entry_norm + "/") || util::iequals(license, entry)) {
        v.status = MetricStatus::Pass;
        v.evidence.push_back("recognized license: " + license);
        return v;
      }
    }
  }
  v.status = MetricStatus::Partial;
  v.evidence.push_back("license stated but not machine-recognizable: " + licenses.front());
  return v;
}

Verdict check_provenance(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail,
            {},
            {"provenance.*", "creator", "publication_date", "publisher"}};
  for (const std::string& ns : ctx.graph.namespaces) {
    std::string n = util::normalize_iri(ns);
    if (n == "w3.org/ns/prov" || n == "purl.org/pav") {
      v.status = MetricStatus::Pass;
      v.evidence.push_back("formal provenance vocabulary in metadata: " + ns);
      return v;
    }
  }
  bool basic = ctx.graph.has_key(keys::creator) || ctx.graph.has_key(keys::publication_date) ||
               ctx.graph.has_key(keys::publisher) || ctx.graph.has_key_prefix("provenance.");
  if (basic) {
    v.status = MetricStatus::Partial;
    v.evidence.push_back("basic provenance only (creator/date/publisher); no PROV-O or PAV namespace");
  } else {
    v.evidence.push_back("no provenance information in metadata");
  }
  return v;
}

Verdict check_community_standard(const RuleContext& ctx) {
  Verdict v{MetricStatus::Fail, {}, {"schema_id"}};
  std::vector<std::string> hits;
  for (const std::string& id : ctx.graph.schema_ids) {
    for (const std::string& std_id : ctx.config.community_standards) {
      if (util::iequals(id, std_id)) hits.push_back(id);
    }
  }
  if (!hits.empty()) {
    v.status = MetricStatus::Pass;
    v.evidence.push_back("community metadata standard(s): " + join(hits, ", "));
  } else {
    v.evidence.push_back("no community-endorsed metadata standard detected");
  }
  return v;
}

Verdict check_open_file_formats(const RuleContext& ctx) {
  Verdict v{MetricStatus::NotApplicable, {}, {"file.media_type"}};
  if (ctx.target.data_files.empty()) {
    v.evidence.push_back("no data files known");
    return v;
  }
  for (const harvest::DataFile& file : ctx.target.data_files) {
    std::string label = file.format_label.value_or("");
    if (label.empty() && file.media_type) label = *file.media_type;
    bool open = false;
    for (const std::string& fmt : ctx.config.open_formats) {
      if (util::iequals(label, fmt)) open = true;
    }
    if (!open) {
      v.status = MetricStatus::Fail;
      v.evidence.push_back("file format not in the open list: " + file.locator +
                           (label.empty() ? " (unknown format)" : " (" + label + ")"));
      return v;
    }
  }
  v.status = MetricStatus::Pass;
  v.evidence.push_back("all data files use open, machine-understandable formats");
  return v;
}

using Rule = Verdict (*)(const RuleContext&);

const std::vector<std::pair<const char*, Rule>>& rule_table() {
  static const std::vector<std::pair<const char*, Rule>> rules = {
      {"FsF-F1-01D", check_unique_identifier},
      {"FsF-F1-02D", check_persistent_identifier},
      {"FsF-F2-01M", check_core_elements},
      {"FsF-F3-01M", check_data_identifier_in_metadata},
      {"FsF-F4-01M",
       [](const RuleContext& ctx) {
         return harvestable_formats(ctx, {"json-ld", "turtle", "rdf-xml", "dc-xml"},
                                    "machine-harvestable metadata format");
       }},
      {"FsF-A1-01M", check_access_level},
      {"FsF-A1-02M", check_metadata_protocol},
      {"FsF-A1-03D", check_data_protocol},
      {"FsF-A2-01M", check_metadata_preservation},
      {"FsF-I1-01M",
       [](const RuleContext& ctx) {
         return harvestable_formats(ctx, {"json-ld", "turtle", "rdf-xml"},
                                    "formal knowledge representation language");
       }},
      {"FsF-I1-02M", check_semantic_resources},
      {"FsF-I3-01M", check_related_resources},
      {"FsF-R1-01MD", check_content_described},
      {"FsF-R1.1-01M", check_license},
      {"FsF-R1.2-01M", check_provenance},
      {"FsF-R1.3-01M", check_community_standard},
      {"FsF-R1.3-02D", check_open_file_formats},
  };
  return rules;
}

}  // namespace

const MetricResult& AutoReport::result(const std::string& metric_id) const {
  auto it = results.find(metric_id);
  if (it == results.end()) fail(Errc::UnknownIndicator, "no automated result for " + metric_id);
  return it->second;
}

AutoReport evaluate_metrics(const MetadataGraph& graph, const AssessmentTarget& target,
                            const EvalConfig& config) {
  AutoReport report;
  report.target_identifier = target.identifier;
  report.harvested_at = util::iso8601_now();
  RuleContext ctx{graph, target, config};
  for (const auto& [metric_id, rule] : rule_table()) {
    Verdict verdict = rule(ctx);
    MetricResult result;
    result.metric_id = metric_id;
    result.status = verdict.status;
    result.evidence = std::move(verdict.evidence);
    result.checked_keys = std::move(verdict.checked_keys);
    report.results.emplace(metric_id, std::move(result));
  }
  return report;
}

EvalConfig EvalConfig::defaults() {
  EvalConfig config;
  config.trusted_repositories = {"zenodo",   "figshare", "dryad",
                                 "dataverse", "osf",      "b2share", "software heritage"};
  config.known_semantic_resources = {
      "http://www.w3.org/ns/prov#",
      "http://purl.org/pav/",
      "http://qudt.org/schema/qudt/",
      "http://www.w3.org/2004/02/skos/core#",
      "http://www.w3.org/ns/dcat#",
      "http://purl.org/dc/terms/",
      "http://www.w3.org/2002/07/owl#",
      "https://github.com/HPC-FAIR/HPC-Ontology#",
  };
  config.license_registry = {
      "CC-BY-4.0",
      "CC-BY-SA-4.0",
      "CC0-1.0",
      "CC-BY-3.0",
      "MIT",
      "Apache-2.0",
      "BSD-3-Clause",
      "GPL-3.0-only",
      "LGPL-3.0-only",
      "https://creativecommons.org/licenses/by/4.0",
      "https://creativecommons.org/licenses/by-sa/4.0",
      "https://creativecommons.org/publicdomain/zero/1.0",
      "https://opensource.org/licenses/MIT",
      "https://www.apache.org/licenses/LICENSE-2.0",
  };
  config.community_standards = {"hpc-ontology", "ddi", "cf-conventions", "darwin-core", "miame"};
  config.open_formats = {"csv",  "json",       "json-ld", "turtle", "n-triples",
                         "plain text", "hdf5", "netcdf",  "tsv",    "xml"};
  return config;
}

EvalConfig EvalConfig::load(const std::filesystem::path& path) {
  EvalConfig config = defaults();
  json doc = json::parse(util::read_file(path.string()));
  if (!doc.is_object()) fail(Errc::TargetUnreadable, "eval config must be a JSON object of string lists");
  auto read_list = [&](const char* key, std::vector<std::string>& into) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_array()) fail(Errc::TargetUnreadable, std::string("config key ") + key + " must be a list");
    into.clear();
    for (const auto& item : doc[key]) into.push_back(item.get<std::string>());
  };
  read_list("trusted_repositories", config.trusted_repositories);
  read_list("known_semantic_resources", config.known_semantic_resources);
  read_list("license_registry", config.license_registry);
  read_list("community_standards", config.community_standards);
  read_list("open_formats", config.open_formats);
  for (const auto& [key, value] : doc.items()) {
    if (key.starts_with("pid_prefix_") && value.is_array()) {
      std::vector<std::string> prefixes;
      for (const auto& item : value) prefixes.push_back(item.get<std::string>());
      config.pid_prefixes[key.substr(11)] = std::move(prefixes);
    }
  }
  return config;
}

std::string EvalConfig::digest() const {
  json doc;
  doc["trusted_repositories"] = trusted_repositories;
  doc["known_semantic_resources"] = known_semantic_resources;
  doc["license_registry"] = license_registry;
  doc["community_standards"] = community_standards;
  doc["open_formats"] = open_formats;
  for (const auto& [scheme, prefixes] : pid_prefixes) doc["pid_prefix_" + scheme] = prefixes;
  return util::hex64(util::fnv1a(doc.dump()));
}

const char* status_name(MetricStatus status) {
  switch (status) {
    case MetricStatus::Pass: return "Pass";
    case MetricStatus::Partial: return "Partial";
    case MetricStatus::Fail: return "Fail";
    case MetricStatus::NotApplicable: return "NotApplicable";
  }
  return "Fail";
}

MetricStatus status_from_name(std::string_view name) {
  if (util::iequals(name, "Pass")) return MetricStatus::Pass;
  if (util::iequals(name, "Partial")) return MetricStatus::Partial;
  if (util::iequals(name, "Fail")) return MetricStatus::Fail;
  if (util::iequals(name, "NotApplicable") || util::iequals(name, "NA")) return MetricStatus::NotApplicable;
  fail(Errc::InvalidReport, "unknown metric status '" + std::string(name) + "'");
}

}  // namespace fairgauge::autoeval
