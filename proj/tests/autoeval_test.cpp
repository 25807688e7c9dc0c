#include "fairgauge/autoeval.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "fairgauge/registry.hpp"
#include "support/temp_dir.hpp"

using namespace fairgauge;
using autoeval::EvalConfig;
using autoeval::evaluate_metrics;
using autoeval::MetricStatus;
using harvest::AssessmentTarget;
using harvest::Channel;
using harvest::MetadataGraph;
using testsupport::TempDir;

namespace {

AssessmentTarget fixture_target(const char* name) {
  return harvest::load_target((std::filesystem::path(FAIRGAUGE_FIXTURES_DIR) / name).string());
}

MetadataGraph fixture_graph(const char* name) { return harvest::harvest(fixture_target(name)); }

AssessmentTarget bare_target(const std::string& identifier) {
  AssessmentTarget t;
  t.identifier = identifier;
  t.kind = harvest::TargetKind::FixtureDir;
  return t;
}

void put(MetadataGraph& g, std::string key, std::string value) {
  g.statements.push_back({std::move(key), std::move(value), Channel::SidecarRecord});
}

}  // namespace

TEST_CASE("empty graph still yields all 17 results") {
  MetadataGraph graph;
  auto report = evaluate_metrics(graph, bare_target("x"), EvalConfig::defaults());
  CHECK(report.results.size() == 17);
  for (const std::string& id : registry::builtin_registry().automated_metric_ids()) {
    CHECK(report.results.count(id) == 1);
  }
  CHECK(report.result("FsF-A1-03D").status == MetricStatus::NotApplicable);
  CHECK(report.result("FsF-R1.3-02D").status == MetricStatus::NotApplicable);
  CHECK(report.result("FsF-F2-01M").status == MetricStatus::Fail);
}

TEST_CASE("identifier metrics follow the classification") {
  MetadataGraph graph;
  auto cfg = EvalConfig::defaults();

  auto url = evaluate_metrics(graph, bare_target("https://github.com/AndrewXu22/optimal_unified_memory"), cfg);
  CHECK(url.result("FsF-F1-01D").status == MetricStatus::Pass);
  CHECK(url.result("FsF-F1-02D").status == MetricStatus::Fail);

  auto doi = evaluate_metrics(graph, bare_target("https://doi.org/10.5281/zenodo.5149586"), cfg);
  CHECK(doi.result("FsF-F1-02D").status == MetricStatus::Pass);

  auto junk = evaluate_metrics(graph, bare_target("not a uri"), cfg);
  CHECK(junk.result("FsF-F1-01D").status == MetricStatus::Fail);
}

TEST_CASE("core element counting: pass at 8, partial at 4, fail below") {
  auto cfg = EvalConfig::defaults();
  auto target = bare_target("x");
  const char* core[] = {"identifier", "title",       "creator",     "publisher",
                        "publication_date", "resource_type", "description", "keywords"};

  MetadataGraph graph;
  for (int i = 0; i < 8; ++i) {
    put(graph, core[i], "v");
    auto report = evaluate_metrics(graph, target, cfg);
    auto status = report.result("FsF-F2-01M").status;
    if (i + 1 == 8) {
      CHECK(status == MetricStatus::Pass);
    } else if (i + 1 >= 4) {
      CHECK(status == MetricStatus::Partial);
    } else {
      CHECK(status == MetricStatus::Fail);
    }
  }
}

TEST_CASE("adding a core element never lowers the F2 status") {
  auto cfg = EvalConfig::defaults();
  auto target = bare_target("x");
  auto rank = [](MetricStatus s) {
    switch (s) {
      case MetricStatus::Pass: return 3;
      case MetricStatus::Partial: return 2;
      default: return 1;
    }
  };
  std::mt19937 rng(7);
  const char* core[] = {"identifier", "title",       "creator",     "publisher",
                        "publication_date", "resource_type", "description", "keywords"};
  for (int trial = 0; trial < 20; ++trial) {
    MetadataGraph graph;
    int n = static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) put(graph, core[i], "v");
    auto before = evaluate_metrics(graph, target, cfg).result("FsF-F2-01M").status;
    put(graph, core[n], "v");
    auto after = evaluate_metrics(graph, target, cfg).result("FsF-F2-01M").status;
    CHECK(rank(after) >= rank(before));
  }
}

TEST_CASE("license recognition: pass, partial, fail") {
  auto cfg = EvalConfig::defaults();
  auto target = bare_target("x");

  MetadataGraph none;
  CHECK(evaluate_metrics(none, target, cfg).result("FsF-R1.1-01M").status == MetricStatus::Fail);

  MetadataGraph spdx;
  put(spdx, "license", "CC-BY-4.0");
  CHECK(evaluate_metrics(spdx, target, cfg).result("FsF-R1.1-01M").status == MetricStatus::Pass);

  MetadataGraph iri;
  put(iri, "license", "https://creativecommons.org/licenses/by/4.0/legalcode");
  CHECK(evaluate_metrics(iri, target, cfg).result("FsF-R1.1-01M").status == MetricStatus::Pass);

  MetadataGraph odd;
  put(odd, "license", "my own terms, see LICENSE.txt");
  CHECK(evaluate_metrics(odd, target, cfg).result("FsF-R1.1-01M").status == MetricStatus::Partial);
}

TEST_CASE("adding a recognized license never breaks an R1.1 pass") {
  auto cfg = EvalConfig::defaults();
  auto target = bare_target("x");
  MetadataGraph graph;
  put(graph, "license", "CC-BY-4.0");
  REQUIRE(evaluate_metrics(graph, target, cfg).result("FsF-R1.1-01M").status == MetricStatus::Pass);
  put(graph, "license", "unrecognized words");
  CHECK(evaluate_metrics(graph, target, cfg).result("FsF-R1.1-01M").status == MetricStatus::Pass);
}

TEST_CASE("provenance: PROV namespace passes, basic keys are partial") {
  auto cfg = EvalConfig::defaults();
  auto target = bare_target("x");

  MetadataGraph basic;
  put(basic, "creator", "a");
  put(basic, "publisher", "b");
  put(basic, "publication_date", "2021-07-29");
  CHECK(evaluate_metrics(basic, target, cfg).result("FsF-R1.2-01M").status == MetricStatus::Partial);

  MetadataGraph prov = basic;
  prov.namespaces.insert("http://www.w3.org/ns/prov#");
  CHECK(evaluate_metrics(prov, target, cfg).result("FsF-R1.2-01M").status == MetricStatus::Pass);

  MetadataGraph nothing;
  CHECK(evaluate_metrics(nothing, target, cfg).result("FsF-R1.2-01M").status == MetricStatus::Fail);
}

TEST_CASE("semantic resources exclude the generic web vocabulary") {
  auto cfg = EvalConfig::defaults();
  auto target = bare_target("x");

  MetadataGraph generic;
  generic.namespaces.insert("https://schema.org/");
  CHECK(evaluate_metrics(generic, target, cfg).result("FsF-I1-02M").status == MetricStatus::Fail);

  MetadataGraph qudt;
  qudt.namespaces.insert("http://qudt.org/schema/qudt/");
  CHECK(evaluate_metrics(qudt, target, cfg).result("FsF-I1-02M").status == MetricStatus::Pass);
}

TEST_CASE("file-format and protocol checks react to data files") {
  auto cfg = EvalConfig::defaults();
  MetadataGraph graph;

  AssessmentTarget target = bare_target("x");
  harvest::DataFile csv;
  csv.locator = "data/things.csv";
  csv.format_label = "csv";
  target.data_files.push_back(csv);

  auto report = evaluate_metrics(graph, target, cfg);
  CHECK(report.result("FsF-A1-03D").status == MetricStatus::Pass);
  CHECK(report.result("FsF-R1.3-02D").status == MetricStatus::Pass);

  harvest::DataFile weird;
  weird.locator = "s3://bucket/blob.bin";
  target.data_files.push_back(weird);
  report = evaluate_metrics(graph, target, cfg);
  CHECK(report.result("FsF-A1-03D").status == MetricStatus::Fail);
  CHECK(report.result("FsF-R1.3-02D").status == MetricStatus::Fail);
}

TEST_CASE("technical file properties: pass needs size+type+checksum+description") {
  auto cfg = EvalConfig::defaults();
  AssessmentTarget target = bare_target("x");
  harvest::DataFile file;
  file.locator = "a.csv";
  file.media_type = "text/csv";
  target.data_files.push_back(file);

  MetadataGraph graph;
  put(graph, "description", "what the data is");
  CHECK(evaluate_metrics(graph, target, cfg).result("FsF-R1-01MD").status == MetricStatus::Partial);

  target.data_files[0].declared_size = 10;
  target.data_files[0].checksum = harvest::Checksum{"sha256", "00ff"};
  CHECK(evaluate_metrics(graph, target, cfg).result("FsF-R1-01MD").status == MetricStatus::Pass);

  MetadataGraph undescribed;
  target.data_files[0].checksum.reset();
  CHECK(evaluate_metrics(undescribed, target, cfg).result("FsF-R1-01MD").status == MetricStatus::Partial);
}

TEST_CASE("trusted repository stands in for a preservation policy") {
  auto cfg = EvalConfig::defaults();
  MetadataGraph graph;
  AssessmentTarget target = bare_target("x");
  CHECK(evaluate_metrics(graph, target, cfg).result("FsF-A2-01M").status == MetricStatus::Fail);

  target.publisher_hint = "Zenodo";
  CHECK(evaluate_metrics(graph, target, cfg).result("FsF-A2-01M").status == MetricStatus::Pass);

  MetadataGraph policy;
  put(policy, "preservation_policy", "kept for 20 years");
  CHECK(evaluate_metrics(policy, bare_target("x"), cfg).result("FsF-A2-01M").status == MetricStatus::Pass);
}

TEST_CASE("determinism: identical inputs give identical reports") {
  auto graph = fixture_graph("xplacer-post");
  auto target = fixture_target("xplacer-post");
  auto cfg = EvalConfig::defaults();
  auto a = evaluate_metrics(graph, target, cfg);
  auto b = evaluate_metrics(graph, target, cfg);
  REQUIRE(a.results.size() == b.results.size());
  for (const auto& [id, result] : a.results) {
    CHECK(b.result(id).status == result.status);
    CHECK(b.result(id).evidence == result.evidence);
    CHECK(b.result(id).checked_keys == result.checked_keys);
  }
}

TEST_CASE("post fixture verdicts match the final-assessment narrative") {
  auto report = evaluate_metrics(fixture_graph("xplacer-post"), fixture_target("xplacer-post"),
                                 EvalConfig::defaults());
  CHECK(report.result("FsF-F1-01D").status == MetricStatus::Pass);
  CHECK(report.result("FsF-F1-02D").status == MetricStatus::Pass);
  CHECK(report.result("FsF-F2-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-F3-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-F4-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-A1-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-A1-02M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-A1-03D").status == MetricStatus::Pass);
  CHECK(report.result("FsF-A2-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-I1-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-I1-02M").status == MetricStatus::Fail);
  CHECK(report.result("FsF-I3-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-R1-01MD").status == MetricStatus::Pass);
  CHECK(report.result("FsF-R1.1-01M").status == MetricStatus::Pass);
  CHECK(report.result("FsF-R1.2-01M").status == MetricStatus::Partial);
  CHECK(report.result("FsF-R1.3-01M").status == MetricStatus::Fail);
  CHECK(report.result("FsF-R1.3-02D").status == MetricStatus::Pass);
}

TEST_CASE("pre fixture verdicts match the initial-assessment narrative") {
  auto report = evaluate_metrics(fixture_graph("xplacer-pre"), fixture_target("xplacer-pre"),
                                 EvalConfig::defaults());
  CHECK(report.result("FsF-F1-01D").status == MetricStatus::Pass);
  CHECK(report.result("FsF-F1-02D").status == MetricStatus::Fail);
  CHECK(report.result("FsF-R1.1-01M").status == MetricStatus::Fail);
  CHECK(report.result("FsF-I1-01M").status == MetricStatus::Fail);
  CHECK(report.result("FsF-F2-01M").status != MetricStatus::Pass);
}

TEST_CASE("every rule reports only keys in its checked list") {
  auto report = evaluate_metrics(fixture_graph("xplacer-post"), fixture_target("xplacer-post"),
                                 EvalConfig::defaults());
  // spot-check a few rules' checked-key contracts
  auto f2 = report.result("FsF-F2-01M").checked_keys;
  CHECK(std::find(f2.begin(), f2.end(), "title") != f2.end());
  auto r11 = report.result("FsF-R1.1-01M").checked_keys;
  CHECK(r11 == std::vector<std::string>{"license"});
}

TEST_CASE("config file overrides replace individual lists") {
  TempDir dir;
  auto path = dir.write("config.json", R"({"trusted_repositories": ["my-archive"]})");
  auto cfg = EvalConfig::load(path);
  CHECK(cfg.trusted_repositories == std::vector<std::string>{"my-archive"});
  CHECK(cfg.license_registry == EvalConfig::defaults().license_registry);
  CHECK(cfg.digest() != EvalConfig::defaults().digest());
}
