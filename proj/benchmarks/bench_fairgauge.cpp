#include <benchmark/benchmark.h>

#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "fairgauge/annotate.hpp"
#include "fairgauge/autoeval.hpp"
#include "fairgauge/harvest.hpp"
#include "fairgauge/hybrid.hpp"
#include "fairgauge/manual.hpp"
#include "fairgauge/registry.hpp"
#include "fairgauge/treemodel.hpp"

using namespace fairgauge;
namespace fs = std::filesystem;

namespace {

fs::path fixture(const char* name) { return fs::path(FAIRGAUGE_FIXTURES_DIR) / name; }

manual::AnswerSet full_answers() {
  manual::AnswerSet set;
  for (const auto& ind : registry::builtin_registry().indicators()) {
    if (ind.mode == registry::Mode::ManualOnly) {
      set.answers[ind.id] = {manual::MaturityLevel::FullyImplemented, ""};
    }
  }
  return set;
}

std::string synthetic_csv(size_t rows) {
  std::string csv = "Variant,commandLineOption,DataSize,ArrayID,GPUPagePault,HtoD\n";
  for (size_t r = 0; r < rows; ++r) {
    csv += "111100,graph1MW.6," + std::to_string(1000000 + r) + "," + std::to_string(r % 8) + "," +
           std::to_string(r % 13) + "," + std::to_string(100.0 + static_cast<double>(r)) + "\n";
  }
  return csv;
}

treemodel::DecisionTree synthetic_tree(int depth) {
  treemodel::DecisionTree tree;
  tree.name = "bench";
  tree.root = "n0";
  size_t next = 0;
  std::mt19937 rng(99);
  std::function<std::string(int)> grow = [&](int level) {
    std::string id = "n" + std::to_string(next++);
    treemodel::TreeNode node;
    node.id = id;
    node.level = level;
    if (level >= depth) {
      node.data = treemodel::LeafNode{std::to_string(rng() % 7)};
      tree.nodes[id] = node;
      return id;
    }
    treemodel::InternalNode internal;
    internal.feature = "f" + std::to_string(rng() % 10);
    internal.threshold = static_cast<double>(rng() % 1000) / 10.0;
    tree.nodes[id] = node;
    internal.true_child = grow(level + 1);
    internal.false_child = grow(level + 1);
    tree.nodes[id].data = internal;
    return id;
  };
  grow(0);
  return tree;
}

}  // namespace

static void BM_HarvestFixture(benchmark::State& state) {
  auto target = harvest::load_target(fixture("xplacer-post").string());
  for (auto _ : state) {
    benchmark::DoNotOptimize(harvest::harvest(target));
  }
}
BENCHMARK(BM_HarvestFixture);

static void BM_EvaluateMetrics(benchmark::State& state) {
  auto target = harvest::load_target(fixture("xplacer-post").string());
  auto graph = harvest::harvest(target);
  auto config = autoeval::EvalConfig::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(autoeval::evaluate_metrics(graph, target, config));
  }
}
BENCHMARK(BM_EvaluateMetrics);

static void BM_MergeAndScore(benchmark::State& state) {
  const auto& reg = registry::builtin_registry();
  auto target = harvest::load_target(fixture("xplacer-post").string());
  auto graph = harvest::harvest(target);
  auto report = autoeval::evaluate_metrics(graph, target, autoeval::EvalConfig::defaults());
  auto answers = full_answers();
  for (auto _ : state) {
    auto outcomes = hybrid::merge(answers, report, reg, {});
    benchmark::DoNotOptimize(hybrid::compute_score(outcomes, reg, false));
  }
}
BENCHMARK(BM_MergeAndScore);

static void BM_AnnotateCsv(benchmark::State& state) {
  auto spec = annotate::parse_mapping(fixture("listing1") / "mapping.json");
  std::string csv = synthetic_csv(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(annotate::annotate_csv_text(csv, spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AnnotateCsv)->Arg(10)->Arg(100)->Arg(1000);

static void BM_SerializeJsonld(benchmark::State& state) {
  auto spec = annotate::parse_mapping(fixture("listing1") / "mapping.json");
  auto doc = annotate::annotate_csv_text(synthetic_csv(static_cast<size_t>(state.range(0))), spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linked_data::serialize_jsonld(doc));
  }
}
BENCHMARK(BM_SerializeJsonld)->Arg(100)->Arg(1000);

static void BM_TreeEvaluate(benchmark::State& state) {
  auto tree = synthetic_tree(static_cast<int>(state.range(0)));
  treemodel::FeatureVector features;
  for (int f = 0; f < 10; ++f) features["f" + std::to_string(f)] = 42.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(treemodel::evaluate(tree, features));
  }
}
BENCHMARK(BM_TreeEvaluate)->Arg(4)->Arg(8)->Arg(12);

static void BM_TreeRoundTrip(benchmark::State& state) {
  auto tree = synthetic_tree(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(treemodel::parse_annotated(treemodel::annotate_tree(tree)));
  }
}
BENCHMARK(BM_TreeRoundTrip);

BENCHMARK_MAIN();
