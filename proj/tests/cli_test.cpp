#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <string>

#include "support/temp_dir.hpp"

using nlohmann::json;
using testsupport::read_all;
using testsupport::TempDir;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("fairgauge-cli-out-" + std::to_string(getpid()) + "-" +
                                              std::to_string(counter));
  fs::path err = fs::temp_directory_path() / ("fairgauge-cli-err-" + std::to_string(getpid()) + "-" +
                                              std::to_string(counter));
  ++counter;
  std::string command = "SOURCE_DATE_EPOCH=1627516800 " FAIRGAUGE_CLI_PATH " " + args + " > " +
                        out.string() + " 2> " + err.string();
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_all(out);
  result.err = read_all(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

std::string fixture(const char* name) {
  return (fs::path(FAIRGAUGE_FIXTURES_DIR) / name).string();
}

}  // namespace

TEST_CASE("registry list --json emits 47 entries") {
  auto result = run_cli("registry list --json");
  REQUIRE(result.exit_code == 0);
  auto doc = json::parse(result.out);
  CHECK(doc.size() == 47);
  CHECK(doc[0].contains("id"));
  CHECK(doc[0].contains("partner"));
  CHECK(doc[0].contains("principle"));
  CHECK(doc[0].contains("target"));
  CHECK(doc[0].contains("mode"));
  CHECK(doc[0].contains("description"));
}

TEST_CASE("assess hybrid end to end on the post fixture") {
  TempDir dir;
  auto out_json = dir.path() / "out.json";
  auto result = run_cli("assess hybrid " + fixture("xplacer-post") + " --answers " +
                        fixture("xplacer-post/answers.txt") + " --override-file " +
                        fixture("xplacer-post/overrides.txt") + " --no-network --json " +
                        out_json.string());
  REQUIRE(result.exit_code == 0);
  auto doc = json::parse(read_all(out_json));
  CHECK(doc["score"]["percent"] == "83.0");
  CHECK(doc["score"]["earned"] == 39);
  CHECK(doc["rows"].size() == 47);
}

TEST_CASE("missing required arguments exit 1 with usage text") {
  auto result = run_cli("assess hybrid");
  CHECK(result.exit_code == 1);
  CHECK(!result.err.empty());
}

TEST_CASE("unknown fixture paths exit 2 with a domain error") {
  auto result = run_cli("assess auto /no/such/dir --no-network");
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("TargetUnreadable") != std::string::npos);
}

TEST_CASE("assess auto writes a 17-entry json report") {
  TempDir dir;
  auto out_json = dir.path() / "auto.json";
  auto result =
      run_cli("assess auto " + fixture("xplacer-pre") + " --no-network --json " + out_json.string());
  REQUIRE(result.exit_code == 0);
  auto doc = json::parse(read_all(out_json));
  CHECK(doc["results"].size() == 17);
  CHECK(doc["target"] == "https://github.com/AndrewXu22/optimal_unified_memory");
}

TEST_CASE("subcommands are idempotent: identical inputs give identical artifacts") {
  TempDir dir;
  auto first = dir.path() / "a.json";
  auto second = dir.path() / "b.json";
  std::string base = "assess hybrid " + fixture("xplacer-post") + " --answers " +
                     fixture("xplacer-post/answers.txt") + " --override-file " +
                     fixture("xplacer-post/overrides.txt") + " --no-network --json ";
  REQUIRE(run_cli(base + first.string()).exit_code == 0);
  REQUIRE(run_cli(base + second.string()).exit_code == 0);
  CHECK(read_all(first) == read_all(second));

  auto svg1 = dir.path() / "a.svg";
  auto svg2 = dir.path() / "b.svg";
  std::string report_cmd = "report " + first.string() + " --svg ";
  REQUIRE(run_cli(report_cmd + svg1.string()).exit_code == 0);
  REQUIRE(run_cli(report_cmd + svg2.string()).exit_code == 0);
  CHECK(read_all(svg1) == read_all(svg2));
  CHECK(!read_all(svg1).empty());
}

TEST_CASE("annotate csv matches its own golden bytes across runs") {
  TempDir dir;
  auto out1 = dir.path() / "a.jsonld";
  auto out2 = dir.path() / "b.jsonld";
  std::string base = "annotate csv " + fixture("listing1/test.csv") + " --mapping " +
                     fixture("listing1/mapping.json") + " --out ";
  REQUIRE(run_cli(base + out1.string()).exit_code == 0);
  REQUIRE(run_cli(base + out2.string()).exit_code == 0);
  CHECK(read_all(out1) == read_all(out2));
  CHECK(read_all(out1).find("\"hpc:codeVariant\": \"111100\"") != std::string::npos);
}

TEST_CASE("annotate csv emits n-triples on request") {
  auto result = run_cli("annotate csv " + fixture("listing1/test.csv") + " --mapping " +
                        fixture("listing1/mapping.json") + " --format nt");
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("<http://example.org/test.csv#L1>") != std::string::npos);
  CHECK(result.out.find("^^<http://www.w3.org/2001/XMLSchema#decimal>") != std::string::npos);
}

TEST_CASE("annotate tree then evaluate the annotated model") {
  TempDir dir;
  auto out = dir.path() / "tree.jsonld";
  REQUIRE(run_cli("annotate tree " + fixture("trees/xplacer-partial.json") + " --out " + out.string())
              .exit_code == 0);

  auto native = run_cli("tree eval " + fixture("trees/xplacer-partial.json") +
                        " --features \"Executed Ipc Elapsed=0,GPU Page Fault=0.0005,Waves Per SM=1\"");
  REQUIRE(native.exit_code == 0);
  auto annotated = run_cli("tree eval " + out.string() +
                           " --features \"Executed Ipc Elapsed=0,GPU Page Fault=0.0005,Waves Per SM=1\"");
  REQUIRE(annotated.exit_code == 0);
  CHECK(native.out == annotated.out);
  CHECK(native.out == "1\n");
}

TEST_CASE("assess manual validates answer files") {
  auto ok = run_cli("assess manual --answers " + fixture("xplacer-post/answers.txt"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("30 manual answers valid") != std::string::npos);

  TempDir dir;
  auto partial = dir.write("partial.txt", "RDA-F1-01M 4\n");
  auto strict = run_cli("assess manual --answers " + partial.string());
  CHECK(strict.exit_code == 2);
  auto lenient = run_cli("assess manual --answers " + partial.string() + " --lenient");
  CHECK(lenient.exit_code == 0);
}

TEST_CASE("interactive fill writes the answer file; interrupts leave a draft") {
  TempDir dir;
  auto out = dir.path() / "answers.txt";
  // 30 answers of level 4 piped on stdin
  std::string command = "printf '";
  for (int i = 0; i < 30; ++i) command += "4\\n";
  command += "' | SOURCE_DATE_EPOCH=1627516800 " FAIRGAUGE_CLI_PATH
             " assess manual --interactive --out " +
             out.string() + " > /dev/null 2>&1";
  REQUIRE(std::system(command.c_str()) == 0);
  std::string written = read_all(out);
  size_t lines = 0;
  for (char c : written) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 30);

  // interrupt after three answers: draft with exactly three lines, exit 2
  auto out2 = dir.path() / "answers2.txt";
  std::string abort_cmd = "printf '4\\n4\\n4\\n' | " FAIRGAUGE_CLI_PATH
                          " assess manual --interactive --out " +
                          out2.string() + " > /dev/null 2>&1";
  int status = std::system(abort_cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  std::string draft = read_all(dir.path() / "answers2.txt.draft");
  lines = 0;
  for (char c : draft) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 3);
  CHECK_FALSE(fs::exists(out2));
}

TEST_CASE("hybrid with exclude-na reduces the denominator") {
  TempDir dir;
  // answer file with one NA answer
  std::string answers = read_all(fs::path(FAIRGAUGE_FIXTURES_DIR) / "xplacer-post" / "answers.txt");
  size_t pos = answers.find("RDA-I3-03M 4");
  REQUIRE(pos != std::string::npos);
  answers.replace(pos, 12, "RDA-I3-03M 0");
  auto answer_file = dir.write("answers.txt", answers);

  auto out = dir.path() / "na.json";
  auto result = run_cli("assess hybrid " + fixture("xplacer-post") + " --answers " +
                        answer_file.string() + " --override-file " +
                        fixture("xplacer-post/overrides.txt") +
                        " --no-network --exclude-na --json " + out.string());
  REQUIRE(result.exit_code == 0);
  auto doc = json::parse(read_all(out));
  CHECK(doc["score"]["max"] == 46);
  CHECK(doc["score"]["earned"] == 38);
}

TEST_CASE("FAIRGAUGE_CONFIG supplies the default evaluation config") {
  TempDir dir;
  auto config = dir.write("config.json", R"({"trusted_repositories": []})");
  auto out = dir.path() / "auto.json";
  std::string command = "FAIRGAUGE_CONFIG=" + config.string() + " " FAIRGAUGE_CLI_PATH
                        " assess auto " + fixture("xplacer-post") + " --no-network --json " +
                        out.string() + " > /dev/null 2>&1";
  REQUIRE(std::system(command.c_str()) == 0);
  auto doc = json::parse(read_all(out));
  for (const auto& result : doc["results"]) {
    if (result["metric"] == "FsF-A2-01M") {
      CHECK(result["status"] == "Fail");  // zenodo no longer trusted
    }
  }
}

TEST_CASE("text report of the post fixture shows full F and A rows") {
  auto result = run_cli("assess hybrid " + fixture("xplacer-post") + " --answers " +
                        fixture("xplacer-post/answers.txt") + " --override-file " +
                        fixture("xplacer-post/overrides.txt") + " --no-network --text");
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("F 8/8") != std::string::npos);
  CHECK(result.out.find("A 13/13") != std::string::npos);
  CHECK(result.out.find("FAIR score: 83.0%") != std::string::npos);
}

TEST_CASE("text report of the pre fixture lists the missing persistent identifier") {
  auto result = run_cli("assess hybrid " + fixture("xplacer-pre") + " --answers " +
                        fixture("xplacer-pre/answers.txt") + " --no-network --text");
  REQUIRE(result.exit_code == 0);
  size_t failures_start = result.out.find("Indicators without full marks:");
  REQUIRE(failures_start != std::string::npos);
  CHECK(result.out.find("FsF-F1-02D", failures_start) != std::string::npos);
}
