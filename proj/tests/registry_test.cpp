#include "fairgauge/registry.hpp"

#include <doctest.h>

#include <map>
#include <set>

#include "fairgauge/errors.hpp"

using namespace fairgauge;
using registry::builtin_registry;
using registry::Indicator;
using registry::Mode;

TEST_CASE("registry counts match the consolidated indicator set") {
  const auto& reg = builtin_registry();
  CHECK(reg.indicators().size() == 47);
  CHECK(reg.version() == "paper-v1");

  std::map<char, int> per_letter;
  int dual = 0, automated_only = 0, manual_only = 0;
  for (const Indicator& ind : reg.indicators()) {
    per_letter[ind.principle.letter]++;
    switch (ind.mode) {
      case Mode::Dual: ++dual; break;
      case Mode::AutomatedOnly: ++automated_only; break;
      case Mode::ManualOnly: ++manual_only; break;
    }
  }
  CHECK(per_letter['F'] == 8);
  CHECK(per_letter['A'] == 13);
  CHECK(per_letter['I'] == 14);
  CHECK(per_letter['R'] == 12);
  CHECK(per_letter.size() == 4);
  CHECK(dual == 11);
  CHECK(automated_only == 6);
  CHECK(manual_only == 30);
  CHECK(reg.automated_metric_ids().size() == 17);

  CHECK(reg.max_points('F') == 8);
  CHECK(reg.max_points('A') == 13);
  CHECK(reg.max_points('I') == 14);
  CHECK(reg.max_points('R') == 12);
}

TEST_CASE("dual pairs are exactly the published ones") {
  const auto& reg = builtin_registry();
  const std::map<std::string, std::string> expected = {
      {"RDA-F1-01D", "FsF-F1-02D"},   {"RDA-F1-02D", "FsF-F1-01D"},
      {"RDA-F3-01M", "FsF-F3-01M"},   {"RDA-F4-01M", "FsF-F4-01M"},
      {"RDA-A1-04M", "FsF-A1-02M"},   {"RDA-A1-04D", "FsF-A1-03D"},
      {"RDA-A2-01M", "FsF-A2-01M"},   {"RDA-I3-01M", "FsF-I3-01M"},
      {"RDA-R1.1-03M", "FsF-R1.1-01M"}, {"RDA-R1.3-01M", "FsF-R1.3-01M"},
      {"RDA-R1.3-02D", "FsF-R1.3-02D"},
  };
  std::map<std::string, std::string> actual;
  for (const Indicator& ind : reg.indicators()) {
    if (ind.mode == Mode::Dual) actual[ind.id] = *ind.dual_partner;
  }
  CHECK(actual == expected);
}

TEST_CASE("automated-only metrics are exactly the published ones") {
  const auto& reg = builtin_registry();
  std::set<std::string> actual;
  for (const Indicator& ind : reg.indicators()) {
    if (ind.mode == Mode::AutomatedOnly) actual.insert(ind.id);
  }
  const std::set<std::string> expected = {"FsF-F2-01M",  "FsF-A1-01M",   "FsF-I1-01M",
                                          "FsF-I1-02M",  "FsF-R1-01MD",  "FsF-R1.2-01M"};
  CHECK(actual == expected);
}

TEST_CASE("lookup resolves own ids and dual partners") {
  const auto& reg = builtin_registry();

  const Indicator& by_partner = reg.lookup("FsF-F1-02D");
  CHECK(by_partner.id == "RDA-F1-01D");
  CHECK(by_partner.mode == Mode::Dual);

  const Indicator& auth = reg.lookup("RDA-A1.2-01D");
  CHECK(auth.mode == Mode::ManualOnly);
  CHECK(auth.principle.sub == "A1.2");
  CHECK(auth.description ==
        "Data is accessible through an access protocol that supports authentication and authorization");

  CHECK(reg.lookup("RDA-F2-01M").description == "Rich metadata is provided to allow discovery");

  CHECK_THROWS_AS(reg.lookup("RDA-X9-99Z"), Error);
  try {
    reg.lookup("RDA-X9-99Z");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownIndicator);
  }
}

TEST_CASE("dual partnering is an involution between one RDA and one FsF id") {
  const auto& reg = builtin_registry();
  for (const Indicator& ind : reg.indicators()) {
    if (ind.mode != Mode::Dual) continue;
    CHECK(ind.id.starts_with("RDA-"));
    CHECK(ind.dual_partner->starts_with("FsF-"));
    const Indicator& via_partner = reg.lookup(*ind.dual_partner);
    CHECK(via_partner.id == ind.id);  // partner(partner(x)) = x
  }
}

TEST_CASE("id suffix letters match the target field") {
  const auto& reg = builtin_registry();
  for (const Indicator& ind : reg.indicators()) {
    std::string suffix = registry::target_suffix(ind.target);
    CHECK(ind.id.ends_with(suffix));
    CHECK(ind.principle.letter == ind.principle.sub[0]);
    if (ind.dual_partner) CHECK(ind.dual_partner->ends_with(suffix));
  }
}

TEST_CASE("all ids are unique across both columns") {
  const auto& reg = builtin_registry();
  std::set<std::string> ids;
  for (const Indicator& ind : reg.indicators()) {
    CHECK(ids.insert(ind.id).second);
    if (ind.dual_partner) CHECK(ids.insert(*ind.dual_partner).second);
  }
  CHECK(ids.size() == 47 + 11);
}
