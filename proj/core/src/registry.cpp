#include "fairgauge/registry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

#include "fairgauge/errors.hpp"

namespace fairgauge::registry {

namespace {

Indicator manual_row(const char* id, const char* sub, const char* description) {
  Indicator ind;
  ind.id = id;
  ind.source = Source::RDA;
  ind.principle = PrincipleId{sub[0], sub};
  ind.target = target_from_suffix(std::string_view(id).substr(std::string_view(id).find_last_not_of("MD") + 1));
  ind.description = description;
  ind.mode = Mode::ManualOnly;
  return ind;
}

Indicator dual_row(const char* rda_id, const char* fsf_id, const char* sub, const char* description) {
  Indicator ind = manual_row(rda_id, sub, description);
  ind.mode = Mode::Dual;
  ind.dual_partner = fsf_id;
  return ind;
}

Indicator auto_row(const char* id, const char* sub, const char* description) {
  Indicator ind = manual_row(id, sub, description);
  ind.source = Source::FsF;
  ind.mode = Mode::AutomatedOnly;
  return ind;
}

std::vector<Indicator> table_rows() {
  std::vector<Indicator> rows;
  rows.reserve(47);

  // F
  rows.push_back(manual_row("RDA-F1-01M", "F1", "Metadata is identified by a persistent identifier"));
  rows.push_back(dual_row("RDA-F1-01D", "FsF-F1-02D", "F1", "Data is identified by a persistent identifier"));
  rows.push_back(manual_row("RDA-F1-02M", "F1", "Metadata is identified by a globally unique identifier"));
  rows.push_back(dual_row("RDA-F1-02D", "FsF-F1-01D", "F1", "Data is identified by a globally unique identifier"));
  rows.push_back(manual_row("RDA-F2-01M", "F2", "Rich metadata is provided to allow discovery"));
  rows.push_back(auto_row("FsF-F2-01M", "F2", "Metadata includes descriptive core elements to support data findability"));
  rows.push_back(dual_row("RDA-F3-01M", "FsF-F3-01M", "F3", "Metadata includes the identifier for the data"));
  rows.push_back(dual_row("RDA-F4-01M", "FsF-F4-01M", "F4", "Metadata is offered in such a way that it can be harvested and indexed"));

  // A
  rows.push_back(manual_row("RDA-A1-01M", "A1", "Metadata contains information to enable the user to get access to the data"));
  rows.push_back(manual_row("RDA-A1-02M", "A1", "Metadata can be accessed manually"));
  rows.push_back(manual_row("RDA-A1-02D", "A1", "Data can be accessed manually"));
  rows.push_back(manual_row("RDA-A1-03M", "A1", "Metadata identifier resolves to a metadata record or digital object"));
  rows.push_back(manual_row("RDA-A1-03D", "A1", "Data identifier resolves to a metadata record or digital object"));
  rows.push_back(dual_row("RDA-A1-04M", "FsF-A1-02M", "A1", "Metadata is accessed through standardised protocol"));
  rows.push_back(dual_row("RDA-A1-04D", "FsF-A1-03D", "A1", "Data is accessed through standardized protocol"));
  rows.push_back(manual_row("RDA-A1-05D", "A1", "Data can be accessed automatically"));
  rows.push_back(auto_row("FsF-A1-01M", "A1", "Metadata contains access level and access conditions of the data"));
  rows.push_back(manual_row("RDA-A1.1-01M", "A1.1", "Metadata is accessible through a free access protocol"));
  rows.push_back(manual_row("RDA-A1.1-01D", "A1.1", "Data is accessible through a free access protocol"));
  rows.push_back(manual_row("RDA-A1.2-01D", "A1.2", "Data is accessible through an access protocol that supports authentication and authorization"));
  rows.push_back(dual_row("RDA-A2-01M", "FsF-A2-01M", "A2", "Metadata is guaranteed to remain available after data is no longer available"));

  // I
  rows.push_back(manual_row("RDA-I1-01M", "I1", "Metadata uses knowledge representation expressed in standardized format"));
  rows.push_back(manual_row("RDA-I1-01D", "I1", "Data uses knowledge representation expressed in standardized format"));
  rows.push_back(manual_row("RDA-I1-02M", "I1", "Metadata uses machine-understandable knowledge representation"));
  rows.push_back(manual_row("RDA-I1-02D", "I1", "Data uses machine-understandable knowledge representation"));
  rows.push_back(auto_row("FsF-I1-01M", "I1", "Metadata is represented using a formal knowledge representation language"));
  rows.push_back(auto_row("FsF-I1-02M", "I1", "Metadata uses semantic resources"));
  rows.push_back(manual_row("RDA-I2-01M", "I2", "Metadata uses FAIR-compliant vocabularies"));
  rows.push_back(manual_row("RDA-I2-01D", "I2", "Data uses FAIR-compliant vocabularies"));
  rows.push_back(dual_row("RDA-I3-01M", "FsF-I3-01M", "I3", "Metadata includes references to other (meta)data"));
  rows.push_back(manual_row("RDA-I3-01D", "I3", "Data includes references to other (meta)data"));
  rows.push_back(manual_row("RDA-I3-02M", "I3", "Metadata includes references to other data"));
  rows.push_back(manual_row("RDA-I3-02D", "I3", "Data includes references to other data"));
  rows.push_back(manual_row("RDA-I3-03M", "I3", "Metadata includes qualified references to other metadata"));
  rows.push_back(manual_row("RDA-I3-04M", "I3", "Metadata include qualified references to other data"));

  // R
  rows.push_back(manual_row("RDA-R1-01M", "R1", "Plurality of accurate and relevant attributes are provided to allow reuse"));
  rows.push_back(auto_row("FsF-R1-01MD", "R1", "Metadata specifies the content of the data"));
  rows.push_back(manual_row("RDA-R1.1-01M", "R1.1", "Metadata includes information about the license under which the data can be reused"));
  rows.push_back(manual_row("RDA-R1.1-02M", "R1.1", "Metadata refers to a standard reuse license"));
  rows.push_back(dual_row("RDA-R1.1-03M", "FsF-R1.1-01M", "R1.1", "Metadata refers to a machine-understandable reuse license"));
  rows.push_back(manual_row("RDA-R1.2-01M", "R1.2", "Metadata includes provenance information according to community-specific standards"));
  rows.push_back(manual_row("RDA-R1.2-02M", "R1.2", "Metadata includes provenance information according to a cross-community language"));
  rows.push_back(auto_row("FsF-R1.2-01M", "R1.2", "Metadata includes provenance information about data creation or generation"));
  rows.push_back(dual_row("RDA-R1.3-01M", "FsF-R1.3-01M", "R1.3", "Metadata complies with a community standard"));
  rows.push_back(manual_row("RDA-R1.3-01D", "R1.3", "Data complies with a community standard"));
  rows.push_back(manual_row("RDA-R1.3-02M", "R1.3", "Metadata is expressed in compliance with a machine-understandable community standard"));
  rows.push_back(dual_row("RDA-R1.3-02D", "FsF-R1.3-02D", "R1.3", "Data is in compliance with a machine-understandable community standard"));

  return rows;
}

}  // namespace

Registry::Registry(std::string version, std::vector<Indicator> indicators)
    : version_(std::move(version)), indicators_(std::move(indicators)) {}

const Indicator* Registry::find(std::string_view id) const {
  for (const Indicator& ind : indicators_) {
    if (ind.id == id) return &ind;
    if (ind.dual_partner && *ind.dual_partner == id) return &ind;
  }
  return nullptr;
}

const Indicator& Registry::lookup(std::string_view id) const {
  if (const Indicator* ind = find(id)) return *ind;
  fail(Errc::UnknownIndicator, std::string(id) + " is not in registry " + version_);
}

std::vector<std::string> Registry::automated_metric_ids() const {
  std::vector<std::string> ids;
  for (const Indicator& ind : indicators_) {
    if (ind.automated()) ids.push_back(ind.automated_id());
  }
  return ids;
}

int Registry::max_points(char letter) const {
  int n = 0;
  for (const Indicator& ind : indicators_) {
    if (ind.principle.letter == letter) ++n;
  }
  return n;
}

const Registry& builtin_registry() {
  static const Registry instance("paper-v1", table_rows());
  return instance;
}

std::string target_suffix(Target target) {
  switch (target) {
    case Target::Metadata: return "M";
    case Target::Data: return "D";
    case Target::Both: return "MD";
  }
  return "M";
}

Target target_from_suffix(std::string_view suffix) {
  if (suffix == "M") return Target::Metadata;
  if (suffix == "D") return Target::Data;
  if (suffix == "MD") return Target::Both;
  fail(Errc::UnknownIndicator, "bad target suffix '" + std::string(suffix) + "'");
}

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::ManualOnly: return "ManualOnly";
    case Mode::AutomatedOnly: return "AutomatedOnly";
    case Mode::Dual: return "Dual";
  }
  return "ManualOnly";
}

const char* source_name(Source source) {
  return source == Source::RDA ? "RDA" : "FsF";
}

}  // namespace fairgauge::registry
