#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairgauge/linked_data.hpp"

namespace fairgauge::annotate {

enum class Datatype { String, Integer, Decimal, AnyUri, Boolean, Quantity };

struct VocabTerm {
  std::string qname;  // e.g. hpc:gpuPageFault
  Datatype datatype = Datatype::String;
  std::string description;
};

// The embedded vocabulary excerpt: GPU profiling properties, the table-row
// terms, and the decision-tree terms. hpc:kenelName is kept as a deprecated
// alias of hpc:kernelName.
const std::vector<VocabTerm>& builtin_vocab();
const VocabTerm* vocab_lookup(std::string_view qname);

struct ColumnBinding {
  std::string column;
  std::string property;  // qualified name
  Datatype datatype = Datatype::String;
  std::optional<std::string> unit;  // required iff datatype == Quantity
};

struct MappingSpec {
  std::string base_iri;
  std::string row_type = "hpc:TableRow";
  std::string id_template;  // contains {row} exactly once
  std::vector<std::pair<std::string, std::string>> prefixes;
  std::vector<ColumnBinding> bindings;
};

MappingSpec parse_mapping(const std::filesystem::path& path);
MappingSpec parse_mapping_text(const std::string& text, const std::string& origin);

// Bound properties that are not in the embedded vocabulary (allowed, but
// surfaced to the user).
std::vector<std::string> unregistered_properties(const MappingSpec& spec);

// One node per CSV data row; bound non-empty cells become properties;
// quantity cells become blank-node QuantityValues.
linked_data::LinkedDataDoc annotate_csv(const std::filesystem::path& csv_path, const MappingSpec& spec);
linked_data::LinkedDataDoc annotate_csv_text(const std::string& csv_text, const MappingSpec& spec);

Datatype datatype_from_name(std::string_view name);
const char* datatype_name(Datatype dt);

}  // namespace fairgauge::annotate
