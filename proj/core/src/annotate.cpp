#include "fairgauge/annotate.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

#include "csv.hpp"
#include "fairgauge/errors.hpp"
#include "util.hpp"

namespace fairgauge::annotate {

using linked_data::LinkedDataDoc;
using linked_data::Node;
using linked_data::Value;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<VocabTerm> build_vocab() {
  std::vector<VocabTerm> terms = {
      // GPU profiling properties
      {"hpc:benchmark", Datatype::AnyUri, "Link to the associated benchmark software ID in ontology"},
      {"hpc:kernelName", Datatype::String, "Kernel name"},
      {"hpc:gpuThreadBlockSize", Datatype::Integer, "Launch block size"},
      {"hpc:registersPerThread", Datatype::Integer, "Register usage per thread"},
      {"hpc:gpuThreadCount", Datatype::Integer, "Threads count in launched kernel"},
      {"hpc:gpuWavesPerSM", Datatype::Integer, "Wave count in SM"},
      {"hpc:maxGPUThreadBlockSizeLimitedByRegister", Datatype::Integer, "Max block limited by registers"},
      {"hpc:maxGPUThreadBlockSizeLimitedByWarps", Datatype::Integer, "Max block limited by warps"},
      {"hpc:cpuPageFault", Datatype::Integer, "CPU page fault count"},
      {"hpc:gpuPageFault", Datatype::Integer, "GPU page fault count"},
      {"hpc:hostToDeviceTransferSize", Datatype::Quantity, "Host to Device data transfer size"},
      {"hpc:deviceToHostTransferSize", Datatype::Quantity, "Device to Host data transfer size"},
      // table-row terms
      {"hpc:TableRow", Datatype::String, "One annotated CSV data row"},
      {"hpc:codeVariant", Datatype::String, "Code variant ID"},
      {"hpc:allocatedDataSize", Datatype::Integer, "Memory allocation size"},
      {"hpc:arrayID", Datatype::String, "Internal integer ID of the array"},
      {"hpc:arrayName", Datatype::String, "Name of the array"},
      {"hpc:commandLineOption", Datatype::String, "Representing data size or input files etc."},
      {"hpc:labeledVariant", Datatype::String, "The best performing code variant ID"},
      {"hpc:beginAddress", Datatype::String, "Beginning address of memory allocation"},
      {"hpc:endAddress", Datatype::String, "Ending address of memory allocation"},
      {"hpc:elapsedCycles", Datatype::Integer, "Cycle count of profiled code"},
      {"hpc:totalExecutionTime", Datatype::Quantity, "Total execution time for this kernel"},
      {"hpc:numberOfCalls", Datatype::Integer, "Number of calls to this kernel"},
      {"hpc:averageExecutionTime", Datatype::Quantity, "Average kernel execution time"},
      {"hpc:minExecutionTime", Datatype::Quantity, "Minimal kernel execution time"},
      {"hpc:maxExecutionTime", Datatype::Quantity, "Maximal kernel execution time"},
      {"hpc:executionTimePercentage", Datatype::Decimal, "Percentage of time spent in this kernel"},
      {"hpc:memoryThroughputPercentage", Datatype::Decimal, "GPU memory throughput"},
      {"hpc:dramUtilization", Datatype::Decimal, "DRAM utilization"},
      {"hpc:smThroughput", Datatype::Decimal, "SM throughput"},
      {"hpc:l1TexCacheUtilization", Datatype::Decimal, "L1/Tex cache utilization"},
      {"hpc:l2CacheUtilization", Datatype::Decimal, "L2 cache utilization"},
      {"hpc:achievedOccupancy", Datatype::Decimal, "Achieved profiled occupancy"},
      {"hpc:achievedActiveWarpsPerSM", Datatype::Decimal, "Profiled active warps per SM"},
      {"hpc:dramFrequency", Datatype::Decimal, "Frequency of DRAM"},
      {"hpc:streamingMultiprocessorFrequency", Datatype::Decimal, "Frequency of Streaming multiprocessor"},
      {"hpc:smActiveCycles", Datatype::Decimal, "Active cycle counts from SM"},
      {"hpc:theoreticalActiveWarpsPerSM", Datatype::Integer, "Theoretical Active Warps per SM"},
      {"hpc:theoreticalOccupancy", Datatype::Decimal, "Theoretical Occupancy"},
      {"hpc:maxGPUThreadBlockSizeLimitedBySM", Datatype::Integer, "Max block limited by SM"},
      {"hpc:maxGPUThreadBlockSizeLimitedBySharedMemory", Datatype::Integer, "Max block limited by shared memory"},
      {"hpc:gpuGridSize", Datatype::Integer, "Launch grid size"},
      {"hpc:sharedMemoryConfigurationSize", Datatype::Integer, "Launch shared memory configuration size"},
      {"hpc:staticSharedMemoryPerBlock", Datatype::Integer, "Launch static shared memory"},
      {"hpc:unifiedMemoryRemoteMap", Datatype::String, "Unified memory remote map"},
      // decision-tree terms
      {"hpc:DecisionTree", Datatype::String, "A decision tree model"},
      {"hpc:DecisionTreeNode", Datatype::String, "One node of a decision tree"},
      {"hpc:name", Datatype::String, "Name of the decision tree"},
      {"hpc:wasDerivedFrom", Datatype::String, "Training dataset this model was derived from"},
      {"hpc:decisionTreeNode", Datatype::AnyUri, "Link to one or more nodes of this decision tree"},
      {"hpc:treeNodeLevel", Datatype::Integer, "Level from 0"},
      {"hpc:decisionFeature", Datatype::String, "Feature for the condition's left operand"},
      {"hpc:relationOp", Datatype::String, "Operator for the decision condition"},
      {"hpc:relationValue", Datatype::Decimal, "Value as the right operand of the decision condition"},
      {"hpc:hasChildNode", Datatype::Boolean, "Whether this node has children"},
      {"hpc:trueNode", Datatype::AnyUri, "Link to the node taken when the condition holds"},
      {"hpc:falseNode", Datatype::AnyUri, "Link to the node taken when the condition fails"},
      {"hpc:decisionLabel", Datatype::String, "Decision label for a leaf node"},
  };
  return terms;
}

}  // namespace

const std::vector<VocabTerm>& builtin_vocab() {
  static const std::vector<VocabTerm> vocab = build_vocab();
  return vocab;
}

const VocabTerm* vocab_lookup(std::string_view qname) {
  // the published table spells kernelName as "kenelName"
  if (qname == "hpc:kenelName") qname = "hpc:kernelName";
  for (const VocabTerm& term : builtin_vocab()) {
    if (term.qname == qname) return &term;
  }
  return nullptr;
}

Datatype datatype_from_name(std::string_view name) {
  if (name == "string" || name == "xsd:string") return Datatype::String;
  if (name == "integer" || name == "xsd:integer") return Datatype::Integer;
  if (name == "decimal" || name == "xsd:decimal") return Datatype::Decimal;
  if (name == "anyURI" || name == "xsd:anyURI" || name == "anyuri") return Datatype::AnyUri;
  if (name == "boolean" || name == "xsd:boolean") return Datatype::Boolean;
  if (name == "quantity" || name == "qudt:QuantityValue") return Datatype::Quantity;
  fail(Errc::CellTypeError, "unknown datatype '" + std::string(name) + "'");
}

const char* datatype_name(Datatype dt) {
  switch (dt) {
    case Datatype::String: return "string";
    case Datatype::Integer: return "integer";
    case Datatype::Decimal: return "decimal";
    case Datatype::AnyUri: return "anyURI";
    case Datatype::Boolean: return "boolean";
    case Datatype::Quantity: return "quantity";
  }
  return "string";
}

namespace {

bool prefix_declared(const MappingSpec& spec, std::string_view name) {
  if (name.find("://") != std::string_view::npos) return true;  // full IRI
  size_t colon = name.find(':');
  if (colon == std::string_view::npos) return false;
  std::string_view prefix = name.substr(0, colon);
  return std::any_of(spec.prefixes.begin(), spec.prefixes.end(),
                     [&](const auto& p) { return p.first == prefix; });
}

void validate_mapping(const MappingSpec& spec, const std::string& origin) {
  size_t token = spec.id_template.find("{row}");
  if (token == std::string::npos || spec.id_template.find("{row}", token + 1) != std::string::npos) {
    fail(Errc::MissingRowToken, "id_template must contain {row} exactly once in " + origin);
  }
  if (!prefix_declared(spec, spec.row_type)) {
    fail(Errc::UndeclaredPrefix, "row_type " + spec.row_type + " uses an undeclared prefix in " + origin);
  }
  std::set<std::string> seen_columns;
  for (const ColumnBinding& binding : spec.bindings) {
    if (!seen_columns.insert(binding.column).second) {
      fail(Errc::DuplicateColumnBinding, "column '" + binding.column + "' bound twice in " + origin);
    }
    if (!prefix_declared(spec, binding.property)) {
      fail(Errc::UndeclaredPrefix,
           "property " + binding.property + " uses an undeclared prefix in " + origin);
    }
    bool has_unit = binding.unit && !binding.unit->empty();
    if (binding.datatype == Datatype::Quantity && !has_unit) {
      fail(Errc::UnitWithoutQuantity,
           "quantity binding for column '" + binding.column + "' needs a unit in " + origin);
    }
    if (binding.datatype != Datatype::Quantity && has_unit) {
      fail(Errc::UnitWithoutQuantity,
           "unit given for non-quantity column '" + binding.column + "' in " + origin);
    }
    if (has_unit && !prefix_declared(spec, *binding.unit)) {
      fail(Errc::UndeclaredPrefix, "unit " + *binding.unit + " uses an undeclared prefix in " + origin);
    }
  }
}

}  // namespace

MappingSpec parse_mapping_text(const std::string& text, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::TargetUnreadable, "mapping spec " + origin + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) fail(Errc::TargetUnreadable, "mapping spec must be a JSON object: " + origin);

  MappingSpec spec;
  spec.base_iri = doc.value("base_iri", "");
  spec.row_type = doc.value("row_type", "hpc:TableRow");
  spec.id_template = doc.value("id_template", "");
  if (doc.contains("prefixes")) {
    for (const auto& [prefix, iri] : doc["prefixes"].items()) {
      spec.prefixes.emplace_back(prefix, iri.get<std::string>());
    }
  }
  if (doc.contains("bindings")) {
    for (const auto& b : doc["bindings"]) {
      ColumnBinding binding;
      binding.column = b.value("column", "");
      binding.property = b.value("property", "");
      binding.datatype = datatype_from_name(b.value("datatype", "string"));
      if (b.contains("unit")) binding.unit = b["unit"].get<std::string>();
      spec.bindings.push_back(std::move(binding));
    }
  }
  validate_mapping(spec, origin);
  return spec;
}

MappingSpec parse_mapping(const std::filesystem::path& path) {
  return parse_mapping_text(util::read_file(path.string()), path.string());
}

std::vector<std::string> unregistered_properties(const MappingSpec& spec) {
  std::vector<std::string> unknown;
  for (const ColumnBinding& binding : spec.bindings) {
    if (binding.property.starts_with("hpc:") && !vocab_lookup(binding.property)) {
      unknown.push_back(binding.property);
    }
  }
  return unknown;
}

namespace {

Value cell_value(const ColumnBinding& binding, const std::string& cell, size_t row, LinkedDataDoc& doc,
                 size_t& blank_counter) {
  auto type_error = [&](const char* expected) {
    fail(Errc::CellTypeError, "row " + std::to_string(row) + ", column '" + binding.column + "': '" +
                                  cell + "' is not " + expected);
  };
  switch (binding.datatype) {
    case Datatype::String:
    case Datatype::AnyUri:
      return Value::string(cell);
    case Datatype::Boolean: {
      std::string lower = util::lowercase(cell);
      if (lower == "true" || lower == "1") return Value::boolean(true);
      if (lower == "false" || lower == "0") return Value::boolean(false);
      type_error("a boolean");
      break;
    }
    case Datatype::Integer: {
      auto value = util::parse_int(cell);
      if (!value) type_error("an integer");
      return Value::integer(*value);
    }
    case Datatype::Decimal: {
      if (!util::parse_double(cell)) type_error("a decimal");
      return Value::decimal(util::trim(cell));
    }
    case Datatype::Quantity: {
      if (!util::parse_double(cell)) type_error("a decimal quantity");
      Node quantity;
      quantity.id = "_:b" + std::to_string(blank_counter++);
      quantity.types.emplace_back(linked_data::iri::qudt_quantity_value);
      quantity.add(std::string(linked_data::iri::qudt_unit), Value::ref(doc.expand(*binding.unit)));
      quantity.add(std::string(linked_data::iri::qudt_value), Value::decimal(util::trim(cell)));
      Value ref = Value::ref(quantity.id);
      doc.nodes.push_back(std::move(quantity));
      return ref;
    }
  }
  return Value::string(cell);
}

}  // namespace

LinkedDataDoc annotate_csv_text(const std::string& csv_text, const MappingSpec& spec) {
  csv::Table table = csv::parse(csv_text);

  std::map<std::string, size_t> column_index;
  for (size_t i = 0; i < table.header.size(); ++i) column_index[util::trim(table.header[i])] = i;
  for (const ColumnBinding& binding : spec.bindings) {
    if (!column_index.count(binding.column)) {
      fail(Errc::MissingColumn, "CSV has no column '" + binding.column + "'");
    }
  }

  LinkedDataDoc doc;
  doc.context = spec.prefixes;
  size_t blank_counter = 0;

  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cells = table.rows[r];
    size_t row_number = r + 1;  // 1-based, matching <base>#L1

    Node node;
    std::string slot = spec.id_template;
    slot.replace(slot.find("{row}"), 5, std::to_string(row_number));
    node.id = spec.base_iri + slot;
    node.types.push_back(spec.row_type);

    size_t before = doc.nodes.size();
    for (const ColumnBinding& binding : spec.bindings) {
      size_t idx = column_index[binding.column];
      if (idx >= cells.size()) continue;
      std::string cell = util::trim(cells[idx]);
      if (cell.empty()) continue;  // empty cells yield no property
      node.add(binding.property, cell_value(binding, cell, row_number, doc, blank_counter));
    }
    // place the row node before the quantity nodes it references
    doc.nodes.insert(doc.nodes.begin() + static_cast<std::ptrdiff_t>(before), std::move(node));
  }
  return doc;
}

LinkedDataDoc annotate_csv(const std::filesystem::path& csv_path, const MappingSpec& spec) {
  return annotate_csv_text(util::read_file(csv_path.string()), spec);
}

}  // namespace fairgauge::annotate
