#include "fairgauge/linked_data.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "fairgauge/errors.hpp"
#include "util.hpp"

namespace fairgauge::linked_data {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Value Value::string(std::string text) {
  Value v;
  v.kind_ = Kind::String;
  v.text_ = std::move(text);
  return v;
}

Value Value::integer(std::int64_t value) {
  Value v;
  v.kind_ = Kind::Integer;
  v.int_ = value;
  return v;
}

Value Value::decimal(std::string lexical) {
  Value v;
  v.kind_ = Kind::Decimal;
  v.text_ = std::move(lexical);
  return v;
}

Value Value::boolean(bool value) {
  Value v;
  v.kind_ = Kind::Boolean;
  v.bool_ = value;
  return v;
}

Value Value::ref(std::string id) {
  Value v;
  v.kind_ = Kind::Ref;
  v.text_ = std::move(id);
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::List;
  v.items_ = std::move(items);
  return v;
}

double Value::as_double() const {
  if (kind_ == Kind::Integer) return static_cast<double>(int_);
  if (kind_ == Kind::Decimal) {
    auto parsed = util::parse_double(text_);
    if (parsed) return *parsed;
  }
  fail(Errc::CellTypeError, "value is not numeric");
}

bool Value::operator==(const Value& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::String:
    case Kind::Decimal:
    case Kind::Ref:
      return text_ == other.text_;
    case Kind::Integer:
      return int_ == other.int_;
    case Kind::Boolean:
      return bool_ == other.bool_;
    case Kind::List:
      return items_ == other.items_;
  }
  return false;
}

const Value* Node::property(std::string_view name) const {
  for (const auto& [key, value] : properties) {
    if (key == name) return &value;
  }
  return nullptr;
}

void Node::add(std::string name, Value value) { properties.emplace_back(std::move(name), std::move(value)); }

const Node* LinkedDataDoc::find(std::string_view id) const {
  for (const Node& node : nodes) {
    if (node.id == id) return &node;
  }
  return nullptr;
}

std::string LinkedDataDoc::expand(std::string_view name) const {
  if (name.find("://") != std::string_view::npos || name.starts_with("_:")) return std::string(name);
  size_t colon = name.find(':');
  if (colon == std::string_view::npos) return std::string(name);
  std::string_view prefix = name.substr(0, colon);
  for (const auto& [p, iri] : context) {
    if (p == prefix) return iri + std::string(name.substr(colon + 1));
  }
  return std::string(name);
}

std::string LinkedDataDoc::next_blank_id() const {
  size_t n = 0;
  for (const Node& node : nodes) {
    if (node.id.starts_with("_:b")) ++n;
  }
  return "_:b" + std::to_string(n);
}

namespace {

void validate_refs(const LinkedDataDoc& doc, const Value& value, std::set<std::string>& ids) {
  if (value.kind() == Value::Kind::Ref) {
    if (value.text().starts_with("_:") && !ids.count(value.text())) {
      fail(Errc::DanglingChild, "blank node reference " + value.text() + " does not resolve");
    }
    return;
  }
  if (value.kind() == Value::Kind::List) {
    for (const Value& item : value.items()) validate_refs(doc, item, ids);
  }
}

bool has_type(const LinkedDataDoc& doc, const Node& node, std::string_view type_iri) {
  return std::any_of(node.types.begin(), node.types.end(),
                     [&](const std::string& t) { return doc.expand(t) == type_iri; });
}

}  // namespace

void LinkedDataDoc::validate() const {
  std::set<std::string> ids;
  for (const Node& node : nodes) ids.insert(node.id);
  for (const Node& node : nodes) {
    for (const auto& [key, value] : node.properties) validate_refs(*this, value, ids);
    if (has_type(*this, node, iri::qudt_quantity_value)) {
      const Value* unit = node.property(iri::qudt_unit);
      const Value* value = node.property(iri::qudt_value);
      if (node.properties.size() != 2 || !unit || unit->kind() != Value::Kind::Ref || !value ||
          value->kind() != Value::Kind::Decimal) {
        fail(Errc::UnknownTerm,
             "quantity node " + node.id + " must carry exactly a unit reference and a decimal value");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// JSON-LD
// ---------------------------------------------------------------------------

namespace {

ordered_json value_to_json(const LinkedDataDoc& doc, const Value& value) {
  switch (value.kind()) {
    case Value::Kind::String:
      return value.text();
    case Value::Kind::Integer:
      return value.integer_value();
    case Value::Kind::Boolean:
      return value.boolean_value();
    case Value::Kind::Decimal: {
      ordered_json typed;
      typed["@type"] = std::string(iri::xsd_decimal);
      typed["@value"] = value.text();
      return typed;
    }
    case Value::Kind::Ref: {
      ordered_json ref;
      ref["@id"] = doc.expand(value.text());
      return ref;
    }
    case Value::Kind::List: {
      ordered_json list = ordered_json::array();
      for (const Value& item : value.items()) list.push_back(value_to_json(doc, item));
      return list;
    }
  }
  return nullptr;
}

ordered_json node_to_json(const LinkedDataDoc& doc, const Node& node) {
  ordered_json out;
  out["@id"] = node.id;
  if (node.types.size() == 1) {
    out["@type"] = node.types.front();
  } else if (!node.types.empty()) {
    out["@type"] = node.types;
  }
  for (const auto& [key, value] : node.properties) {
    ordered_json jv = value_to_json(doc, value);
    if (!out.contains(key)) {
      out[key] = std::move(jv);
      continue;
    }
    // repeated property folds into an array
    if (!out[key].is_array()) {
      ordered_json arr = ordered_json::array();
      arr.push_back(out[key]);
      out[key] = std::move(arr);
    }
    out[key].push_back(std::move(jv));
  }
  return out;
}

}  // namespace

std::string serialize_jsonld(const LinkedDataDoc& doc) {
  ordered_json root;
  ordered_json ctx;
  for (const auto& [prefix, iri] : doc.context) ctx[prefix] = iri;
  root["@context"] = ctx;
  ordered_json graph = ordered_json::array();
  for (const Node& node : doc.nodes) graph.push_back(node_to_json(doc, node));
  root["@graph"] = graph;
  return root.dump(2) + "\n";
}

namespace {

Value json_to_value(const ordered_json& j) {
  if (j.is_string()) return Value::string(j.get<std::string>());
  if (j.is_number_integer()) return Value::integer(j.get<std::int64_t>());
  if (j.is_boolean()) return Value::boolean(j.get<bool>());
  if (j.is_number()) return Value::decimal(j.dump());
  if (j.is_object()) {
    if (j.contains("@value")) {
      const auto& v = j["@value"];
      std::string type = j.value("@type", "");
      if (type == iri::xsd_decimal || type.ends_with("#decimal") || type.ends_with("#float") ||
          type.ends_with("#double")) {
        return Value::decimal(v.is_string() ? v.get<std::string>() : v.dump());
      }
      if (v.is_string()) return Value::string(v.get<std::string>());
      if (v.is_number_integer()) return Value::integer(v.get<std::int64_t>());
      if (v.is_boolean()) return Value::boolean(v.get<bool>());
      return Value::string(v.dump());
    }
    if (j.contains("@id")) return Value::ref(j["@id"].get<std::string>());
  }
  if (j.is_array()) {
    std::vector<Value> items;
    for (const auto& item : j) items.push_back(json_to_value(item));
    return Value::list(std::move(items));
  }
  fail(Errc::UnknownTerm, "cannot interpret JSON-LD value " + j.dump());
}

Node json_to_node(const ordered_json& j) {
  Node node;
  node.id = j.value("@id", "");
  if (j.contains("@type")) {
    const auto& t = j["@type"];
    if (t.is_array()) {
      for (const auto& item : t) node.types.push_back(item.get<std::string>());
    } else {
      node.types.push_back(t.get<std::string>());
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "@id" || key == "@type") continue;
    node.add(key, json_to_value(value));
  }
  return node;
}

}  // namespace

LinkedDataDoc parse_jsonld(const std::string& bytes) {
  ordered_json root = ordered_json::parse(bytes);
  LinkedDataDoc doc;
  if (root.is_object() && root.contains("@context") && root["@context"].is_object()) {
    for (const auto& [prefix, iri] : root["@context"].items()) {
      if (iri.is_string()) doc.context.emplace_back(prefix, iri.get<std::string>());
    }
  }
  const ordered_json* nodes = nullptr;
  if (root.is_array()) {
    nodes = &root;
  } else if (root.is_object() && root.contains("@graph")) {
    nodes = &root["@graph"];
  }
  if (nodes) {
    for (const auto& item : *nodes) doc.nodes.push_back(json_to_node(item));
  } else if (root.is_object()) {
    doc.nodes.push_back(json_to_node(root));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// N-Triples
// ---------------------------------------------------------------------------

namespace {

std::string nt_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c; break;
    }
  }
  return out;
}

std::string nt_term(const LinkedDataDoc& doc, const std::string& id) {
  if (id.starts_with("_:")) return id;
  return "<" + doc.expand(id) + ">";
}

void nt_triple(std::string& out, const LinkedDataDoc& doc, const std::string& subject,
               const std::string& predicate, const Value& value) {
  if (value.kind() == Value::Kind::List) {
    for (const Value& item : value.items()) nt_triple(out, doc, subject, predicate, item);
    return;
  }
  out += nt_term(doc, subject) + " <" + doc.expand(predicate) + "> ";
  switch (value.kind()) {
    case Value::Kind::String:
      out += "\"" + nt_escape(value.text()) + "\"";
      break;
    case Value::Kind::Integer:
      out += "\"" + std::to_string(value.integer_value()) +
             "\"^^<http://www.w3.org/2001/XMLSchema#integer>";
      break;
    case Value::Kind::Decimal:
      out += "\"" + value.text() + "\"^^<" + std::string(iri::xsd_decimal) + ">";
      break;
    case Value::Kind::Boolean:
      out += std::string("\"") + (value.boolean_value() ? "true" : "false") +
             "\"^^<http://www.w3.org/2001/XMLSchema#boolean>";
      break;
    case Value::Kind::Ref:
      out += nt_term(doc, value.text());
      break;
    case Value::Kind::List:
      break;
  }
  out += " .\n";
}

}  // namespace

std::string serialize_ntriples(const LinkedDataDoc& doc) {
  static const std::string rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
  std::string out;
  for (const Node& node : doc.nodes) {
    for (const std::string& type : node.types) {
      out += nt_term(doc, node.id) + " <" + rdf_type + "> " + nt_term(doc, doc.expand(type)) + " .\n";
    }
    for (const auto& [key, value] : node.properties) nt_triple(out, doc, node.id, key, value);
  }
  return out;
}

}  // namespace fairgauge::linked_data
