#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairgauge::linked_data {

// A property value: typed literal, node/IRI reference, or a list of values.
class Value {
 public:
  enum class Kind { String, Integer, Decimal, Boolean, Ref, List };

  static Value string(std::string text);
  static Value integer(std::int64_t value);
  // Decimal keeps its lexical form so values round-trip byte-exactly.
  static Value decimal(std::string lexical);
  static Value boolean(bool value);
  static Value ref(std::string id);
  static Value list(std::vector<Value> items);

  Kind kind() const { return kind_; }
  const std::string& text() const { return text_; }  // String/Decimal/Ref
  std::int64_t integer_value() const { return int_; }
  bool boolean_value() const { return bool_; }
  const std::vector<Value>& items() const { return items_; }
  double as_double() const;  // Decimal/Integer

  bool operator==(const Value& other) const;

 private:
  Kind kind_ = Kind::String;
  std::string text_;
  std::int64_t int_ = 0;
  bool bool_ = false;
  std::vector<Value> items_;
};

struct Node {
  std::string id;
  std::vector<std::string> types;
  std::vector<std::pair<std::string, Value>> properties;  // insertion order

  const Value* property(std::string_view name) const;
  void add(std::string name, Value value);
};

// Well-known IRIs used by the quantity-value shape.
namespace iri {
inline constexpr std::string_view qudt_quantity_value = "http://qudt.org/schema/qudt/QuantityValue";
inline constexpr std::string_view qudt_unit = "http://qudt.org/schema/qudt/unit";
inline constexpr std::string_view qudt_value = "http://qudt.org/schema/qudt/value";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
}  // namespace iri

struct LinkedDataDoc {
  std::vector<std::pair<std::string, std::string>> context;  // prefix -> IRI
  std::vector<Node> nodes;

  const Node* find(std::string_view id) const;
  // Expands prefix:local using the context; full IRIs pass through.
  std::string expand(std::string_view name) const;
  std::string next_blank_id() const;  // _:b<n> in first-use order

  // Blank-node references must resolve inside the document; QuantityValue
  // nodes carry exactly a unit reference and a typed decimal value.
  void validate() const;
};

// Canonical JSON-LD bytes: context first, nodes in insertion order,
// properties in insertion order, 2-space indent. Byte-identical across runs.
std::string serialize_jsonld(const LinkedDataDoc& doc);
std::string serialize_ntriples(const LinkedDataDoc& doc);
LinkedDataDoc parse_jsonld(const std::string& bytes);

}  // namespace fairgauge::linked_data
