#include "fairgauge/treemodel.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <vector>

#include "fairgauge/errors.hpp"
#include "util.hpp"

namespace fairgauge::treemodel {

using linked_data::LinkedDataDoc;
using linked_data::Node;
using linked_data::Value;
using ordered_json = nlohmann::ordered_json;

const TreeNode& DecisionTree::node(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) fail(Errc::DanglingChild, "tree node '" + id + "' does not exist");
  return it->second;
}

int DecisionTree::depth() const {
  int max_level = 0;
  for (const auto& [id, node] : nodes) max_level = std::max(max_level, node.level);
  return max_level;
}

void DecisionTree::validate() const {
  if (nodes.empty() || !nodes.count(root)) {
    fail(Errc::DanglingChild, "tree has no root node '" + root + "'");
  }

  std::set<std::string> visited;
  struct Frame {
    std::string id;
    int expected_level;
  };
  std::vector<Frame> frames{{root, nodes.at(root).level}};
  if (nodes.at(root).level != 0) {
    fail(Errc::InvalidNodeLevel, "root node '" + root + "' must be at level 0");
  }
  while (!frames.empty()) {
    Frame frame = frames.back();
    frames.pop_back();
    auto it = nodes.find(frame.id);
    if (it == nodes.end()) fail(Errc::DanglingChild, "child '" + frame.id + "' does not exist");
    const TreeNode& node = it->second;
    if (!visited.insert(frame.id).second) {
      fail(Errc::CycleDetected, "node '" + frame.id + "' is reachable twice");
    }
    if (node.level != frame.expected_level) {
      fail(Errc::InvalidNodeLevel, "node '" + frame.id + "' has level " + std::to_string(node.level) +
                                       ", expected " + std::to_string(frame.expected_level));
    }
    if (!node.is_leaf()) {
      const InternalNode& internal = node.internal();
      if (internal.true_child.empty() || internal.false_child.empty()) {
        fail(Errc::DanglingChild, "internal node '" + frame.id + "' is missing a child");
      }
      frames.push_back({internal.true_child, node.level + 1});
      frames.push_back({internal.false_child, node.level + 1});
    }
  }

  for (const auto& [id, node] : nodes) {
    if (!visited.count(id)) fail(Errc::UnreachableNode, "node '" + id + "' is not reachable from the root");
  }
}

namespace {

TreeNode node_from_json(const ordered_json& j, const std::string& origin) {
  TreeNode node;
  node.id = j.value("id", "");
  if (node.id.empty()) fail(Errc::DanglingChild, "node without id in " + origin);
  node.level = j.value("level", 0);
  if (node.level < 0) fail(Errc::InvalidNodeLevel, "node '" + node.id + "' has negative level");

  bool has_label = j.contains("label");
  bool has_children = j.contains("true") || j.contains("false") || j.contains("feature") || j.contains("threshold");
  if (has_label && has_children) {
    fail(Errc::MixedNodeKind, "node '" + node.id + "' has both a label and children");
  }
  if (has_label) {
    node.data = LeafNode{j["label"].is_string() ? j["label"].get<std::string>() : j["label"].dump()};
    return node;
  }
  if (!has_children) {
    fail(Errc::MixedNodeKind, "node '" + node.id + "' has neither label nor children");
  }
  InternalNode internal;
  internal.feature = j.value("feature", "");
  if (!j.contains("threshold") || !j["threshold"].is_number()) {
    fail(Errc::MixedNodeKind, "internal node '" + node.id + "' needs a numeric threshold");
  }
  internal.threshold = j["threshold"].get<double>();
  internal.true_child = j.value("true", "");
  internal.false_child = j.value("false", "");
  if (internal.true_child.empty() || internal.false_child.empty()) {
    fail(Errc::DanglingChild, "internal node '" + node.id + "' is missing a child");
  }
  node.data = std::move(internal);
  return node;
}

}  // namespace

DecisionTree parse_tree_text(const std::string& json_text, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(Errc::TargetUnreadable, "tree file " + origin + " is not valid JSON: " + e.what());
  }
  DecisionTree tree;
  tree.name = doc.value("name", "tree");
  if (doc.contains("derived_from") && doc["derived_from"].is_string()) {
    tree.derived_from = doc["derived_from"].get<std::string>();
  }
  tree.root = doc.value("root", "");
  if (doc.contains("nodes")) {
    for (const auto& item : doc["nodes"]) {
      TreeNode node = node_from_json(item, origin);
      std::string id = node.id;
      if (!tree.nodes.emplace(id, std::move(node)).second) {
        fail(Errc::CycleDetected, "node '" + id + "' defined twice in " + origin);
      }
    }
  }
  tree.validate();
  return tree;
}

DecisionTree parse_tree(const std::filesystem::path& path) {
  return parse_tree_text(util::read_file(path.string()), path.string());
}

std::string serialize_tree(const DecisionTree& tree) {
  ordered_json doc;
  doc["name"] = tree.name;
  if (tree.derived_from) doc["derived_from"] = *tree.derived_from;
  doc["root"] = tree.root;
  ordered_json nodes = ordered_json::array();
  for (const auto& [id, node] : tree.nodes) {
    ordered_json j;
    j["id"] = node.id;
    j["level"] = node.level;
    if (node.is_leaf()) {
      j["label"] = node.leaf().label;
    } else {
      const InternalNode& internal = node.internal();
      j["feature"] = internal.feature;
      j["threshold"] = internal.threshold;
      j["true"] = internal.true_child;
      j["false"] = internal.false_child;
    }
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

std::string evaluate(const DecisionTree& tree, const FeatureVector& features) {
  const TreeNode* current = &tree.node(tree.root);
  while (!current->is_leaf()) {
    const InternalNode& internal = current->internal();
    auto it = features.find(internal.feature);
    if (it == features.end()) {
      fail(Errc::MissingFeature,
           "feature '" + internal.feature + "' needed by node '" + current->id + "' is absent");
    }
    const std::string& next = it->second <= internal.threshold ? internal.true_child : internal.false_child;
    current = &tree.node(next);
  }
  return current->leaf().label;
}

// ---------------------------------------------------------------------------
// linked-data annotation
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kTreeBaseIri = "http://example.org/decisiontree/";

std::vector<std::string> preorder_ids(const DecisionTree& tree) {
  std::vector<std::string> order;
  std::vector<std::string> stack{tree.root};
  while (!stack.empty()) {
    std::string id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const TreeNode& node = tree.node(id);
    if (!node.is_leaf()) {
      stack.push_back(node.internal().false_child);
      stack.push_back(node.internal().true_child);
    }
  }
  return order;
}

}  // namespace

LinkedDataDoc annotate_tree(const DecisionTree& tree) {
  tree.validate();
  LinkedDataDoc doc;
  doc.context.emplace_back("hpc", "https://github.com/HPC-FAIR/HPC-Ontology#");
  doc.context.emplace_back("qudt", "http://qudt.org/schema/qudt/");
  doc.context.emplace_back("xsd", "http://www.w3.org/2001/XMLSchema#");

  std::vector<std::string> order = preorder_ids(tree);

  Node head;
  head.id = kTreeBaseIri + tree.name;
  head.types.push_back("hpc:DecisionTree");
  head.add("hpc:name", Value::string(tree.name));
  if (tree.derived_from) head.add("hpc:wasDerivedFrom", Value::string(*tree.derived_from));
  std::vector<Value> refs;
  refs.reserve(order.size());
  for (const std::string& id : order) refs.push_back(Value::ref(id));
  head.add("hpc:decisionTreeNode", Value::list(std::move(refs)));
  doc.nodes.push_back(std::move(head));

  for (const std::string& id : order) {
    const TreeNode& tn = tree.node(id);
    Node node;
    node.id = id;
    node.types.push_back("hpc:DecisionTreeNode");
    node.add("hpc:treeNodeLevel", Value::integer(tn.level));
    if (tn.is_leaf()) {
      node.add("hpc:hasChildNode", Value::boolean(false));
      node.add("hpc:decisionLabel", Value::string(tn.leaf().label));
    } else {
      const InternalNode& internal = tn.internal();
      node.add("hpc:hasChildNode", Value::boolean(true));
      node.add("hpc:decisionFeature", Value::string(internal.feature));
      node.add("hpc:relationOp", Value::string("<="));
      node.add("hpc:relationValue", Value::decimal(util::decimal_text(internal.threshold)));
      node.add("hpc:trueNode", Value::ref(internal.true_child));
      node.add("hpc:falseNode", Value::ref(internal.false_child));
    }
    doc.nodes.push_back(std::move(node));
  }
  return doc;
}

namespace {

bool node_has_type(const LinkedDataDoc& doc, const Node& node, std::string_view qname) {
  std::string expanded = doc.expand(qname);
  return std::any_of(node.types.begin(), node.types.end(),
                     [&](const std::string& t) { return doc.expand(t) == expanded; });
}

std::string ref_text(const Value& v, const char* what) {
  if (v.kind() != Value::Kind::Ref && v.kind() != Value::Kind::String) {
    fail(Errc::UnknownTerm, std::string(what) + " must be a node reference");
  }
  return v.text();
}

}  // namespace

DecisionTree parse_annotated(const LinkedDataDoc& doc) {
  const Node* head = nullptr;
  for (const Node& node : doc.nodes) {
    if (node_has_type(doc, node, "hpc:DecisionTree")) {
      head = &node;
      break;
    }
  }
  if (!head) fail(Errc::DanglingChild, "document has no hpc:DecisionTree node");

  DecisionTree tree;
  if (const Value* name = head->property("hpc:name")) {
    tree.name = name->text();
  } else {
    tree.name = head->id;
  }
  if (const Value* derived = head->property("hpc:wasDerivedFrom")) tree.derived_from = derived->text();

  std::vector<std::string> member_ids;
  if (const Value* members = head->property("hpc:decisionTreeNode")) {
    if (members->kind() == Value::Kind::List) {
      for (const Value& item : members->items()) member_ids.push_back(ref_text(item, "decisionTreeNode"));
    } else {
      member_ids.push_back(ref_text(*members, "decisionTreeNode"));
    }
  }
  if (member_ids.empty()) fail(Errc::DanglingChild, "decision tree lists no nodes");

  static const std::set<std::string> known = {
      "hpc:treeNodeLevel", "hpc:hasChildNode", "hpc:decisionFeature", "hpc:relationOp",
      "hpc:relationValue", "hpc:trueNode",     "hpc:falseNode",       "hpc:decisionLabel",
  };

  for (const std::string& id : member_ids) {
    const Node* n = doc.find(id);
    if (!n) fail(Errc::DanglingChild, "referenced tree node '" + id + "' is not in the document");
    if (!node_has_type(doc, *n, "hpc:DecisionTreeNode")) {
      fail(Errc::UnknownTerm, "node '" + id + "' is not typed hpc:DecisionTreeNode");
    }
    for (const auto& [key, value] : n->properties) {
      if (!known.count(key)) fail(Errc::UnknownTerm, "unexpected property " + key + " on node '" + id + "'");
    }

    TreeNode tn;
    tn.id = id;
    if (const Value* level = n->property("hpc:treeNodeLevel")) {
      tn.level = static_cast<int>(level->integer_value());
    }

    const Value* label = n->property("hpc:decisionLabel");
    const Value* true_node = n->property("hpc:trueNode");
    const Value* false_node = n->property("hpc:falseNode");
    const Value* feature = n->property("hpc:decisionFeature");
    bool childless = !true_node && !false_node && !feature;

    if (label && !childless) {
      fail(Errc::MixedNodeKind, "node '" + id + "' has both a decision label and children");
    }
    if (!label && childless) {
      fail(Errc::MixedNodeKind, "childless node '" + id + "' has no decision label");
    }

    if (label) {
      tn.data = LeafNode{label->text()};
    } else {
      if (!feature || !true_node || !false_node) {
        fail(Errc::DanglingChild, "internal node '" + id + "' lacks feature or children");
      }
      InternalNode internal;
      internal.feature = feature->text();
      const Value* threshold = n->property("hpc:relationValue");
      if (!threshold) fail(Errc::DanglingChild, "internal node '" + id + "' lacks a relation value");
      internal.threshold = threshold->as_double();
      internal.true_child = ref_text(*true_node, "trueNode");
      internal.false_child = ref_text(*false_node, "falseNode");

      // normalize to the <= convention: '>'-style conditions swap branches
      std::string op = "<=";
      if (const Value* rel = n->property("hpc:relationOp")) op = rel->text();
      if (op == ">" || op == ">=") {
        std::swap(internal.true_child, internal.false_child);
      } else if (op != "<=" && op != "<") {
        fail(Errc::UnknownTerm, "unsupported relation operator '" + op + "' on node '" + id + "'");
      }
      tn.data = std::move(internal);
    }
    if (!tree.nodes.emplace(id, std::move(tn)).second) {
      fail(Errc::CycleDetected, "node '" + id + "' listed twice");
    }
  }

  tree.root = member_ids.front();
  // the root is the member no other node references
  std::set<std::string> referenced;
  for (const auto& [id, node] : tree.nodes) {
    if (!node.is_leaf()) {
      referenced.insert(node.internal().true_child);
      referenced.insert(node.internal().false_child);
    }
  }
  for (const std::string& id : member_ids) {
    if (!referenced.count(id)) {
      tree.root = id;
      break;
    }
  }

  tree.validate();
  return tree;
}

}  // namespace fairgauge::treemodel
