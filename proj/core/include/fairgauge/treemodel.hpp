#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "fairgauge/linked_data.hpp"

namespace fairgauge::treemodel {

struct InternalNode {
  std::string feature;
  double threshold = 0.0;
  std::string true_child;   // taken when feature value <= threshold
  std::string false_child;
};

struct LeafNode {
  std::string label;
};

struct TreeNode {
  std::string id;
  int level = 0;
  std::variant<InternalNode, LeafNode> data;

  bool is_leaf() const { return std::holds_alternative<LeafNode>(data); }
  const InternalNode& internal() const { return std::get<InternalNode>(data); }
  const LeafNode& leaf() const { return std::get<LeafNode>(data); }
};

struct DecisionTree {
  std::string name;
  std::optional<std::string> derived_from;
  std::string root;
  std::map<std::string, TreeNode> nodes;

  const TreeNode& node(const std::string& id) const;
  int depth() const;
  // Root reachable and acyclic, no dangling children, leaf/internal shape
  // consistent, child level = parent level + 1.
  void validate() const;
};

using FeatureVector = std::map<std::string, double>;

// Native format: JSON with keys name, derived_from, root,
// nodes = [{id, level, feature?, threshold?, true?, false?, label?}].
DecisionTree parse_tree(const std::filesystem::path& path);
DecisionTree parse_tree_text(const std::string& json_text, const std::string& origin);
std::string serialize_tree(const DecisionTree& tree);

// Root-to-leaf traversal: value <= threshold goes to the true (left) child.
std::string evaluate(const DecisionTree& tree, const FeatureVector& features);

linked_data::LinkedDataDoc annotate_tree(const DecisionTree& tree);
DecisionTree parse_annotated(const linked_data::LinkedDataDoc& doc);

}  // namespace fairgauge::treemodel
