#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qstirling/coding.hpp"
#include "qstirling/core.hpp"
#include "qstirling/multiset.hpp"

namespace qstirling {

struct TreeEdge;

// A (candidate) plane tree node: its label and the ordered edges to its
// children. Edges point towards the root; the edge label belongs to the
// edge starting at the child.
struct TreeNode {
  VertexLabel label;
  std::vector<TreeEdge> children;

  bool is_leaf() const { return children.empty(); }
};

struct TreeEdge {
  int label = 0;
  TreeNode node;
};

bool operator==(const TreeNode& a, const TreeNode& b);
bool operator==(const TreeEdge& a, const TreeEdge& b);
// Depth-first lexicographic order on (label, children as (edge label, subtree)).
std::strong_ordering operator<=>(const TreeNode& a, const TreeNode& b);
std::strong_ordering operator<=>(const TreeEdge& a, const TreeEdge& b);

// Compact text form, e.g. "0(7:6(8:9,6:s6),7:7)".
std::string to_string(const TreeNode& node);

struct TreeViolation {
  // 0 = structural (edge count), 1..4 = the VE-tree labeling conditions:
  // 1 vertex label set, 2 singleton leaves, 3 edge multiset/adjacency,
  // 4 compatibility of edge and vertex labels.
  int condition = 0;
  std::string message;
};

// Checks every VE-tree condition; an empty result means the candidate is a
// member of T_M. Never throws on malformed candidates.
std::vector<TreeViolation> validate_tree(const TreeNode& root, const MultisetSpec& m);

// A validated VE-labeled plane tree.
class VETree {
 public:
  // Throws InvalidInput listing the violations if the candidate is invalid.
  VETree(MultisetSpec m, TreeNode root);

  const MultisetSpec& multiset() const { return multiset_; }
  const TreeNode& root() const { return root_; }
  int root_label() const { return root_.label.value; }
  bool is_regular() const { return root_label() == 0; }

  friend bool operator==(const VETree&, const VETree&) = default;
  friend auto operator<=>(const VETree& a, const VETree& b) {
    if (auto c = a.root_label() <=> b.root_label(); c != 0) return c;
    return a.root_ <=> b.root_;
  }

 private:
  MultisetSpec multiset_;
  TreeNode root_;
};

struct TreeStats {
  int cdes = 0;
  int casc = 0;
  int leaf_star = 0;

  auto operator<=>(const TreeStats&) const = default;
};

TreeStats tree_stats(const VETree& t);

// For every integer vertex, the left-to-right word of distinct labels of the
// edges ending at it (empty for leaves).
std::map<int, Word> edge_words(const VETree& t);

// Backtracking generator built directly from the labeling conditions: each
// value's edges form one sibling group hung below an integer vertex, and the
// groups at each vertex are ordered in every possible way. Sorted by root
// label, then depth-first lexicographically.
std::vector<VETree> enumerate_trees(const MultisetSpec& m, int max_total = kDefaultMaxTotal);

// Parent function of a rooted VE-graph: every vertex except the sink(s) maps
// to its integer parent label.
using ParentMap = std::map<VertexLabel, int>;

// A VE-tree with sibling order forgotten. Edge labels are implied by the
// root label's coding, so the parent function is a canonical form.
class UnorderedVETree {
 public:
  // Throws InvalidInput unless (root, parent) is a tree satisfying the
  // order-free labeling conditions.
  UnorderedVETree(MultisetSpec m, int root, ParentMap parent);

  const MultisetSpec& multiset() const { return multiset_; }
  int root_label() const { return root_; }
  const ParentMap& parent() const { return parent_; }

  // Canonical plane representative: children sorted by (edge label, vertex label).
  TreeNode to_node() const;

  friend bool operator==(const UnorderedVETree&, const UnorderedVETree&) = default;
  friend auto operator<=>(const UnorderedVETree&, const UnorderedVETree&) = default;

 private:
  MultisetSpec multiset_;
  int root_ = 0;
  ParentMap parent_;
};

UnorderedVETree forget_order(const VETree& t);

// Every unordered tree over m, sorted (root label first).
std::vector<UnorderedVETree> enumerate_unordered_trees(const MultisetSpec& m, int max_total = kDefaultMaxTotal);

// Every tree obtained by rearranging the edges ending at each vertex (equal
// labels move as one block), sorted.
std::vector<VETree> class_of(const VETree& t);

// prod_v d_v! with d_v the number of distinct labels of edges ending at v.
std::uint64_t class_size(const VETree& t);

// Functional VE-graph consistent with the standard coding: vertex 0 is the
// only vertex without a parent.
class RegularGraph {
 public:
  // Throws InvalidInput on a malformed parent function.
  RegularGraph(MultisetSpec m, ParentMap parent);

  const MultisetSpec& multiset() const { return multiset_; }
  const ParentMap& parent() const { return parent_; }
  int parent_of(VertexLabel v) const { return parent_.at(v); }

  // True if following parents from every vertex reaches 0.
  bool is_tree() const;

  friend bool operator==(const RegularGraph&, const RegularGraph&) = default;
  friend auto operator<=>(const RegularGraph&, const RegularGraph&) = default;

 private:
  MultisetSpec multiset_;
  ParentMap parent_;
};

// All regular graphs over m: one parent per standard-coding class, k^n in total.
std::vector<RegularGraph> enumerate_regular_graphs(const MultisetSpec& m,
                                                   int max_total = kDefaultMaxTotal);

// For each integer vertex i, the number of distinct edge labels ending at i.
std::vector<int> distinct_label_counts(const UnorderedVETree& t);
std::vector<int> distinct_label_counts(const RegularGraph& g);

// Vertex set [M-n]_0 plus singletons, sorted.
std::vector<VertexLabel> vertex_labels(const MultisetSpec& m);

}  // namespace qstirling
