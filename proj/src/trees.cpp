#include "qstirling/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "qstirling/errors.hpp"

namespace qstirling {

// ------------------------------------------------------------- tree nodes

bool operator==(const TreeNode& a, const TreeNode& b) {
  return a.label == b.label && a.children == b.children;
}

bool operator==(const TreeEdge& a, const TreeEdge& b) { return a.label == b.label && a.node == b.node; }

std::strong_ordering operator<=>(const TreeEdge& a, const TreeEdge& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  return a.node <=> b.node;
}

std::strong_ordering operator<=>(const TreeNode& a, const TreeNode& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(),
                                                b.children.begin(), b.children.end());
}

std::string to_string(const TreeNode& node) {
  std::ostringstream os;
  os << to_string(node.label);
  if (!node.children.empty()) {
    os << '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i > 0) os << ',';
      os << node.children[i].label << ':' << to_string(node.children[i].node);
    }
    os << ')';
  }
  return os.str();
}

std::vector<VertexLabel> vertex_labels(const MultisetSpec& m) {
  std::vector<VertexLabel> out;
  for (int i = 0; i <= m.excess(); ++i) out.push_back(VertexLabel::integer(i));
  for (int v : m.singletons()) out.push_back(VertexLabel::singleton(v));
  return out;
}

// -------------------------------------------------------------- validation

namespace {

struct FlatEdge {
  int label;
  VertexLabel start;   // child end
  VertexLabel finish;  // parent end
  std::size_t sibling_index;
  const TreeNode* child;
};

void flatten(const TreeNode& node, std::vector<FlatEdge>& edges, std::vector<const TreeNode*>& nodes) {
  nodes.push_back(&node);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const auto& e = node.children[i];
    edges.push_back({e.label, e.node.label, node.label, i, &e.node});
    flatten(e.node, edges, nodes);
  }
}

}  // namespace

std::vector<TreeViolation> validate_tree(const TreeNode& root, const MultisetSpec& m) {
  std::vector<TreeViolation> out;
  auto report = [&](int condition, std::string message) { out.push_back({condition, std::move(message)}); };

  std::vector<FlatEdge> edges;
  std::vector<const TreeNode*> nodes;
  flatten(root, edges, nodes);

  int expected_edges = 0;
  for (int v = 1; v <= m.n(); ++v) expected_edges += m.multiplicity(v) > 1 ? m.multiplicity(v) - 1 : 1;
  if (static_cast<int>(edges.size()) != expected_edges) {
    report(0, "tree has " + std::to_string(edges.size()) + " edges, expected " +
                  std::to_string(expected_edges));
  }

  // (1) vertex labels are distinct and equal [M-n]_0 together with S_M.
  std::set<VertexLabel> seen;
  for (const TreeNode* node : nodes) {
    if (!seen.insert(node->label).second) report(1, "vertex label " + to_string(node->label) + " repeated");
  }
  const auto expected = vertex_labels(m);
  const std::set<VertexLabel> expected_set(expected.begin(), expected.end());
  for (const auto& label : seen) {
    if (!expected_set.count(label)) report(1, "vertex label " + to_string(label) + " not allowed");
  }
  for (const auto& label : expected_set) {
    if (!seen.count(label)) report(1, "vertex label " + to_string(label) + " missing");
  }

  // (2) s_i labels exactly the leaves starting an edge labeled i.
  if (root.label.is_singleton()) report(2, "root carries singleton label " + to_string(root.label));
  for (const auto& e : edges) {
    const bool singleton_value = m.multiplicity(e.label) == 1;
    if (e.start.is_singleton()) {
      if (!e.child->is_leaf()) report(2, to_string(e.start) + " is not a leaf");
      if (e.start.value != e.label) {
        report(2, to_string(e.start) + " starts an edge labeled " + std::to_string(e.label));
      }
    } else if (singleton_value && e.child->is_leaf()) {
      report(2, "leaf " + to_string(e.start) + " starts singleton edge " + std::to_string(e.label) +
                    " but is not labeled s" + std::to_string(e.label));
    } else if (singleton_value) {
      report(2, "edge " + std::to_string(e.label) + " of a singleton must start at a leaf");
    }
  }

  // (3) edge labels form M minus one copy of each repeated value, and equal
  // labels sit on adjacent sibling edges.
  std::map<int, std::vector<const FlatEdge*>> by_label;
  for (const auto& e : edges) by_label[e.label].push_back(&e);
  for (const auto& [label, group] : by_label) {
    const int mult = m.multiplicity(label);
    if (mult == 0) {
      report(3, "edge label " + std::to_string(label) + " not in the multiset");
      continue;
    }
    const int want = mult > 1 ? mult - 1 : 1;
    if (static_cast<int>(group.size()) != want) {
      report(3, "edge label " + std::to_string(label) + " used " + std::to_string(group.size()) +
                    " times, expected " + std::to_string(want));
    }
    bool siblings = std::all_of(group.begin(), group.end(),
                                [&](const FlatEdge* e) { return e->finish == group.front()->finish; });
    bool adjacent = siblings;
    for (std::size_t i = 1; adjacent && i < group.size(); ++i) {
      adjacent = group[i]->sibling_index == group[i - 1]->sibling_index + 1;
    }
    if (!adjacent) report(3, "edges labeled " + std::to_string(label) + " are not adjacent siblings");
  }
  for (int v = 1; v <= m.n(); ++v) {
    if (!by_label.count(v)) report(3, "no edge labeled " + std::to_string(v));
  }

  // (4) compatibility between edge labels and integer starting vertices.
  for (const auto& [label, group] : by_label) {
    for (std::size_t i = 1; i < group.size(); ++i) {
      if (!(group[i - 1]->start < group[i]->start)) {
        report(4, "edges labeled " + std::to_string(label) + " start at " + to_string(group[i - 1]->start) +
                      " then " + to_string(group[i]->start));
      }
    }
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto& x = edges[a];
      const auto& y = edges[b];
      if (x.label == y.label || !x.start.is_integer() || !y.start.is_integer()) continue;
      if ((x.label < y.label) != (x.start.value < y.start.value)) {
        report(4, "edge " + std::to_string(x.label) + " from " + to_string(x.start) + " and edge " +
                      std::to_string(y.label) + " from " + to_string(y.start) + " are incompatible");
      }
    }
  }
  return out;
}

VETree::VETree(MultisetSpec m, TreeNode root) : multiset_(std::move(m)), root_(std::move(root)) {
  const auto violations = validate_tree(root_, multiset_);
  if (!violations.empty()) {
    std::string msg = "invalid VE-tree:";
    for (const auto& v : violations) msg += " [condition " + std::to_string(v.condition) + "] " + v.message + ";";
    throw InvalidInput(msg);
  }
}

// -------------------------------------------------------------- statistics

TreeStats tree_stats(const VETree& t) {
  TreeStats s;
  std::function<void(const TreeNode&, std::optional<int>)> walk = [&](const TreeNode& node,
                                                                      std::optional<int> incoming) {
    Word letters;
    if (incoming) letters.push_back(*incoming);
    for (const auto& e : node.children) letters.push_back(e.label);
    if (!incoming) {
      const auto w = word_stats(letters);
      s.cdes += w.des;
      s.casc += w.asc;
    } else {
      const auto c = cyclic_stats(letters);
      s.cdes += c.cdes;
      s.casc += c.casc;
    }
    if (node.is_leaf() && node.label.is_integer() && incoming) ++s.leaf_star;
    for (const auto& e : node.children) walk(e.node, e.label);
  };
  walk(t.root(), std::nullopt);
  return s;
}

std::map<int, Word> edge_words(const VETree& t) {
  std::map<int, Word> out;
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    if (node.label.is_integer()) {
      Word& w = out[node.label.value];
      for (const auto& e : node.children) {
        if (w.empty() || w.back() != e.label) w.push_back(e.label);
      }
    }
    for (const auto& e : node.children) walk(e.node);
  };
  walk(t.root());
  return out;
}

// --------------------------------------------------------------- generator

namespace {

// Sibling groups of a tree over m rooted at r: group v holds the starting
// vertices of the edges labeled v, in increasing order.
std::vector<std::vector<VertexLabel>> sibling_groups(const Coding& coding) {
  const auto& m = coding.multiset();
  std::vector<std::vector<VertexLabel>> groups(static_cast<std::size_t>(m.n()));
  for (int v = 1; v <= m.n(); ++v) {
    auto& g = groups[static_cast<std::size_t>(v - 1)];
    if (m.multiplicity(v) == 1) {
      g.push_back(VertexLabel::singleton(v));
    } else {
      for (int j = 2; j <= m.multiplicity(v); ++j) g.push_back(*coding.code({v, j}));
    }
  }
  return groups;
}

TreeNode build_node(VertexLabel label, const std::map<int, std::vector<int>>& groups_at,
                    const std::vector<std::vector<VertexLabel>>& groups) {
  TreeNode node{label, {}};
  if (!label.is_integer()) return node;
  auto it = groups_at.find(label.value);
  if (it == groups_at.end()) return node;
  for (int v : it->second) {
    for (const auto& child : groups[static_cast<std::size_t>(v - 1)]) {
      node.children.push_back({v, build_node(child, groups_at, groups)});
    }
  }
  return node;
}

// Calls visit for every ordering of the groups hung at each vertex.
void for_each_arrangement(std::map<int, std::vector<int>> groups_at,
                          const std::function<void(const std::map<int, std::vector<int>>&)>& visit) {
  std::vector<int> vertices;
  for (auto& [x, gs] : groups_at) {
    std::sort(gs.begin(), gs.end());
    vertices.push_back(x);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == vertices.size()) {
      visit(groups_at);
      return;
    }
    auto& gs = groups_at[vertices[idx]];
    std::sort(gs.begin(), gs.end());
    do {
      rec(idx + 1);
    } while (std::next_permutation(gs.begin(), gs.end()));
  };
  rec(0);
}

}  // namespace

namespace {

// Calls visit(r, hang) for every root r and every placement of the sibling
// groups (hang[v-1] = vertex below which value v's edges end) that yields a tree.
void for_each_tree_shape(const MultisetSpec& m,
                         const std::function<void(int, const std::vector<std::vector<VertexLabel>>&,
                                                  const std::vector<int>&)>& visit) {
  const int top = m.excess();
  for (int r = 0; r <= top; ++r) {
    const Coding coding(m, r);
    const auto groups = sibling_groups(coding);
    // owner[x] = value whose group contains integer vertex x (0 for the root).
    std::vector<int> owner(static_cast<std::size_t>(top + 1), 0);
    for (int v = 1; v <= m.n(); ++v) {
      for (const auto& x : groups[static_cast<std::size_t>(v - 1)]) {
        if (x.is_integer()) owner[static_cast<std::size_t>(x.value)] = v;
      }
    }
    std::vector<int> hang(static_cast<std::size_t>(m.n()), 0);
    std::function<void(int)> assign = [&](int v) {
      if (v > m.n()) {
        // Every group must reach the root through its ancestors.
        for (int g = 1; g <= m.n(); ++g) {
          int cur = g;
          for (int steps = 0; cur != 0; ++steps) {
            if (steps > m.n()) return;
            cur = owner[static_cast<std::size_t>(hang[static_cast<std::size_t>(cur - 1)])];
          }
        }
        visit(r, groups, hang);
        return;
      }
      for (int x = 0; x <= top; ++x) {
        if (owner[static_cast<std::size_t>(x)] == v) continue;
        hang[static_cast<std::size_t>(v - 1)] = x;
        assign(v + 1);
      }
    };
    assign(1);
  }
}

}  // namespace

std::vector<VETree> enumerate_trees(const MultisetSpec& m, int max_total) {
  check_guard(m, max_total);
  if (m.n() == 0) throw InvalidInput("trees need a nonempty multiset");
  std::vector<VETree> out;
  for_each_tree_shape(m, [&](int r, const std::vector<std::vector<VertexLabel>>& groups, const std::vector<int>& hang) {
    std::map<int, std::vector<int>> groups_at;
    for (int g = 1; g <= m.n(); ++g) groups_at[hang[static_cast<std::size_t>(g - 1)]].push_back(g);
    for_each_arrangement(groups_at, [&](const std::map<int, std::vector<int>>& arrangement) {
      out.emplace_back(m, build_node(VertexLabel::integer(r), arrangement, groups));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnorderedVETree> enumerate_unordered_trees(const MultisetSpec& m, int max_total) {
  check_guard(m, max_total);
  if (m.n() == 0) throw InvalidInput("trees need a nonempty multiset");
  std::vector<UnorderedVETree> out;
  for_each_tree_shape(m, [&](int r, const std::vector<std::vector<VertexLabel>>& groups, const std::vector<int>& hang) {
    ParentMap parent;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (const auto& x : groups[g]) parent[x] = hang[g];
    }
    out.emplace_back(m, r, std::move(parent));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> label_counts(const MultisetSpec& m, int r, const ParentMap& parent) {
  const Coding coding(m, r);
  std::vector<std::set<int>> labels(static_cast<std::size_t>(m.block_count()));
  for (const auto& [v, p] : parent) labels[static_cast<std::size_t>(p)].insert(coding.edge_label(v));
  std::vector<int> out;
  for (const auto& s : labels) out.push_back(static_cast<int>(s.size()));
  return out;
}

}  // namespace

std::vector<int> distinct_label_counts(const UnorderedVETree& t) {
  return label_counts(t.multiset(), t.root_label(), t.parent());
}

std::vector<int> distinct_label_counts(const RegularGraph& g) { return label_counts(g.multiset(), 0, g.parent()); }

// ------------------------------------------------------- unordered / class

namespace {

int edge_label_for(const Coding& coding, VertexLabel v) { return coding.edge_label(v); }

bool reaches(const ParentMap& parent, VertexLabel start, int target, std::size_t bound) {
  VertexLabel cur = start;
  for (std::size_t steps = 0; steps <= bound; ++steps) {
    if (cur.is_integer() && cur.value == target) return true;
    auto it = parent.find(cur);
    if (it == parent.end()) return false;
    cur = VertexLabel::integer(it->second);
  }
  return false;
}

void check_parent_function(const MultisetSpec& m, const ParentMap& parent, int sink, const char* what) {
  const auto labels = vertex_labels(m);
  for (const auto& v : labels) {
    const bool is_sink = v.is_integer() && v.value == sink;
    const bool has = parent.count(v) > 0;
    if (is_sink && has) throw InvalidInput(std::string(what) + ": vertex " + to_string(v) + " must have no parent");
    if (!is_sink && !has) throw InvalidInput(std::string(what) + ": vertex " + to_string(v) + " has no parent");
  }
  if (parent.size() + 1 != labels.size()) throw InvalidInput(std::string(what) + ": unknown vertices in parent map");
  for (const auto& [v, p] : parent) {
    if (p < 0 || p > m.excess()) {
      throw InvalidInput(std::string(what) + ": parent " + std::to_string(p) + " of " + to_string(v) + " out of range");
    }
  }
}

void check_classes_share_parent(const Coding& coding, const ParentMap& parent, const char* what) {
  for (const auto& cls : congruence_classes(coding)) {
    for (int x : cls) {
      auto a = parent.find(VertexLabel::integer(x));
      auto b = parent.find(VertexLabel::integer(cls.front()));
      if (a == parent.end() || b == parent.end()) continue;
      if (a->second != b->second) {
        throw InvalidInput(std::string(what) + ": congruent vertices " + std::to_string(cls.front()) + " and " +
                           std::to_string(x) + " have different parents");
      }
    }
  }
}

}  // namespace

UnorderedVETree::UnorderedVETree(MultisetSpec m, int root, ParentMap parent)
    : multiset_(std::move(m)), root_(root), parent_(std::move(parent)) {
  if (root_ < 0 || root_ > multiset_.excess()) throw InvalidInput("unordered tree root out of range");
  check_parent_function(multiset_, parent_, root_, "unordered tree");
  const Coding coding(multiset_, root_);
  check_classes_share_parent(coding, parent_, "unordered tree");
  for (const auto& [v, p] : parent_) {
    if (!reaches(parent_, v, root_, parent_.size())) {
      throw InvalidInput("unordered tree: vertex " + to_string(v) + " does not reach the root");
    }
  }
}

TreeNode UnorderedVETree::to_node() const {
  const Coding coding(multiset_, root_);
  std::map<int, std::vector<std::pair<int, VertexLabel>>> kids;
  for (const auto& [v, p] : parent_) kids[p].push_back({edge_label_for(coding, v), v});
  for (auto& [p, list] : kids) std::sort(list.begin(), list.end());
  std::function<TreeNode(VertexLabel)> build = [&](VertexLabel label) {
    TreeNode node{label, {}};
    if (label.is_integer()) {
      auto it = kids.find(label.value);
      if (it != kids.end()) {
        for (const auto& [edge, child] : it->second) node.children.push_back({edge, build(child)});
      }
    }
    return node;
  };
  return build(VertexLabel::integer(root_));
}

UnorderedVETree forget_order(const VETree& t) {
  ParentMap parent;
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    for (const auto& e : node.children) {
      parent[e.node.label] = node.label.value;
      walk(e.node);
    }
  };
  walk(t.root());
  return UnorderedVETree(t.multiset(), t.root_label(), std::move(parent));
}

namespace {

// Groups of equal-labeled child edges at every integer vertex, in tree order.
std::map<int, std::vector<std::vector<TreeEdge>>> child_groups(const TreeNode& root) {
  std::map<int, std::vector<std::vector<TreeEdge>>> out;
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    if (node.label.is_integer()) {
      auto& groups = out[node.label.value];
      for (const auto& e : node.children) {
        if (groups.empty() || groups.back().front().label != e.label) groups.emplace_back();
        TreeEdge shallow{e.label, TreeNode{e.node.label, {}}};
        groups.back().push_back(std::move(shallow));
      }
    }
    for (const auto& e : node.children) walk(e.node);
  };
  walk(root);
  return out;
}

TreeNode rebuild(VertexLabel label, const std::map<int, std::vector<std::vector<TreeEdge>>>& groups,
                 const std::map<int, std::vector<std::size_t>>& order) {
  TreeNode node{label, {}};
  if (!label.is_integer()) return node;
  auto it = groups.find(label.value);
  if (it == groups.end()) return node;
  const auto& perm = order.at(label.value);
  for (std::size_t g : perm) {
    for (const auto& e : it->second[g]) node.children.push_back({e.label, rebuild(e.node.label, groups, order)});
  }
  return node;
}

}  // namespace

std::vector<VETree> class_of(const VETree& t) {
  const auto groups = child_groups(t.root());
  std::map<int, std::vector<std::size_t>> order;
  std::vector<int> vertices;
  for (const auto& [x, gs] : groups) {
    std::vector<std::size_t> idx(gs.size());
    std::iota(idx.begin(), idx.end(), 0);
    order[x] = idx;
    vertices.push_back(x);
  }
  std::vector<VETree> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vertices.size()) {
      out.emplace_back(t.multiset(), rebuild(t.root().label, groups, order));
      return;
    }
    auto& perm = order[vertices[i]];
    std::sort(perm.begin(), perm.end());
    do {
      rec(i + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t class_size(const VETree& t) {
  std::uint64_t size = 1;
  for (const auto& [x, word] : edge_words(t)) {
    for (std::uint64_t f = 2; f <= word.size(); ++f) size *= f;
  }
  return size;
}

// ---------------------------------------------------------- regular graphs

RegularGraph::RegularGraph(MultisetSpec m, ParentMap parent) : multiset_(std::move(m)), parent_(std::move(parent)) {
  check_parent_function(multiset_, parent_, 0, "regular graph");
  check_classes_share_parent(Coding(multiset_, 0), parent_, "regular graph");
}

bool RegularGraph::is_tree() const {
  return std::all_of(parent_.begin(), parent_.end(),
                     [&](const auto& kv) { return reaches(parent_, kv.first, 0, parent_.size()); });
}

std::vector<RegularGraph> enumerate_regular_graphs(const MultisetSpec& m, int max_total) {
  check_guard(m, max_total);
  const Coding coding(m, 0);
  const auto groups = sibling_groups(coding);
  const int k = m.block_count();
  std::vector<RegularGraph> out;
  std::vector<int> choice(static_cast<std::size_t>(m.n()), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == choice.size()) {
      ParentMap parent;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (const auto& x : groups[g]) parent[x] = choice[g];
      }
      out.emplace_back(m, std::move(parent));
      return;
    }
    for (int p = 0; p < k; ++p) {
      choice[v] = p;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace qstirling
