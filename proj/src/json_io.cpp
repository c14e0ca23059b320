#include "qstirling/json_io.hpp"

#include <map>
#include <set>

#include "qstirling/errors.hpp"

namespace qstirling::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::optional<MultisetSpec> embedded_multiset(const json& j, const std::optional<MultisetSpec>& m) {
  if (m) return m;
  if (j.is_object() && j.contains("multiplicities")) return multiset_from_json(j);
  return std::nullopt;
}

void collect_parents(const TreeNode& node, ParentMap& out) {
  for (const auto& e : node.children) {
    if (node.label.is_singleton()) throw InvalidInput("singleton vertex with children");
    out[e.node.label] = node.label.value;
    collect_parents(e.node, out);
  }
}

}  // namespace

json integer_to_json(const BigInt& v) { return v.str(); }

json to_json(const MultisetSpec& m) { return {{"multiplicities", m.multiplicities()}}; }

MultisetSpec multiset_from_json(const json& j) {
  return MultisetSpec(int_list(field(j, "multiplicities"), "multiplicities"));
}

json word_to_json(const Word& w) { return {{"word", w}}; }

Word word_from_json(const json& j) {
  Word w = int_list(field(j, "word"), "word");
  for (int x : w) {
    if (x < 1) throw InvalidInput("word entries must be positive");
  }
  return w;
}

json to_json(const RootedWord& rw) {
  json j{{"word", rw.word}};
  j["root"] = rw.root ? json(*rw.root) : json(nullptr);
  return j;
}

RootedWord rooted_word_from_json(const json& j) {
  RootedWord rw{word_from_json(j), std::nullopt};
  if (j.contains("root") && !j.at("root").is_null()) {
    const int p = as_int(j.at("root"), "root");
    if (p < 1) throw InvalidInput("root must be a 1-based position");
    rw.root = static_cast<std::size_t>(p);
  }
  validate_root(rw);
  return rw;
}

json to_json(VertexLabel v) { return v.is_integer() ? json{{"int", v.value}} : json{{"s", v.value}}; }

VertexLabel vertex_label_from_json(const json& j) {
  if (j.is_object() && j.size() == 1) {
    if (j.contains("int")) return VertexLabel::integer(as_int(j.at("int"), "int label"));
    if (j.contains("s")) return VertexLabel::singleton(as_int(j.at("s"), "singleton label"));
  }
  throw InvalidInput("vertex label must be {\"int\": i} or {\"s\": v}");
}

json to_json(const TreeNode& node) {
  json children = json::array();
  for (const auto& e : node.children) children.push_back({{"edge", e.label}, {"node", to_json(e.node)}});
  return {{"root", to_json(node.label)}, {"children", children}};
}

TreeNode tree_node_from_json(const json& j) {
  TreeNode node{vertex_label_from_json(field(j, "root")), {}};
  if (j.contains("children")) {
    const auto& c = j.at("children");
    if (!c.is_array()) throw InvalidInput("children must be an array");
    for (const auto& e : c) {
      node.children.push_back({as_int(field(e, "edge"), "edge"), tree_node_from_json(field(e, "node"))});
    }
  }
  return node;
}

json to_json(const VETree& t) { return to_json(t.root()); }

MultisetSpec infer_multiset(const TreeNode& root) {
  std::map<int, int> edges;
  std::set<int> singletons;
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    if (node.label.is_singleton()) singletons.insert(node.label.value);
    for (const auto& e : node.children) {
      ++edges[e.label];
      walk(e.node);
    }
  };
  walk(root);
  if (edges.empty()) throw InvalidInput("a tree needs at least one edge");
  if (edges.begin()->first < 1) throw InvalidInput("edge labels must be positive");
  const int n = edges.rbegin()->first;
  std::vector<int> mult(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const auto it = edges.find(v);
    if (it == edges.end()) throw InvalidInput("no edge carries label " + std::to_string(v));
    mult[static_cast<std::size_t>(v - 1)] = singletons.count(v) ? 1 : it->second + 1;
  }
  return MultisetSpec(std::move(mult));
}

VETree tree_from_json(const json& j, const std::optional<MultisetSpec>& m) {
  TreeNode root = tree_node_from_json(j);
  const auto spec = embedded_multiset(j, m);
  MultisetSpec ms = spec ? *spec : infer_multiset(root);
  return VETree(std::move(ms), std::move(root));
}

json to_json(const UnorderedVETree& t) { return to_json(t.to_node()); }

UnorderedVETree unordered_tree_from_json(const json& j, const std::optional<MultisetSpec>& m) {
  TreeNode root = tree_node_from_json(j);
  const auto spec = embedded_multiset(j, m);
  MultisetSpec ms = spec ? *spec : infer_multiset(root);
  if (root.label.is_singleton()) throw InvalidInput("the root must carry an integer label");
  ParentMap parent;
  collect_parents(root, parent);
  return UnorderedVETree(std::move(ms), root.label.value, std::move(parent));
}

json to_json(const RegularGraph& g) {
  json parent = json::array();
  for (const auto& [v, p] : g.parent()) parent.push_back({{"v", to_json(v)}, {"p", p}});
  return {{"parent", parent}, {"multiplicities", g.multiset().multiplicities()}};
}

RegularGraph graph_from_json(const json& j, const std::optional<MultisetSpec>& m) {
  const auto spec = embedded_multiset(j, m);
  if (!spec) throw InvalidInput("a regular graph needs its multiset (\"multiplicities\" or --multiset)");
  const auto& list = field(j, "parent");
  if (!list.is_array()) throw InvalidInput("parent must be an array");
  ParentMap parent;
  for (const auto& row : list) {
    const auto v = vertex_label_from_json(field(row, "v"));
    if (!parent.emplace(v, as_int(field(row, "p"), "p")).second) {
      throw InvalidInput("vertex " + to_string(v) + " listed twice");
    }
  }
  return RegularGraph(*spec, std::move(parent));
}

json to_json(const OrderedBlockPartition& p) { return {{"blocks", p.blocks()}}; }

OrderedBlockPartition partition_from_json(const json& j) {
  const auto& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw InvalidInput("blocks must be an array");
  std::vector<Word> out;
  for (const auto& b : blocks) out.push_back(int_list(b, "block"));
  return OrderedBlockPartition(std::move(out));
}

json to_json(const BarredPartition& b) {
  json blocks = json::array();
  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    blocks.push_back({{"perm", b.partition.block(i)}, {"bars", b.bars[i]}});
  }
  return {{"blocks", blocks}};
}

BarredPartition barred_from_json(const json& j) {
  const auto& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw InvalidInput("blocks must be an array");
  std::vector<Word> perms;
  std::vector<std::vector<int>> bars;
  for (const auto& b : blocks) {
    perms.push_back(int_list(field(b, "perm"), "perm"));
    bars.push_back(int_list(field(b, "bars"), "bars"));
  }
  BarredPartition out{OrderedBlockPartition(std::move(perms)), std::move(bars)};
  for (std::size_t i = 0; i < out.bars.size(); ++i) {
    if (out.bars[i].size() != out.partition.block(i).size() + 1) {
      throw InvalidInput("block " + std::to_string(i) + " needs one bar count per gap");
    }
  }
  return out;
}

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c.str()}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  const auto& vars = field(j, "vars");
  if (!vars.is_array()) throw InvalidInput("vars must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InvalidInput("vars must be an array of names");
    names.push_back(v.get<std::string>());
  }
  Polynomial p(names);
  for (const auto& t : field(j, "terms")) {
    auto e = int_list(field(t, "exp"), "exp");
    if (e.size() != names.size()) throw InvalidInput("exponent length differs from the variable count");
    const auto& c = field(t, "coef");
    BigInt coef;
    try {
      coef = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(as_int(c, "coef"));
    } catch (const std::runtime_error&) {
      throw InvalidInput("coef must be a decimal integer");
    }
    p.add_term(std::move(e), coef);
  }
  return p;
}

json to_json(const Coding& c) {
  json rows = json::array();
  for (const auto& row : c.table()) {
    json code = row.code.is_integer() ? json(row.code.value) : json{{"s", row.code.value}};
    rows.push_back({{"value", row.entry.value}, {"copy", row.entry.copy}, {"code", code}});
  }
  return rows;
}

json to_json(const StatTriple& s) { return {{"des", s.des}, {"asc", s.asc}, {"plat", s.plat}}; }

json to_json(const TreeStats& s) { return {{"cdes", s.cdes}, {"casc", s.casc}, {"leaf_star", s.leaf_star}}; }

json to_json(const PartitionStats& s) {
  return {{"des", s.des}, {"asc", s.asc}, {"emp", s.emp}, {"dd", s.dd}};
}

json to_json(const SiblingStats& s) {
  json positions = json::array();
  for (const auto& d : s.descents) {
    positions.push_back({{"position", d.position}, {"type", d.type == SiblingType::type_one ? "I" : "II"}});
  }
  return {{"sd", s.sd}, {"dsd", s.dsd}, {"descents", positions}};
}

json to_json(const GammaResult& g) {
  json gamma = json::array();
  for (const auto& x : g.gamma) gamma.push_back(integer_to_json(x));
  json j{{"degree", g.degree}, {"gamma", gamma}, {"exact", g.exact}, {"nonnegative", g.nonnegative}};
  if (!g.failure.empty()) j["failure"] = g.failure;
  return j;
}

json to_json(const GammaTable& t) {
  json rows = json::array();
  for (const auto& [ij, v] : t) rows.push_back({{"i", ij.first}, {"j", ij.second}, {"value", integer_to_json(v)}});
  return rows;
}

json to_json(const PartialGammaReport& r) {
  json j{{"slices", to_json(r.slices)},
         {"words", to_json(r.words)},
         {"partitions", to_json(r.partitions)},
         {"extraction_ok", r.extraction_ok},
         {"nonnegative", r.nonnegative},
         {"agree", r.agree}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json to_json(const Psi1Trace& t) {
  json anchors = json::array();
  for (const auto& a : t.anchors) anchors.push_back(to_json(a));
  json intermediate = json::array();
  for (const auto& [v, p] : t.intermediate) intermediate.push_back({{"v", to_json(v)}, {"p", p}});
  return {{"anchors", anchors},
          {"intermediate", intermediate},
          {"sinks", t.sinks},
          {"path", t.decomposition.path},
          {"minima", t.decomposition.minima},
          {"cycles", t.decomposition.cycles},
          {"repaired", t.repaired}};
}

}  // namespace qstirling::io
