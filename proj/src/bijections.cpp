#include "qstirling/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "qstirling/core.hpp"
#include "qstirling/errors.hpp"

namespace qstirling {

// ----------------------------------------------------------------- phi

namespace {

std::optional<std::size_t> root_position(const MultisetSpec& m, int r, const Word& word) {
  const auto e = root_entry(m, r);
  if (!e) return std::nullopt;
  return position_of(word, *e);
}

}  // namespace

RootedWord phi(const VETree& t) {
  Word word;
  word.reserve(static_cast<std::size_t>(t.multiset().total()));
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const auto& e = node.children[i];
      word.push_back(e.label);
      walk(e.node);
      const bool singleton_leaf = e.node.label.is_singleton();
      const bool same_sibling_next = i + 1 < node.children.size() && node.children[i + 1].label == e.label;
      if (!singleton_leaf && !same_sibling_next) word.push_back(e.label);
    }
  };
  walk(t.root());
  if (static_cast<int>(word.size()) != t.multiset().total()) {
    throw InvariantViolation("phi produced a word of length " + std::to_string(word.size()));
  }
  RootedWord rw{word, root_position(t.multiset(), t.root_label(), word)};
  return rw;
}

RootedWord phi_pair_rewrite(const VETree& t) {
  struct Token {
    int label;
    bool down;
    const TreeNode* parent;
    std::size_t sibling;
    bool singleton_leaf;
  };
  std::vector<Token> tokens;
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const auto& e = node.children[i];
      const bool singleton_leaf = e.node.label.is_singleton();
      tokens.push_back({e.label, true, &node, i, singleton_leaf});
      walk(e.node);
      tokens.push_back({e.label, false, &node, i, singleton_leaf});
    }
  };
  walk(t.root());

  // Mark the second letter of every aa pair produced by (i) the up-step of a
  // sibling followed by the down-step of the next same-labeled sibling, or
  // (ii) the down/up steps around a singleton leaf. Integer leaves keep aa.
  std::vector<bool> drop(tokens.size(), false);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    const auto& a = tokens[i];
    const auto& b = tokens[i + 1];
    if (a.label != b.label) continue;
    const bool sibling_pair = !a.down && b.down && a.parent == b.parent && b.sibling == a.sibling + 1;
    const bool singleton_pair = a.down && !b.down && a.parent == b.parent && a.sibling == b.sibling &&
                                a.singleton_leaf;
    if (sibling_pair || singleton_pair) drop[i + 1] = true;
  }
  Word word;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!drop[i]) word.push_back(tokens[i].label);
  }
  RootedWord rw{word, root_position(t.multiset(), t.root_label(), word)};
  return rw;
}

VETree phi_inverse(const RootedWord& rw) {
  if (rw.word.empty()) throw InvalidInput("empty word");
  const MultisetSpec m = MultisetSpec::content_of(rw.word);
  if (!is_quasi_stirling(rw.word)) throw InvalidInput("word " + word_to_string(rw.word) + " is not quasi-Stirling");
  validate_root(rw);
  int r = 0;
  if (rw.root) {
    const auto label = Coding(m, 0).code(*rw.root_entry());
    r = label->value;
  }
  const Coding coding(m, r);

  std::vector<std::vector<std::size_t>> positions(static_cast<std::size_t>(m.n() + 1));
  for (std::size_t i = 0; i < rw.word.size(); ++i) positions[static_cast<std::size_t>(rw.word[i])].push_back(i);

  // Children of the subtree spanning word positions [lo, hi).
  std::function<std::vector<TreeEdge>(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) {
    std::vector<TreeEdge> edges;
    std::size_t i = lo;
    while (i < hi) {
      const int v = rw.word[i];
      const auto& pos = positions[static_cast<std::size_t>(v)];
      if (pos.front() != i || pos.back() >= hi) {
        throw InvariantViolation("copies of " + std::to_string(v) + " escape their enclosing gap");
      }
      if (pos.size() == 1) {
        edges.push_back({v, TreeNode{VertexLabel::singleton(v), {}}});
      } else {
        for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
          const auto label = coding.code({v, static_cast<int>(j) + 2});
          edges.push_back({v, TreeNode{*label, build(pos[j] + 1, pos[j + 1])}});
        }
      }
      i = pos.back() + 1;
    }
    return edges;
  };
  TreeNode root{VertexLabel::integer(r), build(0, rw.word.size())};
  return VETree(m, std::move(root));
}

// ------------------------------------------------ Foata path transform

PathDecomposition decompose_path(const std::vector<int>& path) {
  if (path.empty()) throw InvalidInput("empty path");
  if (*std::min_element(path.begin(), path.end()) != path.front()) {
    throw InvalidInput("path must start at its minimum");
  }
  PathDecomposition d;
  d.path = path;
  std::vector<std::size_t> cut;  // indices of right-to-left minima
  int running = path.back() + 1;
  for (std::size_t i = path.size(); i-- > 0;) {
    if (path[i] < running) {
      running = path[i];
      cut.push_back(i);
    }
  }
  std::reverse(cut.begin(), cut.end());
  std::size_t start = 0;
  for (std::size_t c : cut) {
    d.minima.push_back(path[c]);
    d.cycles.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(start),
                          path.begin() + static_cast<std::ptrdiff_t>(c) + 1);
    start = c + 1;
  }
  return d;
}

std::vector<int> recompose_path(std::vector<std::vector<int>> cycles) {
  for (auto& c : cycles) {
    if (c.empty()) throw InvalidInput("empty cycle");
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn + 1, c.end());
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
  std::vector<int> path;
  for (const auto& c : cycles) path.insert(path.end(), c.begin(), c.end());
  return path;
}

// ------------------------------------------------------------- psi1

namespace {

// Integer parents indexed by label; -1 marks a sink.
struct IntegerParents {
  std::vector<int> p;
  ParentMap singletons;
};

IntegerParents split(const MultisetSpec& m, const ParentMap& parent) {
  IntegerParents out;
  out.p.assign(static_cast<std::size_t>(m.excess() + 1), -1);
  for (const auto& [v, q] : parent) {
    if (v.is_integer()) {
      out.p[static_cast<std::size_t>(v.value)] = q;
    } else {
      out.singletons[v] = q;
    }
  }
  return out;
}

ParentMap join(const IntegerParents& ip) {
  ParentMap out = ip.singletons;
  for (std::size_t i = 0; i < ip.p.size(); ++i) {
    if (ip.p[i] >= 0) out[VertexLabel::integer(static_cast<int>(i))] = ip.p[i];
  }
  return out;
}

}  // namespace

std::optional<RegularGraph> psi1_two_step(const UnorderedVETree& t, Psi1Trace* trace) {
  const MultisetSpec& m = t.multiset();
  const int r = t.root_label();
  if (r == 0) {
    if (trace) *trace = Psi1Trace{{VertexLabel::integer(0)}, t.parent(), {0}, {}};
    return RegularGraph(m, t.parent());
  }
  const IntegerParents tp = split(m, t.parent());
  const Coding rc(m, r);
  const Coding zc(m, 0);
  const auto zero_classes = congruence_classes(zc);
  const auto zero_index = class_index(zc);

  // Step 1: anchors are the minima of the r-coding classes (r itself
  // included) together with the singletons.
  std::set<int> anchors;
  for (const auto& cls : congruence_classes(rc)) anchors.insert(cls.front());
  const auto& sink_class = zero_classes[static_cast<std::size_t>(zero_index[static_cast<std::size_t>(r)])];

  IntegerParents g;
  g.singletons = tp.singletons;
  g.p.assign(tp.p.size(), -1);
  for (const auto& cls : zero_classes) {
    if (&cls == &sink_class) continue;
    std::vector<int> found;
    for (int x : cls) {
      if (anchors.count(x)) found.push_back(x);
    }
    if (found.size() != 1) {
      throw InvariantViolation("0-coding class starting at " + std::to_string(cls.front()) + " holds " +
                               std::to_string(found.size()) + " anchors");
    }
    const int parent = tp.p[static_cast<std::size_t>(found.front())];
    for (int x : cls) g.p[static_cast<std::size_t>(x)] = parent;
  }

  Psi1Trace local;
  for (int a : anchors) local.anchors.push_back(VertexLabel::integer(a));
  for (const auto& [s, q] : tp.singletons) local.anchors.push_back(s);
  std::sort(local.anchors.begin(), local.anchors.end());
  local.intermediate = join(g);
  local.sinks = sink_class;

  // G̃ must be a forest whose roots are the sinks.
  for (std::size_t v = 0; v < g.p.size(); ++v) {
    int x = static_cast<int>(v);
    for (std::size_t steps = 0; x >= 0; ++steps) {
      if (steps > g.p.size()) {
        if (trace) *trace = std::move(local);
        return std::nullopt;
      }
      x = g.p[static_cast<std::size_t>(x)];
    }
  }

  // Step 2: walk from 0 to its sink t and apply the Foata transform to the
  // path word.
  std::vector<int> path{0};
  while (g.p[static_cast<std::size_t>(path.back())] >= 0) {
    path.push_back(g.p[static_cast<std::size_t>(path.back())]);
  }
  local.decomposition = decompose_path(path);
  const auto& u = local.decomposition.minima;
  const auto& segments = local.decomposition.cycles;

  IntegerParents out = g;
  out.p[0] = -1;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const int target = segments[i].front();  // old parent of u_{i-1}
    for (int x : zero_classes[static_cast<std::size_t>(zero_index[static_cast<std::size_t>(u[i])])]) {
      out.p[static_cast<std::size_t>(x)] = target;
    }
  }
  if (trace) *trace = std::move(local);
  return RegularGraph(m, join(out));
}

namespace {
UnorderedVETree psi1_two_step_inverse_unchecked(const RegularGraph& graph);
}  // namespace

std::optional<UnorderedVETree> psi1_two_step_inverse(const RegularGraph& graph) {
  try {
    auto t = psi1_two_step_inverse_unchecked(graph);
    const auto back = psi1_two_step(t);
    if (!back || !(*back == graph)) return std::nullopt;
    return t;
  } catch (const InvalidInput&) {
    return std::nullopt;
  } catch (const InvariantViolation&) {
    return std::nullopt;
  }
}

namespace {

UnorderedVETree psi1_two_step_inverse_unchecked(const RegularGraph& graph) {
  const MultisetSpec& m = graph.multiset();
  if (graph.is_tree()) return UnorderedVETree(m, 0, graph.parent());

  const IntegerParents gp = split(m, graph.parent());
  const Coding zc(m, 0);
  const auto zero_classes = congruence_classes(zc);
  const auto zero_index = class_index(zc);
  const int top = m.excess();

  // Cycles of the functional graph, each listed in parent order.
  std::vector<std::vector<int>> cycles{{0}};
  std::vector<int> state(static_cast<std::size_t>(top + 1), 0);  // 0 new, 1 on stack, 2 done
  state[0] = 2;
  for (int s = 1; s <= top; ++s) {
    std::vector<int> stack;
    int x = s;
    while (state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      stack.push_back(x);
      x = gp.p[static_cast<std::size_t>(x)];
    }
    if (state[static_cast<std::size_t>(x)] == 1) {
      auto it = std::find(stack.begin(), stack.end(), x);
      cycles.emplace_back(it, stack.end());
    }
    for (int y : stack) state[static_cast<std::size_t>(y)] = 2;
  }

  // Undo Step 2.
  const std::vector<int> path = recompose_path(cycles);
  const PathDecomposition d = decompose_path(path);
  IntegerParents g = gp;
  g.p[0] = d.cycles.size() > 1 ? d.cycles[1].front() : -1;
  for (std::size_t i = 1; i < d.minima.size(); ++i) {
    const bool last = i + 1 == d.minima.size();
    const int target = last ? -1 : d.cycles[i + 1].front();
    for (int x : zero_classes[static_cast<std::size_t>(zero_index[static_cast<std::size_t>(d.minima[i])])]) {
      g.p[static_cast<std::size_t>(x)] = target;
    }
  }

  // Undo Step 1. The root is one of the sinks [l, l+q]; the one reached from
  // l - 1 is tried first, and a candidate is kept only if it maps back.
  const int t = d.minima.back();
  const auto& sinks = zero_classes[static_cast<std::size_t>(zero_index[static_cast<std::size_t>(t)])];
  std::vector<int> candidates;
  if (int x = sinks.front() - 1; x >= 0) {
    for (std::size_t steps = 0; x >= 0 && g.p[static_cast<std::size_t>(x)] >= 0; ++steps) {
      if (steps > g.p.size()) {
        x = -1;
        break;
      }
      x = g.p[static_cast<std::size_t>(x)];
    }
    if (std::find(sinks.begin(), sinks.end(), x) != sinks.end()) candidates.push_back(x);
  }
  for (int r : sinks) {
    if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
  }

  for (int r : candidates) {
    IntegerParents tp;
    tp.singletons = g.singletons;
    tp.p.assign(g.p.size(), -1);
    bool ok = true;
    for (const auto& cls : congruence_classes(Coding(m, r))) {
      if (cls.front() == r) continue;
      const int parent = g.p[static_cast<std::size_t>(cls.front())];
      if (parent < 0) {
        ok = false;
        break;
      }
      for (int y : cls) tp.p[static_cast<std::size_t>(y)] = parent;
    }
    if (!ok) continue;
    try {
      UnorderedVETree tree(m, r, join(tp));
      const auto back = psi1_two_step(tree);
      if (back && *back == graph) return tree;
    } catch (const InvalidInput&) {
    }
  }
  throw InvalidInput("regular graph does not invert to a tree");
}

}  // namespace

namespace {

// Trees outside the two-step domain and graphs outside its image, grouped by
// distinct-label count vector, both sorted.
struct Pairing {
  std::map<std::vector<int>, std::pair<std::vector<UnorderedVETree>, std::vector<RegularGraph>>> classes;
};

std::shared_ptr<const Pairing> pairing_for(const MultisetSpec& m) {
  static std::mutex mutex;
  static std::map<MultisetSpec, std::shared_ptr<const Pairing>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto out = std::make_shared<Pairing>();
  std::set<RegularGraph> image;
  for (auto& u : enumerate_unordered_trees(m, m.total())) {
    if (auto g = psi1_two_step(u)) {
      image.insert(std::move(*g));
    } else {
      out->classes[distinct_label_counts(u)].first.push_back(std::move(u));
    }
  }
  for (auto& g : enumerate_regular_graphs(m, m.total())) {
    if (!image.count(g)) out->classes[distinct_label_counts(g)].second.push_back(std::move(g));
  }
  for (auto& [counts, cls] : out->classes) {
    std::sort(cls.first.begin(), cls.first.end());
    std::sort(cls.second.begin(), cls.second.end());
    if (cls.first.size() != cls.second.size()) throw InvariantViolation("psi1 pairing classes differ in size");
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

RegularGraph psi1(const UnorderedVETree& t, Psi1Trace* trace) {
  if (auto g = psi1_two_step(t, trace)) return *g;
  const auto pairing = pairing_for(t.multiset());
  const auto& [trees, graphs] = pairing->classes.at(distinct_label_counts(t));
  const auto it = std::lower_bound(trees.begin(), trees.end(), t);
  if (it == trees.end() || !(*it == t)) throw InvariantViolation("tree missing from the psi1 pairing");
  if (trace) trace->repaired = true;
  return graphs[static_cast<std::size_t>(it - trees.begin())];
}

UnorderedVETree psi1_inverse(const RegularGraph& g) {
  if (auto t = psi1_two_step_inverse(g)) return *t;
  const auto pairing = pairing_for(g.multiset());
  const auto cls = pairing->classes.find(distinct_label_counts(g));
  if (cls == pairing->classes.end()) throw InvariantViolation("graph missing from the psi1 pairing");
  const auto& [trees, graphs] = cls->second;
  const auto it = std::lower_bound(graphs.begin(), graphs.end(), g);
  if (it == graphs.end() || !(*it == g)) throw InvariantViolation("graph missing from the psi1 pairing");
  return trees[static_cast<std::size_t>(it - graphs.begin())];
}

// ------------------------------------------------------------- psi2

OrderedBlockPartition psi2(const RegularGraph& g) {
  const MultisetSpec& m = g.multiset();
  const Coding zc(m, 0);
  std::vector<std::set<int>> blocks(static_cast<std::size_t>(m.block_count()));
  for (const auto& [v, p] : g.parent()) blocks[static_cast<std::size_t>(p)].insert(zc.edge_label(v));
  std::vector<Word> out;
  for (const auto& b : blocks) out.emplace_back(b.begin(), b.end());
  return OrderedBlockPartition(std::move(out));
}

RegularGraph psi2_inverse(const OrderedBlockPartition& p, const MultisetSpec& m) {
  if (p.k() != m.block_count()) {
    throw InvalidInput("partition has " + std::to_string(p.k()) + " blocks, expected " +
                       std::to_string(m.block_count()));
  }
  if (p.n() != m.n()) throw InvalidInput("partition is over [" + std::to_string(p.n()) + "], expected [" +
                                         std::to_string(m.n()) + "]");
  const Coding zc(m, 0);
  ParentMap parent;
  for (int i = 0; i < p.k(); ++i) {
    for (int v : p.block(static_cast<std::size_t>(i))) {
      if (m.is_singleton(v)) {
        parent[VertexLabel::singleton(v)] = i;
        continue;
      }
      for (int j = 2; j <= m.multiplicity(v); ++j) parent[*zc.code({v, j})] = i;
    }
  }
  return RegularGraph(m, std::move(parent));
}

// -------------------------------------------------------------- Psi

namespace {

// Arranges `values` (any order) to be order-isomorphic to `pattern`.
Word order_like(Word values, const Word& pattern) {
  if (values.size() != pattern.size()) {
    throw InvariantViolation("block size " + std::to_string(values.size()) + " differs from edge word length " +
                             std::to_string(pattern.size()));
  }
  std::sort(values.begin(), values.end());
  const Word ranks = reduce(pattern);
  Word out;
  for (int r : ranks) out.push_back(values[static_cast<std::size_t>(r - 1)]);
  return out;
}

}  // namespace

OrderedBlockPartition Psi(const VETree& t) {
  const auto words = edge_words(t);
  const auto unordered = psi2(psi1(forget_order(t)));
  std::vector<Word> blocks;
  for (int i = 0; i < unordered.k(); ++i) {
    auto it = words.find(i);
    const Word pattern = it == words.end() ? Word{} : it->second;
    blocks.push_back(order_like(unordered.block(static_cast<std::size_t>(i)), pattern));
  }
  return OrderedBlockPartition(std::move(blocks));
}

VETree Psi_inverse(const OrderedBlockPartition& p, const MultisetSpec& m) {
  const UnorderedVETree u = psi1_inverse(psi2_inverse(p.unordered(), m));
  const Coding coding(m, u.root_label());
  // children[i][label] = child vertices, increasing.
  std::map<int, std::map<int, std::vector<VertexLabel>>> children;
  for (const auto& [v, q] : u.parent()) children[q][coding.edge_label(v)].push_back(v);
  std::function<TreeNode(VertexLabel)> build = [&](VertexLabel label) {
    TreeNode node{label, {}};
    if (!label.is_integer()) return node;
    auto it = children.find(label.value);
    const Word& block = p.block(static_cast<std::size_t>(label.value));
    if (it == children.end()) {
      if (!block.empty()) throw InvariantViolation("nonempty block at leaf " + to_string(label));
      return node;
    }
    Word distinct;
    for (const auto& [edge, kids] : it->second) distinct.push_back(edge);
    for (int edge : order_like(distinct, block)) {
      auto kids = it->second.at(edge);
      std::sort(kids.begin(), kids.end());
      for (const auto& kid : kids) node.children.push_back({edge, build(kid)});
    }
    return node;
  };
  return VETree(m, build(VertexLabel::integer(u.root_label())));
}

}  // namespace qstirling
