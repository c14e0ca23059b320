#pragma once

#include <optional>

#include <json.hpp>

#include "qstirling/bijections.hpp"
#include "qstirling/coding.hpp"
#include "qstirling/core.hpp"
#include "qstirling/eulerian.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/partitions.hpp"
#include "qstirling/polynomial.hpp"
#include "qstirling/trees.hpp"

// JSON forms of every object. Readers throw InvalidInput on malformed input.
namespace qstirling::io {

using nlohmann::json;

// {"multiplicities":[2,2]}
json to_json(const MultisetSpec& m);
MultisetSpec multiset_from_json(const json& j);

// {"word":[1,2,2,1]}
json word_to_json(const Word& w);
Word word_from_json(const json& j);

// {"word":[...],"root": null | 1-based position}
json to_json(const RootedWord& rw);
RootedWord rooted_word_from_json(const json& j);

// {"int": i} | {"s": v}
json to_json(VertexLabel v);
VertexLabel vertex_label_from_json(const json& j);

// {"root": vlabel, "children":[{"edge": e, "node": <node>}...]}
json to_json(const TreeNode& node);
TreeNode tree_node_from_json(const json& j);

json to_json(const VETree& t);
// Without an explicit multiset the content is read off the tree: value v
// occurs once if s_v is a vertex and (#edges labeled v) + 1 times otherwise.
VETree tree_from_json(const json& j, const std::optional<MultisetSpec>& m = std::nullopt);
MultisetSpec infer_multiset(const TreeNode& root);

// Serialized through the canonical plane representative.
json to_json(const UnorderedVETree& t);
UnorderedVETree unordered_tree_from_json(const json& j, const std::optional<MultisetSpec>& m = std::nullopt);

// {"parent":[{"v": vlabel, "p": i}...]}; a "multiplicities" key may carry
// the multiset, otherwise it must be supplied.
json to_json(const RegularGraph& g);
RegularGraph graph_from_json(const json& j, const std::optional<MultisetSpec>& m = std::nullopt);

// {"blocks":[[2,1],[],[]]}
json to_json(const OrderedBlockPartition& p);
OrderedBlockPartition partition_from_json(const json& j);

// {"blocks":[{"perm":[...],"bars":[...]}...]}
json to_json(const BarredPartition& b);
BarredPartition barred_from_json(const json& j);

// {"vars":[...],"terms":[{"exp":[...],"coef":"decimal"}...]}, lexicographic.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// [{"value":v,"copy":j,"code": i | {"s": v}}...] sorted by (value, copy).
json to_json(const Coding& c);

json to_json(const StatTriple& s);
json to_json(const TreeStats& s);
json to_json(const PartitionStats& s);
json to_json(const SiblingStats& s);
json to_json(const GammaResult& g);
json to_json(const GammaTable& t);
json to_json(const PartialGammaReport& r);
json to_json(const Psi1Trace& t);

json integer_to_json(const BigInt& v);  // decimal string

}  // namespace qstirling::io
