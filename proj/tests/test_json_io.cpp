#include <gtest/gtest.h>

#include "qstirling/errors.hpp"
#include "qstirling/eulerian.hpp"
#include "qstirling/json_io.hpp"
#include "support.hpp"

namespace qstirling {
namespace {

using nlohmann::json;

TEST(Json, MultisetAndWords) {
  const MultisetSpec m({2, 1});
  EXPECT_EQ(io::to_json(m).dump(), R"({"multiplicities":[2,1]})");
  EXPECT_EQ(io::multiset_from_json(io::to_json(m)), m);
  EXPECT_EQ(io::word_from_json(io::word_to_json(Word{1, 2, 1})), (Word{1, 2, 1}));
  const RootedWord rw{Word{1, 2, 2, 1}, 3};
  EXPECT_EQ(io::to_json(rw).dump(), R"({"root":3,"word":[1,2,2,1]})");
  EXPECT_EQ(io::rooted_word_from_json(io::to_json(rw)), rw);
  EXPECT_EQ(io::rooted_word_from_json(json::parse(R"({"word":[1,1]})")).root, std::nullopt);
}

TEST(Json, MalformedInputThrows) {
  EXPECT_THROW(io::multiset_from_json(json::parse(R"({"mult":[1]})")), InvalidInput);
  EXPECT_THROW(io::multiset_from_json(json::parse(R"({"multiplicities":["a"]})")), InvalidInput);
  EXPECT_THROW(io::word_from_json(json::parse(R"({"word":[0,1]})")), InvalidInput);
  EXPECT_THROW(io::rooted_word_from_json(json::parse(R"({"word":[1,2,2,1],"root":2})")), InvalidInput);
  EXPECT_THROW(io::vertex_label_from_json(json::parse(R"({"x":1})")), InvalidInput);
  EXPECT_THROW(io::partition_from_json(json::parse(R"({"blocks":[[1],[1]]})")), InvalidInput);
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"({"vars":["t"],"terms":[{"exp":[1],"coef":"1x"}]})")),
               InvalidInput);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"parent":[]})")), InvalidInput);
  EXPECT_THROW(io::barred_from_json(json::parse(R"({"blocks":[{"perm":[1],"bars":[0]}]})")), InvalidInput);
}

TEST(Json, TreesRoundTrip) {
  const VETree t(testing::example_tree_multiset(), testing::example_tree());
  const json j = io::to_json(t);
  EXPECT_EQ(io::infer_multiset(io::tree_node_from_json(j)), testing::example_tree_multiset());
  EXPECT_EQ(io::tree_from_json(j), t);
  EXPECT_EQ(j["root"], json::parse(R"({"int":0})"));

  const UnorderedVETree u(testing::rooted_example_multiset(), 5, testing::rooted_example_tree());
  EXPECT_EQ(io::unordered_tree_from_json(io::to_json(u)), u);
}

TEST(Json, GraphsPartitionsAndPolynomials) {
  const RegularGraph g(testing::rooted_example_multiset(), testing::rooted_example_graph());
  EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
  json bare = io::to_json(g);
  bare.erase("multiplicities");
  EXPECT_EQ(io::graph_from_json(bare, g.multiset()), g);

  const OrderedBlockPartition p({{2, 1}, {}, {3}});
  EXPECT_EQ(io::to_json(p).dump(), R"({"blocks":[[2,1],[],[3]]})");
  EXPECT_EQ(io::partition_from_json(io::to_json(p)), p);

  const BarredPartition b{p, {{0, 1, 1}, {0}, {0, 2}}};
  EXPECT_EQ(io::barred_from_json(io::to_json(b)), b);

  const Polynomial q = qstirling_poly(MultisetSpec({2, 2})) * BigInt("100000000000000000000");
  const json jq = io::to_json(q);
  EXPECT_EQ(jq["terms"][0]["exp"], json::parse("[1,2,2]"));
  EXPECT_EQ(jq["terms"][0]["coef"], "100000000000000000000");
  EXPECT_EQ(io::polynomial_from_json(jq), q);
}

TEST(Json, CodingAndStats) {
  const json c = io::to_json(Coding(MultisetSpec({1, 2}), 0));
  EXPECT_EQ(c.dump(), R"([{"code":{"s":1},"copy":1,"value":1},{"code":1,"copy":2,"value":2}])");
  EXPECT_EQ(io::to_json(TreeStats{8, 9, 4}).dump(), R"({"casc":9,"cdes":8,"leaf_star":4})");
  GammaTable t{{{0, 1}, BigInt(3)}};
  EXPECT_EQ(io::to_json(t).dump(), R"([{"i":0,"j":1,"value":"3"}])");
}

}  // namespace
}  // namespace qstirling
