#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qstirling/core.hpp"
#include "qstirling/errors.hpp"
#include "support.hpp"

namespace qstirling {
namespace {

using testing::naive_quasi_stirling;

TEST(Multiset, BasicShape) {
  const MultisetSpec m({2, 1, 3});
  EXPECT_EQ(m.n(), 3);
  EXPECT_EQ(m.total(), 6);
  EXPECT_EQ(m.excess(), 3);
  EXPECT_EQ(m.block_count(), 4);
  EXPECT_EQ(m.singletons(), std::vector<int>{2});
  EXPECT_EQ(m.sorted_word(), (Word{1, 1, 2, 3, 3, 3}));
  EXPECT_EQ(MultisetSpec::parse("2,1,3"), m);
  EXPECT_EQ(MultisetSpec::content_of(Word{3, 1, 3, 1, 2, 3}), m);
}

TEST(Multiset, RejectsBadInput) {
  EXPECT_THROW(MultisetSpec({2, 0}), InvalidInput);
  EXPECT_THROW(MultisetSpec::parse("2,x"), InvalidInput);
  EXPECT_THROW(MultisetSpec::content_of(Word{1, 3}), InvalidInput);
}

TEST(Words, ParseAndReduce) {
  EXPECT_EQ(parse_word("1221"), (Word{1, 2, 2, 1}));
  EXPECT_EQ(parse_word("7,10,2"), (Word{7, 10, 2}));
  EXPECT_EQ(reduce(Word{7, 3, 9, 3}), (Word{2, 1, 3, 1}));
  EXPECT_EQ(copy_indices(Word{2, 1, 2, 2, 1}), (std::vector<int>{1, 1, 2, 3, 2}));
  EXPECT_EQ(position_of(Word{2, 1, 2, 2, 1}, Entry{2, 3}), std::optional<std::size_t>(4));
}

TEST(Words, StatisticsUseZeroBoundaries) {
  EXPECT_EQ(word_stats(Word{1, 1, 2, 2}), (StatTriple{1, 2, 2}));
  EXPECT_EQ(word_stats(Word{2, 1, 1, 2}), (StatTriple{2, 2, 1}));
  EXPECT_EQ(word_stats(testing::example_word()), (StatTriple{8, 9, 4}));
  EXPECT_EQ(double_descents(Word{3, 2, 1}), 2);
  EXPECT_EQ(double_descents(Word{2, 1, 3}), 0);
  EXPECT_EQ(double_descents(Word{2, 3, 1}), 1);
}

TEST(Words, CyclicStatistics) {
  EXPECT_EQ(cyclic_stats(Word{1, 3, 2}), (CyclicStats{2, 1}));
  EXPECT_EQ(cyclic_stats(Word{4}), (CyclicStats{0, 0}));
  EXPECT_THROW(cyclic_stats(Word{}), InvalidInput);
}

TEST(Words, RandomStatisticsMatchBruteForce) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = testing::random_multiset(rng, 10);
    Word w = m.sorted_word();
    std::shuffle(w.begin(), w.end(), rng);
    const auto s = word_stats(w);
    const auto expect = testing::naive_stats(w);
    EXPECT_EQ(s.des, expect[0]);
    EXPECT_EQ(s.asc, expect[1]);
    EXPECT_EQ(s.plat, expect[2]);
    EXPECT_EQ(is_quasi_stirling(w), naive_quasi_stirling(w)) << word_to_string(w);
    EXPECT_EQ(is_quasi_stirling_pairwise(w), naive_quasi_stirling(w)) << word_to_string(w);
    EXPECT_EQ(is_stirling(w), testing::naive_stirling(w)) << word_to_string(w);
  }
}

TEST(Enumeration, QuasiStirlingMatchesFilteredArrangements) {
  for (const auto& m : multisets_up_to(7)) {
    const auto expected = testing::naive_quasi_stirling_words(m);
    EXPECT_EQ(enumerate_quasi_stirling(m), expected) << m;
    EXPECT_EQ(enumerate_quasi_stirling(m, {kDefaultMaxTotal, 3}), expected) << m;
  }
}

TEST(Enumeration, AllArrangementsVisitedInOrder) {
  const MultisetSpec m({2, 1, 2});
  std::vector<Word> seen;
  for_each_multiset_permutation(m, [&](const Word& w) { seen.push_back(w); });
  EXPECT_EQ(seen, testing::all_arrangements(m));
}

TEST(Enumeration, StirlingCountsAreDoubleFactorials) {
  long long expected = 1;
  for (int n = 1; n <= 5; ++n) {
    expected *= 2 * n - 1;
    long long count = 0;
    for_each_multiset_permutation(MultisetSpec(std::vector<int>(static_cast<std::size_t>(n), 2)),
                                  [&](const Word& w) { count += is_stirling(w) ? 1 : 0; });
    EXPECT_EQ(count, expected) << n;
  }
}

TEST(Enumeration, RootedWords) {
  for (const auto& m : multisets_up_to(6)) {
    const auto words = enumerate_quasi_stirling(m);
    const auto rooted = enumerate_rooted(m);
    ASSERT_EQ(rooted.size(), words.size() * static_cast<std::size_t>(m.block_count())) << m;
    std::set<RootedWord> distinct(rooted.begin(), rooted.end());
    EXPECT_EQ(distinct.size(), rooted.size());
    for (const auto& rw : rooted) {
      EXPECT_NO_THROW(validate_root(rw));
      if (rw.root) {
        EXPECT_GT(rw.root_entry()->copy, 1);
      }
    }
  }
}

TEST(Enumeration, RootValidation) {
  EXPECT_THROW(validate_root({Word{1, 2, 2, 1}, 1}), InvalidInput);
  EXPECT_THROW(validate_root({Word{1, 2, 2, 1}, 5}), InvalidInput);
  EXPECT_NO_THROW(validate_root({Word{1, 2, 2, 1}, 3}));
  EXPECT_EQ((RootedWord{Word{1, 2, 2, 1}, 4}.root_entry()), (Entry{1, 2}));
}

TEST(Enumeration, Compositions) {
  for (int total = 1; total <= 8; ++total) {
    const auto all = compositions(total);
    EXPECT_EQ(all.size(), std::size_t{1} << (total - 1));
    for (const auto& m : all) EXPECT_EQ(m.total(), total);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
  EXPECT_EQ(multisets_up_to(5).size(), 31u);
  EXPECT_EQ(multisets_up_to(1), std::vector<MultisetSpec>{MultisetSpec({1})});
}

TEST(Guard, ThrowsAboveLimit) {
  const MultisetSpec m(std::vector<int>(13, 1));
  EXPECT_THROW(check_guard(m, 12), GuardExceeded);
  EXPECT_NO_THROW(check_guard(m, 13));
  EXPECT_THROW(enumerate_quasi_stirling(m), GuardExceeded);
}

TEST(SiblingStatistics, RejectsWordsWithCrossings) {
  EXPECT_THROW(sibling_stats(Word{1, 2, 1, 2}), InvalidInput);
  EXPECT_NO_THROW(sibling_stats(Word{1, 2, 2, 1}));
}

TEST(SiblingStatistics, DescentPositionsAreSorted) {
  for (const auto& m : multisets_up_to(6)) {
    for (const auto& w : enumerate_quasi_stirling(m)) {
      for (auto rule : {DsdRule::value_anchored, DsdRule::literal}) {
        const auto s = sibling_stats(w, rule);
        EXPECT_EQ(static_cast<std::size_t>(s.sd), s.descents.size());
        EXPECT_LE(s.dsd, s.sd);
        EXPECT_TRUE(std::is_sorted(s.descents.begin(), s.descents.end()));
      }
    }
  }
}

}  // namespace
}  // namespace qstirling
