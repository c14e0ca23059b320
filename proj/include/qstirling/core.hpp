#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qstirling/multiset.hpp"

namespace qstirling {

inline constexpr int kDefaultMaxTotal = 12;

struct EnumerationOptions {
  int max_total = kDefaultMaxTotal;  // guard on M
  int jobs = 1;                      // prefix-partitioned workers
};

// Throws GuardExceeded when m.total() > max_total.
void check_guard(const MultisetSpec& m, int max_total);

// red(w): replace the i-th smallest letter by i.
Word reduce(std::span<const int> w);

StatTriple word_stats(std::span<const int> w);

struct CyclicStats {
  int cdes = 0;
  int casc = 0;

  auto operator<=>(const CyclicStats&) const = default;
};

// Cyclic descents/ascents with s_{r+1} = s_1. Throws InvalidInput on empty input.
CyclicStats cyclic_stats(std::span<const int> s);

// #{1 <= i <= L : w_{i-1} > w_i > w_{i+1}} with zero boundaries.
int double_descents(std::span<const int> w);

// Stack-based check: a repeated value may only reappear while it is the
// innermost open value.
bool is_quasi_stirling(std::span<const int> w);

// Reference check: no a..b..a..b subsequence for any pair a != b.
bool is_quasi_stirling_pairwise(std::span<const int> w);

// No subsequence order-isomorphic to 212.
bool is_stirling(std::span<const int> w);

enum class SiblingType { type_one, type_two };

struct SiblingDescent {
  std::size_t position = 0;  // 1-based index i
  SiblingType type = SiblingType::type_one;

  auto operator<=>(const SiblingDescent&) const = default;
};

// Which reading of the double sibling descent to use. value_anchored is the
// one consistent with the (emp, des, dd) -> (plat, sd, dsd) transfer; literal
// counts adjacent sibling-descent indices i-1, i with i-1 of type I.
enum class DsdRule { value_anchored, literal };

struct SiblingStats {
  int sd = 0;
  int dsd = 0;
  std::vector<SiblingDescent> descents;
};

// Throws InvalidInput if w is not quasi-Stirling.
SiblingStats sibling_stats(std::span<const int> w, DsdRule rule = DsdRule::value_anchored);

// Visits every permutation of m in lexicographic order (no filtering).
void for_each_multiset_permutation(const MultisetSpec& m,
                                   const std::function<void(const Word&)>& visit,
                                   int max_total = kDefaultMaxTotal);

// Visits quasi-Stirling permutations of m in lexicographic order, pruning
// with the nesting stack.
void for_each_quasi_stirling(const MultisetSpec& m, const std::function<void(const Word&)>& visit,
                             int max_total = kDefaultMaxTotal);

// Lexicographic list of all quasi-Stirling permutations. With jobs > 1 the
// work is split by first letter; the merged order is the sequential order.
std::vector<Word> enumerate_quasi_stirling(const MultisetSpec& m, EnumerationOptions opts = {});

// Every quasi-Stirling word paired with each admissible root: first the
// unrooted pair, then each non-first copy position in increasing order.
std::vector<RootedWord> enumerate_rooted(const MultisetSpec& m, EnumerationOptions opts = {});

// All multisets (compositions of total into positive parts), lexicographic.
std::vector<MultisetSpec> compositions(int total);

// All multisets with 1 <= M <= max_total, ordered by M then lexicographically.
std::vector<MultisetSpec> multisets_up_to(int max_total);

}  // namespace qstirling
