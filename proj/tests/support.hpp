#pragma once

// Brute-force oracles and fixtures shared by the unit tests and the
// acceptance binary. Nothing here calls the library's enumerators.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <vector>

#include "qstirling/bijections.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/trees.hpp"

namespace qstirling::testing {

// Every distinct arrangement of m, via std::next_permutation.
inline std::vector<Word> all_arrangements(const MultisetSpec& m) {
  Word w;
  for (int v = 1; v <= m.n(); ++v) w.insert(w.end(), static_cast<std::size_t>(m.multiplicity(v)), v);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// No a..b..a..b subsequence, checked over all index quadruples.
inline bool naive_quasi_stirling(const Word& w) {
  const std::size_t L = w.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) {
      if (w[j] == w[i]) continue;
      for (std::size_t k = j + 1; k < L; ++k) {
        if (w[k] != w[i]) continue;
        for (std::size_t l = k + 1; l < L; ++l)
          if (w[l] == w[j]) return false;
      }
    }
  return true;
}

// No i < j < k with w_i = w_k > w_j.
inline bool naive_stirling(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k)
        if (w[i] == w[k] && w[j] < w[i]) return false;
  return true;
}

inline std::vector<Word> naive_quasi_stirling_words(const MultisetSpec& m) {
  std::vector<Word> out;
  for (auto& w : all_arrangements(m))
    if (naive_quasi_stirling(w)) out.push_back(w);
  return out;
}

// (des, asc, plat) with a zero on both ends.
inline std::array<int, 3> naive_stats(const Word& w) {
  Word z{0};
  z.insert(z.end(), w.begin(), w.end());
  z.push_back(0);
  std::array<int, 3> s{0, 0, 0};
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    if (z[i] > z[i + 1]) ++s[0];
    else if (z[i] < z[i + 1]) ++s[1];
    else ++s[2];
  }
  return s;
}

// Ordered-block partitions of [n] into k blocks: arrangements of 1..n and
// k-1 separators (written 0).
inline std::vector<std::vector<Word>> naive_partitions(int n, int k) {
  Word w(static_cast<std::size_t>(k - 1), 0);
  for (int v = 1; v <= n; ++v) w.push_back(v);
  std::sort(w.begin(), w.end());
  std::vector<std::vector<Word>> out;
  do {
    std::vector<Word> blocks(1);
    for (int x : w) {
      if (x == 0) blocks.emplace_back();
      else blocks.back().push_back(x);
    }
    out.push_back(std::move(blocks));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline long long naive_factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// A random multiset with 1 <= M <= max_total.
inline MultisetSpec random_multiset(std::mt19937& rng, int max_total) {
  const int total = std::uniform_int_distribution<int>(1, max_total)(rng);
  std::vector<int> mult;
  int left = total;
  while (left > 0) {
    const int part = std::uniform_int_distribution<int>(1, std::min(left, 4))(rng);
    mult.push_back(part);
    left -= part;
  }
  return MultisetSpec(mult);
}

// ------------------------------------------------------------ fixtures

inline TreeNode N(int label, std::vector<TreeEdge> children = {}) {
  return {VertexLabel::integer(label), std::move(children)};
}
inline TreeNode S(int value) { return {VertexLabel::singleton(value), {}}; }
inline TreeEdge E(int label, TreeNode node) { return {label, std::move(node)}; }

// The worked example tree over {1,2^2,3^3,4^2,5^2,6,7^4,8^2,9^3}.
inline MultisetSpec example_tree_multiset() { return MultisetSpec({1, 2, 3, 2, 2, 1, 4, 2, 3}); }

inline TreeNode example_tree() {
  return N(0, {E(7, N(6, {E(8, N(9, {E(2, N(1, {E(1, S(1))}))})), E(6, S(6))})),
               E(7, N(7, {E(4, N(4))})),
               E(7, N(8, {E(9, N(10)), E(9, N(11, {E(3, N(2)), E(3, N(3, {E(5, N(5))}))}))}))});
}

inline const Word& example_word() {
  static const Word w{7, 8, 2, 1, 2, 8, 6, 7, 4, 4, 7, 9, 9, 3, 3, 5, 5, 3, 9, 7};
  return w;
}

// The small regular graph over {1^3,2,3^2}.
inline MultisetSpec small_graph_multiset() { return MultisetSpec({3, 1, 2}); }

inline ParentMap small_graph_parents() {
  return {{VertexLabel::integer(1), 0},
          {VertexLabel::integer(2), 0},
          {VertexLabel::integer(3), 3},
          {VertexLabel::singleton(2), 3}};
}

// The unordered tree rooted at 5 over {1^2,2^3,3^2,4,5^3,6^2,7^4,8}, its
// regular graph, and the intermediate graph between them.
inline MultisetSpec rooted_example_multiset() { return MultisetSpec({2, 3, 2, 1, 3, 2, 4, 1}); }

inline ParentMap rooted_example_tree() {
  using V = VertexLabel;
  return {{V::integer(0), 10}, {V::integer(1), 7}, {V::integer(2), 7}, {V::integer(3), 6},
          {V::integer(4), 8},  {V::integer(6), 8}, {V::integer(7), 5}, {V::integer(8), 5},
          {V::integer(9), 5},  {V::integer(10), 5}, {V::singleton(4), 6}, {V::singleton(8), 4}};
}

inline ParentMap rooted_example_intermediate() {
  using V = VertexLabel;
  return {{V::integer(0), 10}, {V::integer(1), 7}, {V::integer(2), 6}, {V::integer(3), 6},
          {V::integer(4), 8},  {V::integer(7), 5}, {V::integer(8), 5}, {V::integer(9), 5},
          {V::integer(10), 5}, {V::singleton(4), 6}, {V::singleton(8), 4}};
}

inline ParentMap rooted_example_graph() {
  using V = VertexLabel;
  return {{V::integer(1), 7},  {V::integer(2), 6}, {V::integer(3), 6}, {V::integer(4), 8},
          {V::integer(5), 10}, {V::integer(6), 10}, {V::integer(7), 5}, {V::integer(8), 5},
          {V::integer(9), 5},  {V::integer(10), 5}, {V::singleton(4), 6}, {V::singleton(8), 4}};
}

}  // namespace qstirling::testing
