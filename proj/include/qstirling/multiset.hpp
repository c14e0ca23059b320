#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qstirling {

// A word over positive integers. Boundary zeros are never stored; every
// statistic applies the w_0 = w_{L+1} = 0 convention internally.
using Word = std::vector<int>;

// One element of a multiset, identified by its value and its copy index
// (1-based, counted left to right / in increasing order).
struct Entry {
  int value = 0;
  int copy = 0;

  auto operator<=>(const Entry&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Entry& e);

// The multiset {1^{m_1}, ..., n^{m_n}} given by its multiplicity vector.
class MultisetSpec {
 public:
  MultisetSpec() = default;
  explicit MultisetSpec(std::vector<int> multiplicities);

  // Content multiset of a word whose values are exactly 1..n.
  static MultisetSpec content_of(std::span<const int> word);

  // Parses "2,2,1" (multiplicities separated by commas).
  static MultisetSpec parse(const std::string& text);

  const std::vector<int>& multiplicities() const { return multiplicities_; }
  int n() const { return static_cast<int>(multiplicities_.size()); }
  int total() const { return total_; }
  // M - n, the largest integer vertex label.
  int excess() const { return total_ - n(); }
  // k = M - n + 1, the number of blocks / admissible roots.
  int block_count() const { return excess() + 1; }
  int multiplicity(int value) const;
  bool is_singleton(int value) const { return multiplicity(value) == 1; }
  std::vector<int> singletons() const;
  bool empty() const { return multiplicities_.empty(); }

  // The multiset's elements listed increasingly, e.g. {1^2,2} -> 112.
  Word sorted_word() const;
  std::string to_string() const;

  auto operator<=>(const MultisetSpec&) const = default;

 private:
  std::vector<int> multiplicities_;
  int total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultisetSpec& m);

// A multipermutation together with an optional designated root entry.
// The root is a 1-based position holding a non-first copy of its value;
// std::nullopt stands for the implicit root 0.
struct RootedWord {
  Word word;
  std::optional<std::size_t> root;

  // (value, copy index) of the root entry, if any.
  std::optional<Entry> root_entry() const;

  auto operator<=>(const RootedWord&) const = default;
};

// Throws InvalidInput unless the root points at a non-first copy.
void validate_root(const RootedWord& rw);

struct StatTriple {
  int des = 0;
  int asc = 0;
  int plat = 0;

  auto operator<=>(const StatTriple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const StatTriple& s);

// Copy index of every position of a word (1-based copies).
std::vector<int> copy_indices(std::span<const int> word);

// Position (1-based) of the given entry inside the word, if present.
std::optional<std::size_t> position_of(std::span<const int> word, Entry e);

std::string word_to_string(std::span<const int> word);

// Parses "1221" (single digits) or "7,8,2,1" (comma separated).
Word parse_word(const std::string& text);

}  // namespace qstirling
