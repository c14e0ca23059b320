#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qstirling/multiset.hpp"

namespace qstirling {

// A vertex label of a VE-tree: an integer in [M-n]_0 or a singleton s_i.
struct VertexLabel {
  enum class Kind : std::uint8_t { integer, singleton };

  Kind kind = Kind::integer;
  int value = 0;

  static constexpr VertexLabel integer(int i) { return {Kind::integer, i}; }
  static constexpr VertexLabel singleton(int v) { return {Kind::singleton, v}; }

  constexpr bool is_integer() const { return kind == Kind::integer; }
  constexpr bool is_singleton() const { return kind == Kind::singleton; }

  auto operator<=>(const VertexLabel&) const = default;
};

std::string to_string(VertexLabel label);
std::ostream& operator<<(std::ostream& os, VertexLabel label);

// The r-coding of a multiset: entries listed increasingly receive codes
// 0, 1, ..., r-1, r+1, ..., M-n, skipping first copies; singleton i gets s_i.
// r = 0 is the standard coding.
class Coding {
 public:
  struct Row {
    Entry entry;
    VertexLabel code;
  };

  Coding(MultisetSpec m, int r);

  const MultisetSpec& multiset() const { return multiset_; }
  int shift() const { return shift_; }

  // Code of an entry, or nullopt for first copies of non-singleton values.
  std::optional<VertexLabel> code(Entry e) const;

  // Preimage of a label; nullopt for the root label r.
  std::optional<Entry> entry(VertexLabel label) const;

  // Value of the preimage, i.e. the label of the edge starting at `label`.
  // Throws InvalidInput for r or out-of-range labels.
  int edge_label(VertexLabel label) const;

  // Coded entries sorted by (value, copy).
  std::vector<Row> table() const;

 private:
  MultisetSpec multiset_;
  int shift_ = 0;
  std::vector<std::optional<Entry>> integer_preimage_;  // index = code
};

// Throws InvalidInput unless 0 <= r <= M - n.
Coding build_coding(const MultisetSpec& m, int r);

// Congruence classes of integer labels [M-n]_0 under the coding: labels
// whose preimages share a value, plus the preimage-less class {r}. Each class
// is a run of consecutive labels (jumping over r); classes are ordered by
// their minimum.
std::vector<std::vector<int>> congruence_classes(const Coding& coding);

// Per integer label, the index of its class in congruence_classes().
std::vector<int> class_index(const Coding& coding);

// c^{-1}(r) under the standard coding; nullopt for r = 0 (unrooted).
// Throws InvalidInput when r is outside [0, M-n].
std::optional<Entry> root_entry(const MultisetSpec& m, int r);

}  // namespace qstirling
