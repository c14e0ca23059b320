#include "qstirling/coding.hpp"

#include <map>

#include "qstirling/errors.hpp"

namespace qstirling {

std::string to_string(VertexLabel label) {
  return label.is_singleton() ? "s" + std::to_string(label.value) : std::to_string(label.value);
}

std::ostream& operator<<(std::ostream& os, VertexLabel label) { return os << to_string(label); }

Coding::Coding(MultisetSpec m, int r) : multiset_(std::move(m)), shift_(r) {
  if (r < 0 || r > multiset_.excess()) {
    throw InvalidInput("coding shift " + std::to_string(r) + " outside [0, " +
                       std::to_string(multiset_.excess()) + "]");
  }
  integer_preimage_.assign(static_cast<std::size_t>(multiset_.excess() + 1), std::nullopt);
  int next = 0;
  for (int v = 1; v <= multiset_.n(); ++v) {
    for (int j = 2; j <= multiset_.multiplicity(v); ++j) {
      if (next == r) ++next;
      integer_preimage_[static_cast<std::size_t>(next)] = Entry{v, j};
      ++next;
    }
  }
}

std::optional<VertexLabel> Coding::code(Entry e) const {
  const int m = multiset_.multiplicity(e.value);
  if (m == 0 || e.copy < 1 || e.copy > m) throw InvalidInput("entry not in multiset");
  if (m == 1) return VertexLabel::singleton(e.value);
  if (e.copy == 1) return std::nullopt;
  // Coded entries before e, in increasing order.
  int rank = 0;
  for (int v = 1; v < e.value; ++v) rank += multiset_.multiplicity(v) - 1;
  rank += e.copy - 2;
  return VertexLabel::integer(rank < shift_ ? rank : rank + 1);
}

std::optional<Entry> Coding::entry(VertexLabel label) const {
  if (label.is_singleton()) {
    if (multiset_.multiplicity(label.value) != 1) throw InvalidInput("no singleton " + to_string(label));
    return Entry{label.value, 1};
  }
  if (label.value < 0 || label.value > multiset_.excess()) {
    throw InvalidInput("vertex label " + to_string(label) + " out of range");
  }
  return integer_preimage_[static_cast<std::size_t>(label.value)];
}

int Coding::edge_label(VertexLabel label) const {
  const auto e = entry(label);
  if (!e) throw InvalidInput("label " + to_string(label) + " is the root of this coding");
  return e->value;
}

std::vector<Coding::Row> Coding::table() const {
  std::vector<Row> rows;
  for (int v = 1; v <= multiset_.n(); ++v) {
    for (int j = 1; j <= multiset_.multiplicity(v); ++j) {
      if (auto c = code({v, j})) rows.push_back({{v, j}, *c});
    }
  }
  return rows;
}

Coding build_coding(const MultisetSpec& m, int r) { return Coding(m, r); }

std::vector<std::vector<int>> congruence_classes(const Coding& coding) {
  std::vector<std::vector<int>> classes;
  std::map<int, std::size_t> by_value;
  const int top = coding.multiset().excess();
  for (int label = 0; label <= top; ++label) {
    const auto e = coding.entry(VertexLabel::integer(label));
    if (!e) {
      classes.push_back({label});
      continue;
    }
    auto [it, fresh] = by_value.try_emplace(e->value, classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(label);
  }
  return classes;
}

std::vector<int> class_index(const Coding& coding) {
  std::vector<int> out(static_cast<std::size_t>(coding.multiset().excess() + 1), -1);
  const auto classes = congruence_classes(coding);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int label : classes[c]) out[static_cast<std::size_t>(label)] = static_cast<int>(c);
  }
  return out;
}

std::optional<Entry> root_entry(const MultisetSpec& m, int r) {
  if (r < 0 || r > m.excess()) {
    throw InvalidInput("root label " + std::to_string(r) + " outside [0, " + std::to_string(m.excess()) + "]");
  }
  if (r == 0) return std::nullopt;
  return Coding(m, 0).entry(VertexLabel::integer(r));
}

}  // namespace qstirling
