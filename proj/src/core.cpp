#include "qstirling/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qstirling/errors.hpp"
#include "qstirling/parallel.hpp"

namespace qstirling {

// ---------------------------------------------------------------- multiset

std::ostream& operator<<(std::ostream& os, const Entry& e) {
  return os << e.value << '_' << e.copy;
}

MultisetSpec::MultisetSpec(std::vector<int> multiplicities)
    : multiplicities_(std::move(multiplicities)) {
  for (int m : multiplicities_) {
    if (m < 1) throw InvalidInput("multiset multiplicities must be >= 1");
  }
  total_ = std::accumulate(multiplicities_.begin(), multiplicities_.end(), 0);
}

MultisetSpec MultisetSpec::content_of(std::span<const int> word) {
  if (word.empty()) return MultisetSpec{};
  const int n = *std::max_element(word.begin(), word.end());
  std::vector<int> mult(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (int v : word) {
    if (v < 1) throw InvalidInput("word entries must be positive");
    ++mult[static_cast<std::size_t>(v - 1)];
  }
  for (int m : mult) {
    if (m == 0) throw InvalidInput("word content must use every value 1..n (reduce it first)");
  }
  return MultisetSpec(std::move(mult));
}

MultisetSpec MultisetSpec::parse(const std::string& text) {
  std::vector<int> mult;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int m = std::stoi(item, &used);
      if (used != item.size()) throw InvalidInput("bad multiplicity '" + item + "'");
      mult.push_back(m);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad multiplicity '" + item + "'");
    }
  }
  return MultisetSpec(std::move(mult));
}

int MultisetSpec::multiplicity(int value) const {
  if (value < 1 || value > n()) return 0;
  return multiplicities_[static_cast<std::size_t>(value - 1)];
}

std::vector<int> MultisetSpec::singletons() const {
  std::vector<int> out;
  for (int v = 1; v <= n(); ++v) {
    if (multiplicity(v) == 1) out.push_back(v);
  }
  return out;
}

Word MultisetSpec::sorted_word() const {
  Word w;
  w.reserve(static_cast<std::size_t>(total_));
  for (int v = 1; v <= n(); ++v) w.insert(w.end(), static_cast<std::size_t>(multiplicity(v)), v);
  return w;
}

std::string MultisetSpec::to_string() const {
  std::ostringstream os;
  os << '{';
  for (int v = 1; v <= n(); ++v) {
    if (v > 1) os << ',';
    os << v;
    if (multiplicity(v) > 1) os << '^' << multiplicity(v);
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultisetSpec& m) { return os << m.to_string(); }

std::optional<Entry> RootedWord::root_entry() const {
  if (!root) return std::nullopt;
  if (*root < 1 || *root > word.size()) return std::nullopt;
  const auto copies = copy_indices(word);
  return Entry{word[*root - 1], copies[*root - 1]};
}

void validate_root(const RootedWord& rw) {
  if (!rw.root) return;
  if (*rw.root < 1 || *rw.root > rw.word.size()) {
    throw InvalidInput("root position out of range");
  }
  if (rw.root_entry()->copy < 2) {
    throw InvalidInput("root must be a non-first copy of its value");
  }
}

std::ostream& operator<<(std::ostream& os, const StatTriple& s) {
  return os << '(' << s.des << ", " << s.asc << ", " << s.plat << ')';
}

std::vector<int> copy_indices(std::span<const int> word) {
  std::map<int, int> seen;
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) out.push_back(++seen[v]);
  return out;
}

std::optional<std::size_t> position_of(std::span<const int> word, Entry e) {
  int seen = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == e.value && ++seen == e.copy) return i + 1;
  }
  return std::nullopt;
}

std::string word_to_string(std::span<const int> word) {
  const bool compact = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v <= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << word[i];
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        w.push_back(std::stoi(item));
      } catch (const std::logic_error&) {
        throw InvalidInput("bad word entry '" + item + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidInput(std::string("bad word character '") + c + "'");
      w.push_back(c - '0');
    }
  }
  for (int v : w) {
    if (v < 1) throw InvalidInput("word entries must be positive");
  }
  return w;
}

// -------------------------------------------------------------- statistics

void check_guard(const MultisetSpec& m, int max_total) {
  if (m.total() > max_total) {
    throw GuardExceeded("multiset " + m.to_string() + " has M = " + std::to_string(m.total()) +
                        " > guard " + std::to_string(max_total));
  }
}

Word reduce(std::span<const int> w) {
  Word sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Word out;
  out.reserve(w.size());
  for (int v : w) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return out;
}

StatTriple word_stats(std::span<const int> w) {
  StatTriple s;
  const std::size_t len = w.size();
  for (std::size_t i = 0; i <= len; ++i) {
    const int a = i == 0 ? 0 : w[i - 1];
    const int b = i == len ? 0 : w[i];
    if (a > b) {
      ++s.des;
    } else if (a < b) {
      ++s.asc;
    } else {
      ++s.plat;
    }
  }
  return s;
}

CyclicStats cyclic_stats(std::span<const int> s) {
  if (s.empty()) throw InvalidInput("cyclic statistics need a nonempty sequence");
  CyclicStats c;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int a = s[i];
    const int b = s[(i + 1) % s.size()];
    if (a > b) ++c.cdes;
    if (a < b) ++c.casc;
  }
  return c;
}

int double_descents(std::span<const int> w) {
  int count = 0;
  const std::size_t len = w.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int prev = i == 0 ? 0 : w[i - 1];
    const int next = i + 1 == len ? 0 : w[i + 1];
    if (prev > w[i] && w[i] > next) ++count;
  }
  return count;
}

bool is_quasi_stirling(std::span<const int> w) {
  std::map<int, int> remaining;
  for (int v : w) ++remaining[v];
  std::map<int, bool> opened;
  std::vector<int> stack;
  for (int v : w) {
    const int left = --remaining[v];
    if (!opened[v]) {
      opened[v] = true;
      if (left > 0) stack.push_back(v);
      continue;
    }
    if (stack.empty() || stack.back() != v) return false;
    if (left == 0) stack.pop_back();
  }
  return true;
}

bool is_quasi_stirling_pairwise(std::span<const int> w) {
  Word values(w.begin(), w.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int a : values) {
    for (int b : values) {
      if (a == b) continue;
      const int pattern[4] = {a, b, a, b};
      int matched = 0;
      for (int v : w) {
        if (matched < 4 && v == pattern[matched]) ++matched;
      }
      if (matched == 4) return false;
    }
  }
  return true;
}

bool is_stirling(std::span<const int> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int smallest_between = 0;
    bool any_between = false;
    for (std::size_t k = i + 1; k < w.size(); ++k) {
      if (w[k] == w[i] && any_between && smallest_between < w[i]) return false;
      if (!any_between || w[k] < smallest_between) smallest_between = w[k];
      any_between = true;
    }
  }
  return true;
}

SiblingStats sibling_stats(std::span<const int> w, DsdRule rule) {
  if (!is_quasi_stirling(w)) {
    throw InvalidInput("sibling statistics need a quasi-Stirling word, got " + word_to_string(w));
  }
  const std::size_t len = w.size();
  std::map<int, int> total;
  for (int v : w) ++total[v];
  const auto copies = copy_indices(w);
  auto is_first = [&](std::size_t i) { return copies[i] == 1; };
  auto is_last = [&](std::size_t i) { return copies[i] == total[w[i]]; };

  // type_at[i] for 0-based index i (1-based position i+1); w_{M+1} is the
  // second copy of the virtual value 0.
  std::vector<std::optional<SiblingType>> type_at(len);
  SiblingStats out;
  for (std::size_t i = 0; i < len; ++i) {
    if (!is_last(i)) continue;
    std::optional<SiblingType> t;
    if (i + 1 == len) {
      t = SiblingType::type_two;
    } else if (is_first(i + 1)) {
      if (w[i] > w[i + 1]) t = SiblingType::type_one;
    } else {
      t = SiblingType::type_two;
    }
    if (t) {
      type_at[i] = t;
      out.descents.push_back({i + 1, *t});
    }
  }
  out.sd = static_cast<int>(out.descents.size());

  if (rule == DsdRule::literal) {
    for (std::size_t i = 1; i < len; ++i) {
      if (type_at[i] && type_at[i - 1] == SiblingType::type_one) ++out.dsd;
    }
    return out;
  }
  std::map<int, std::size_t> last_position;
  for (std::size_t i = 0; i < len; ++i) last_position[w[i]] = i;
  for (std::size_t f = 1; f < len; ++f) {
    if (!is_first(f)) continue;
    if (type_at[f - 1] != SiblingType::type_one) continue;
    if (type_at[last_position[w[f]]]) ++out.dsd;
  }
  return out;
}

// ------------------------------------------------------------- enumeration

void for_each_multiset_permutation(const MultisetSpec& m,
                                   const std::function<void(const Word&)>& visit, int max_total) {
  check_guard(m, max_total);
  Word w = m.sorted_word();
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

namespace {

class QuasiStirlingWalker {
 public:
  QuasiStirlingWalker(const MultisetSpec& m, const std::function<void(const Word&)>& visit)
      : m_(m),
        visit_(visit),
        remaining_(m.multiplicities()),
        opened_(static_cast<std::size_t>(m.n()), false) {
    word_.reserve(static_cast<std::size_t>(m.total()));
  }

  void run() { step(); }

  // Restricts the first letter (used to split work between threads).
  void run_with_first(int value) {
    if (!place(value)) return;
    step();
    unplace(value);
  }

 private:
  struct Undo {
    bool opened = false;
    bool pushed = false;
    bool popped = false;
  };

  bool can_place(int v) const {
    const auto i = static_cast<std::size_t>(v - 1);
    if (remaining_[i] == 0) return false;
    if (!opened_[i]) return true;
    return !stack_.empty() && stack_.back() == v;
  }

  bool place(int v) {
    if (!can_place(v)) return false;
    const auto i = static_cast<std::size_t>(v - 1);
    Undo u;
    --remaining_[i];
    if (!opened_[i]) {
      opened_[i] = true;
      u.opened = true;
      if (remaining_[i] > 0) {
        stack_.push_back(v);
        u.pushed = true;
      }
    } else if (remaining_[i] == 0) {
      stack_.pop_back();
      u.popped = true;
    }
    undo_.push_back(u);
    word_.push_back(v);
    return true;
  }

  void unplace(int v) {
    const auto i = static_cast<std::size_t>(v - 1);
    const Undo u = undo_.back();
    undo_.pop_back();
    word_.pop_back();
    if (u.pushed) stack_.pop_back();
    if (u.popped) stack_.push_back(v);
    if (u.opened) opened_[i] = false;
    ++remaining_[i];
  }

  void step() {
    if (word_.size() == static_cast<std::size_t>(m_.total())) {
      visit_(word_);
      return;
    }
    for (int v = 1; v <= m_.n(); ++v) {
      if (!place(v)) continue;
      step();
      unplace(v);
    }
  }

  const MultisetSpec& m_;
  const std::function<void(const Word&)>& visit_;
  std::vector<int> remaining_;
  std::vector<bool> opened_;
  std::vector<int> stack_;
  std::vector<Undo> undo_;
  Word word_;
};

}  // namespace

void for_each_quasi_stirling(const MultisetSpec& m, const std::function<void(const Word&)>& visit,
                             int max_total) {
  check_guard(m, max_total);
  QuasiStirlingWalker(m, visit).run();
}

std::vector<Word> enumerate_quasi_stirling(const MultisetSpec& m, EnumerationOptions opts) {
  check_guard(m, opts.max_total);
  if (opts.jobs <= 1 || m.n() <= 1) {
    std::vector<Word> out;
    for_each_quasi_stirling(m, [&](const Word& w) { out.push_back(w); }, opts.max_total);
    return out;
  }
  std::vector<std::vector<Word>> parts(static_cast<std::size_t>(m.n()));
  parallel_for(parts.size(), opts.jobs, [&](std::size_t i) {
    std::function<void(const Word&)> collect = [&parts, i](const Word& w) { parts[i].push_back(w); };
    QuasiStirlingWalker(m, collect).run_with_first(static_cast<int>(i) + 1);
  });
  std::vector<Word> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

std::vector<RootedWord> enumerate_rooted(const MultisetSpec& m, EnumerationOptions opts) {
  std::vector<RootedWord> out;
  for (auto& w : enumerate_quasi_stirling(m, opts)) {
    const auto copies = copy_indices(w);
    out.push_back({w, std::nullopt});
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (copies[p] >= 2) out.push_back({w, p + 1});
    }
  }
  return out;
}

std::vector<MultisetSpec> compositions(int total) {
  std::vector<MultisetSpec> out;
  if (total <= 0) return out;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  rec(total);
  return out;
}

std::vector<MultisetSpec> multisets_up_to(int max_total) {
  std::vector<MultisetSpec> out;
  for (int total = 1; total <= max_total; ++total) {
    auto part = compositions(total);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace qstirling
