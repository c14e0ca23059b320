#include "qstirling/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "qstirling/errors.hpp"
#include "qstirling/eulerian.hpp"

namespace qstirling {

OrderedBlockPartition::OrderedBlockPartition(std::vector<Word> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidInput("a partition needs at least one block");
  std::vector<int> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) {
      throw InvalidInput("blocks must contain each of 1.." + std::to_string(all.size()) + " exactly once");
    }
  }
  n_ = static_cast<int>(all.size());
}

OrderedBlockPartition OrderedBlockPartition::unordered() const {
  auto blocks = blocks_;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return OrderedBlockPartition(std::move(blocks));
}

std::string OrderedBlockPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += '/';
    out += blocks_[i].empty() ? "e" : "{" + word_to_string(blocks_[i]) + "}";
  }
  return out;
}

PartitionStats partition_stats(const OrderedBlockPartition& p) {
  PartitionStats s;
  for (const auto& b : p.blocks()) {
    const auto w = word_stats(b);
    s.des += w.des;
    s.asc += w.asc;
    if (b.empty()) ++s.emp;
    s.dd += double_descents(b);
  }
  return s;
}

BigInt rising_factorial(int k, int n) {
  BigInt out = 1;
  for (int i = 0; i < n; ++i) out *= k + i;
  return out;
}

namespace {

void check_partition_guard(int n, int k, int max_total) {
  if (n < 0 || k < 1) throw InvalidInput("partitions need n >= 0 and k >= 1");
  if (n + k - 1 > max_total) {
    throw GuardExceeded("n + k - 1 = " + std::to_string(n + k - 1) + " exceeds the guard " +
                        std::to_string(max_total));
  }
}

}  // namespace

void for_each_partition(int n, int k, const std::function<void(const OrderedBlockPartition&)>& visit,
                        int max_total) {
  check_partition_guard(n, k, max_total);
  std::vector<Word> blocks(static_cast<std::size_t>(k));
  // Insert 1, 2, ..., n one at a time into every slot of every block.
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      visit(OrderedBlockPartition(blocks));
      return;
    }
    for (auto& b : blocks) {
      for (std::size_t pos = 0; pos <= b.size(); ++pos) {
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(pos), v);
        rec(v + 1);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(pos));
      }
    }
  };
  rec(1);
}

std::vector<OrderedBlockPartition> enumerate_partitions(int n, int k, int max_total) {
  std::vector<OrderedBlockPartition> out;
  for_each_partition(n, k, [&](const OrderedBlockPartition& p) { out.push_back(p); }, max_total);
  return out;
}

std::vector<OrderedBlockPartition> partition_class(const OrderedBlockPartition& p) {
  std::vector<Word> blocks = p.unordered().blocks();
  std::vector<OrderedBlockPartition> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == blocks.size()) {
      out.emplace_back(blocks);
      return;
    }
    auto& b = blocks[i];
    std::sort(b.begin(), b.end());
    do {
      rec(i + 1);
    } while (std::next_permutation(b.begin(), b.end()));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt partition_class_size(const OrderedBlockPartition& p) {
  BigInt size = 1;
  for (const auto& b : p.blocks()) size *= factorial(static_cast<int>(b.size()));
  return size;
}

int BarredPartition::bar_count() const {
  int total = 0;
  for (const auto& gaps : bars) total += std::accumulate(gaps.begin(), gaps.end(), 0);
  return total;
}

namespace {

// Gaps of a block that hold a descent: gap i (1 <= i <= r) when w_i > w_{i+1}.
std::vector<bool> descent_gaps(const Word& block) {
  std::vector<bool> out(block.size() + 1, false);
  for (std::size_t i = 1; i <= block.size(); ++i) {
    const int next = i < block.size() ? block[i] : 0;
    out[i] = block[i - 1] > next;
  }
  return out;
}

}  // namespace

bool is_valid_barred(const BarredPartition& b) {
  const auto& blocks = b.partition.blocks();
  if (b.bars.size() != blocks.size()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (b.bars[i].size() != blocks[i].size() + 1) return false;
    const auto need = descent_gaps(blocks[i]);
    for (std::size_t g = 0; g < need.size(); ++g) {
      if (b.bars[i][g] < 0) return false;
      if (need[g] && b.bars[i][g] < 1) return false;
    }
  }
  return true;
}

BigInt count_barred(int n, int k, int m, int max_total) {
  if (m < 0) throw InvalidInput("bar count must be nonnegative");
  const int gaps = n + k;
  BigInt total = 0;
  for_each_partition(
      n, k,
      [&](const OrderedBlockPartition& p) {
        const int free = m - partition_stats(p).des;
        if (free >= 0) total += binomial(free + gaps - 1, gaps - 1);
      },
      max_total);
  return total;
}

BigInt count_barred_closed(int n, int k, int m) {
  if (m < 0 || n < 0 || k < 1) throw InvalidInput("count_barred_closed needs m, n >= 0 and k >= 1");
  return binomial(k - 1 + m, m) * boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n));
}

std::vector<BarredPartition> enumerate_barred(int n, int k, int m, int max_total) {
  if (m < 0) throw InvalidInput("bar count must be nonnegative");
  std::vector<BarredPartition> out;
  for_each_partition(
      n, k,
      [&](const OrderedBlockPartition& p) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;  // (block, gap)
        std::vector<int> minimum;
        for (std::size_t i = 0; i < p.blocks().size(); ++i) {
          const auto need = descent_gaps(p.blocks()[i]);
          for (std::size_t g = 0; g < need.size(); ++g) {
            slots.emplace_back(i, g);
            minimum.push_back(need[g] ? 1 : 0);
          }
        }
        const int required = std::accumulate(minimum.begin(), minimum.end(), 0);
        if (required > m) return;
        BarredPartition b{p, {}};
        for (const auto& blk : p.blocks()) b.bars.emplace_back(blk.size() + 1, 0);
        std::function<void(std::size_t, int, int)> place = [&](std::size_t s, int left, int still_needed) {
          if (s == slots.size()) {
            if (left == 0) out.push_back(b);
            return;
          }
          const int lo = minimum[s];
          const int hi = left - (still_needed - lo);
          for (int c = lo; c <= hi; ++c) {
            b.bars[slots[s].first][slots[s].second] = c;
            place(s + 1, left - c, still_needed - lo);
          }
          b.bars[slots[s].first][slots[s].second] = 0;
        };
        place(0, m, required);
      },
      max_total);
  return out;
}

BigInt gamma_count(int n, int k, int i, int j, int max_total) {
  BigInt count = 0;
  for_each_partition(
      n, k,
      [&](const OrderedBlockPartition& p) {
        const auto s = partition_stats(p);
        if (s.emp == i && s.des == j && s.dd == 0) ++count;
      },
      max_total);
  return count;
}

}  // namespace qstirling
