#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "qstirling/core.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/polynomial.hpp"

namespace qstirling {

// A partition of [n] into k possibly empty blocks, each written as a word.
class OrderedBlockPartition {
 public:
  OrderedBlockPartition() = default;
  // Throws InvalidInput unless the blocks cover 1..n exactly once, k >= 1.
  explicit OrderedBlockPartition(std::vector<Word> blocks);

  const std::vector<Word>& blocks() const { return blocks_; }
  const Word& block(std::size_t i) const { return blocks_.at(i); }
  int n() const { return n_; }
  int k() const { return static_cast<int>(blocks_.size()); }

  // The same partition with every block sorted increasingly; this is the
  // canonical representative of the unordered partition.
  OrderedBlockPartition unordered() const;

  // e.g. "{21}/e/e" ("e" marks an empty block).
  std::string to_string() const;

  auto operator<=>(const OrderedBlockPartition&) const = default;

 private:
  std::vector<Word> blocks_;
  int n_ = 0;
};

struct PartitionStats {
  int des = 0;
  int asc = 0;
  int emp = 0;
  int dd = 0;

  auto operator<=>(const PartitionStats&) const = default;
};

PartitionStats partition_stats(const OrderedBlockPartition& p);

// k(k+1)...(k+n-1).
BigInt rising_factorial(int k, int n);

// Every partition of [n] into k ordered blocks, deterministic order. The
// guard applies to n + k - 1 (the multiset size M that such partitions model).
void for_each_partition(int n, int k, const std::function<void(const OrderedBlockPartition&)>& visit,
                        int max_total = kDefaultMaxTotal);
std::vector<OrderedBlockPartition> enumerate_partitions(int n, int k, int max_total = kDefaultMaxTotal);

// All rearrangements of the blocks' contents, sorted.
std::vector<OrderedBlockPartition> partition_class(const OrderedBlockPartition& p);
BigInt partition_class_size(const OrderedBlockPartition& p);

// A partition whose blocks carry bar counts in each of their |block| + 1 gaps.
// Gap g of a block sits after its g-th letter (gap 0 is before the first).
struct BarredPartition {
  OrderedBlockPartition partition;
  std::vector<std::vector<int>> bars;

  int bar_count() const;
  auto operator<=>(const BarredPartition&) const = default;
};

// Shape checks plus: every descent of every block, including the final
// descent to the virtual 0, carries at least one bar.
bool is_valid_barred(const BarredPartition& b);

// Number of barred partitions of [n] into k blocks with exactly m bars,
// obtained by summing the free bar placements over every partition.
BigInt count_barred(int n, int k, int m, int max_total = kDefaultMaxTotal);

// C(k-1+m, m) * m^n.
BigInt count_barred_closed(int n, int k, int m);

// Lists every barred partition with m bars; bars per gap are capped at m and
// descent gaps start at one bar.
std::vector<BarredPartition> enumerate_barred(int n, int k, int m, int max_total = kDefaultMaxTotal);

// #{partitions with emp = i, des = j, dd = 0}.
BigInt gamma_count(int n, int k, int i, int j, int max_total = kDefaultMaxTotal);

}  // namespace qstirling
