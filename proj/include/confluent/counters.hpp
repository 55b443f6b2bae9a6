#ifndef CONFLUENT_COUNTERS_HPP_
#define CONFLUENT_COUNTERS_HPP_

// Process-wide operation counters used to measure merge cost.
//
// Updates are relaxed atomics: safe under concurrency, but only meaningful
// when a single thread is being measured.

#include <atomic>
#include <cstdint>

namespace confluent {

struct OpCounters {
  std::uint64_t nodes_constructed = 0;  // node factory calls
  std::uint64_t nodes_allocated = 0;    // factory calls that created a new node
  std::uint64_t merge_calls = 0;
  std::uint64_t split_calls = 0;
  std::uint64_t join_calls = 0;
  std::uint64_t comparisons = 0;

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

void reset_counters();
OpCounters read_counters();

namespace internal {

struct CounterCells {
  std::atomic<std::uint64_t> nodes_constructed{0};
  std::atomic<std::uint64_t> nodes_allocated{0};
  std::atomic<std::uint64_t> merge_calls{0};
  std::atomic<std::uint64_t> split_calls{0};
  std::atomic<std::uint64_t> join_calls{0};
  std::atomic<std::uint64_t> comparisons{0};
};

extern CounterCells g_counters;

inline void bump(std::atomic<std::uint64_t>& cell) {
  cell.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace internal
}  // namespace confluent

#endif  // CONFLUENT_COUNTERS_HPP_
