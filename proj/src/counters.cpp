#include "confluent/counters.hpp"

namespace confluent {
namespace internal {

CounterCells g_counters;

}  // namespace internal

void reset_counters() {
  auto& c = internal::g_counters;
  for (auto* cell : {&c.nodes_constructed, &c.nodes_allocated, &c.merge_calls,
                     &c.split_calls, &c.join_calls, &c.comparisons}) {
    cell->store(0, std::memory_order_relaxed);
  }
}

OpCounters read_counters() {
  const auto& c = internal::g_counters;
  constexpr auto relaxed = std::memory_order_relaxed;
  return OpCounters{
      .nodes_constructed = c.nodes_constructed.load(relaxed),
      .nodes_allocated = c.nodes_allocated.load(relaxed),
      .merge_calls = c.merge_calls.load(relaxed),
      .split_calls = c.split_calls.load(relaxed),
      .join_calls = c.join_calls.load(relaxed),
      .comparisons = c.comparisons.load(relaxed),
  };
}

}  // namespace confluent
