#ifndef CONFLUENT_PROBE_HPP_
#define CONFLUENT_PROBE_HPP_

// Merge-cost probes: build a random n-key set, derive a variant by m random
// insertions and deletions, union the two, and record the counters.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "confluent/counters.hpp"

namespace confluent {

struct ComplexityProbe {
  std::size_t n = 0;  // larger operand size
  std::size_t m = 0;  // smaller operand size
  std::size_t d = 0;  // symmetric difference size
  OpCounters observed;
};

struct ProbeSummary {
  std::size_t n = 0;  // requested base size
  std::size_t m = 0;  // requested modifications
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_d = 0;
  double mean_merge_calls = 0;
  double mean_nodes_constructed = 0;
  double mean_nodes_allocated = 0;
  std::vector<ComplexityProbe> runs;
};

/// Throws std::invalid_argument unless m <= n and trials > 0.
ProbeSummary run_probe(std::size_t n, std::size_t m, std::size_t trials,
                       std::uint64_t seed);

/// "n,m,d,trials,mean_merge_calls,mean_nodes_constructed"
std::string probe_csv_header();
std::string probe_csv_row(const ProbeSummary& summary);

}  // namespace confluent

#endif  // CONFLUENT_PROBE_HPP_
