#include "confluent/probe.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "confluent/set.hpp"

namespace confluent {
namespace {

using ProbeSet = Set<std::int64_t>;

ComplexityProbe probe_once(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> any_key;
  std::unordered_set<std::int64_t> seen;
  std::vector<std::int64_t> keys;
  keys.reserve(n);
  while (keys.size() < n) {
    const std::int64_t k = any_key(rng);
    if (seen.insert(k).second) keys.push_back(k);
  }
  const ProbeSet base = ProbeSet::from_range(keys);

  // m distinct modifications: each deletes an unused existing key or
  // inserts a fresh one.
  std::shuffle(keys.begin(), keys.end(), rng);
  std::size_t next_delete = 0;
  std::bernoulli_distribution coin(0.5);
  ProbeSet variant = base;
  for (std::size_t i = 0; i < m; ++i) {
    if (next_delete < keys.size() && coin(rng)) {
      variant = sub(variant, ProbeSet::singleton(keys[next_delete++]));
      continue;
    }
    std::int64_t k = any_key(rng);
    while (!seen.insert(k).second) k = any_key(rng);
    variant = add(variant, ProbeSet::singleton(k));
  }

  reset_counters();
  const ProbeSet merged = base | variant;
  ComplexityProbe probe;
  probe.observed = read_counters();
  probe.n = std::max(base.size(), variant.size());
  probe.m = std::min(base.size(), variant.size());
  probe.d = (base ^ variant).size();
  return probe;
}

}  // namespace

ProbeSummary run_probe(std::size_t n, std::size_t m, std::size_t trials,
                       std::uint64_t seed) {
  if (m > n) throw std::invalid_argument("probe: m must not exceed n");
  if (trials == 0) throw std::invalid_argument("probe: trials must be positive");

  ProbeSummary summary;
  summary.n = n;
  summary.m = m;
  summary.trials = trials;
  summary.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    summary.runs.push_back(probe_once(n, m, rng));
    const auto& p = summary.runs.back();
    summary.mean_d += static_cast<double>(p.d);
    summary.mean_merge_calls += static_cast<double>(p.observed.merge_calls);
    summary.mean_nodes_constructed +=
        static_cast<double>(p.observed.nodes_constructed);
    summary.mean_nodes_allocated += static_cast<double>(p.observed.nodes_allocated);
  }
  const auto count = static_cast<double>(trials);
  summary.mean_d /= count;
  summary.mean_merge_calls /= count;
  summary.mean_nodes_constructed /= count;
  summary.mean_nodes_allocated /= count;
  return summary;
}

std::string probe_csv_header() {
  return "n,m,d,trials,mean_merge_calls,mean_nodes_constructed";
}

std::string probe_csv_row(const ProbeSummary& s) {
  return fmt::format("{},{},{:g},{},{:.2f},{:.2f}", s.n, s.m, s.mean_d, s.trials,
                     s.mean_merge_calls, s.mean_nodes_constructed);
}

}  // namespace confluent
