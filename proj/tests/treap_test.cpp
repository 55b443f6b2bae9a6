#include "confluent/treap.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "confluent/counters.hpp"
#include "confluent/set.hpp"

namespace confluent {
namespace {

using S = Set<std::string>;
using IntSet = Set<std::int64_t>;

std::vector<std::string> keys_of(const S& s) { return s.to_vector(); }

std::vector<std::int64_t> random_keys(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist;
  std::set<std::int64_t> seen;
  while (seen.size() < n) seen.insert(dist(rng));
  std::vector<std::int64_t> out(seen.begin(), seen.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

TEST(TreapTest, Singleton) {
  const auto a = S::singleton("a");
  EXPECT_EQ(keys_of(a), std::vector<std::string>{"a"});
  EXPECT_EQ(a.root(), S::singleton("a").root());
  EXPECT_EQ(S::singleton("x").size(), 1u);
}

TEST(TreapTest, SplitBaseCases) {
  auto [l, r] = S().split("k");
  EXPECT_TRUE(l.empty());
  EXPECT_TRUE(r.empty());

  const S abc{"a", "b", "c"};
  auto [l2, r2] = abc.split("b");
  EXPECT_EQ(keys_of(l2), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(keys_of(r2), std::vector<std::string>{"c"});

  auto [l3, r3] = abc.split("z");
  EXPECT_EQ(l3, abc);
  EXPECT_TRUE(r3.empty());
}

TEST(TreapTest, JoinBaseCases) {
  const S t{"m", "n"};
  EXPECT_EQ(join(S(), t), t);
  EXPECT_EQ(join(t, S()), t);
  EXPECT_EQ(keys_of(join(S{"a"}, S{"b"})), (std::vector<std::string>{"a", "b"}));
}

TEST(TreapTest, JoinRootHasGreaterRank) {
  const auto a = S::singleton("a");
  const auto b = S::singleton("b");  // b outranks a
  EXPECT_EQ(join(a, b).root()->element(), "b");
  EXPECT_EQ(join(S{"a", "c"}, S{"d", "e"}).root()->element(), "d");
}

TEST(TreapTest, SplitJoinRoundTripIsIdentity) {
  const S abcd{"a", "b", "c", "d"};
  auto [l, r] = abcd.split("b");
  EXPECT_EQ(join(l, r).root(), abcd.root());

  std::mt19937_64 rng(7);
  const auto keys = random_keys(300, rng);
  const auto t = IntSet::from_range(keys);
  std::uniform_int_distribution<std::int64_t> dist;
  for (int i = 0; i < 100; ++i) {
    // Present and absent split keys alike.
    const std::int64_t k = (i % 2) ? keys[i] : dist(rng);
    auto [lo, hi] = t.split(k);
    EXPECT_TRUE(treap::is_valid_treap(lo.root()));
    EXPECT_TRUE(treap::is_valid_treap(hi.root()));
    for (auto x : lo) EXPECT_LE(x, k);
    for (auto x : hi) EXPECT_GT(x, k);
    EXPECT_EQ(lo.size() + hi.size(), t.size());
    EXPECT_EQ(join(lo, hi), t);
  }
}

TEST(TreapTest, SplitConstructsAtMostHeightNodes) {
  std::mt19937_64 rng(11);
  const auto keys = random_keys(5000, rng);
  const auto t = IntSet::from_range(keys);
  const auto h = t.height();
  for (int i = 0; i < 50; ++i) {
    reset_counters();
    auto parts = t.split(keys[i]);
    EXPECT_LE(read_counters().nodes_constructed, h);
  }
}

TEST(TreapTest, Contains) {
  EXPECT_FALSE(S().contains("a"));
  const S ab{"a", "b"};
  EXPECT_TRUE(ab.contains("b"));
  EXPECT_FALSE(ab.contains("c"));
}

TEST(TreapTest, IterateInOrder) {
  EXPECT_TRUE(keys_of(S()).empty());
  EXPECT_EQ(keys_of(S{"c", "a", "b"}), (std::vector<std::string>{"a", "b", "c"}));
  std::mt19937_64 rng(3);
  const auto t = IntSet::from_range(random_keys(1000, rng));
  EXPECT_EQ(static_cast<std::size_t>(std::distance(t.begin(), t.end())), t.size());
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
  EXPECT_EQ(std::adjacent_find(t.begin(), t.end()), t.end());
}

TEST(TreapTest, Cardinality) {
  EXPECT_EQ(S().size(), 0u);
  const S abc{"a", "b", "c"};
  EXPECT_EQ(abc.size(), 3u);
  EXPECT_EQ((abc | abc).size(), abc.size());
}

TEST(TreapTest, Height) {
  EXPECT_EQ(S().height(), 0u);
  EXPECT_EQ(S::singleton("k").height(), 1u);
  EXPECT_EQ(S({"a", "b", "c"}).height(), 2u);  // b(a, c)
}

TEST(TreapTest, HeightIsLogarithmicOnAverage) {
  std::mt19937_64 rng(2024);
  double total = 0;
  constexpr int kSets = 10;
  for (int i = 0; i < kSets; ++i) {
    total += static_cast<double>(IntSet::from_range(random_keys(100'000, rng)).height());
  }
  EXPECT_LE(total / kSets, 4 * std::log2(100'000.0));
}

TEST(TreapTest, BulkBuildMatchesIncrementalBuild) {
  std::mt19937_64 rng(5);
  const auto keys = random_keys(2000, rng);
  IntSet incremental;
  for (auto k : keys) incremental = add(incremental, IntSet::singleton(k));
  const auto bulk = IntSet::from_range(keys);
  EXPECT_EQ(bulk.root(), incremental.root());
  EXPECT_TRUE(treap::is_valid_treap(bulk.root()));
}

TEST(TreapTest, FromRangeIgnoresDuplicates) {
  const auto s = S::from_range(std::vector<std::string>{"b", "a", "b", "a"});
  EXPECT_EQ(s, (S{"a", "b"}));
}

TEST(TreapTest, RootIsPureFunctionOfContent) {
  std::mt19937_64 rng(99);
  const auto keys = random_keys(200, rng);
  const auto reference = IntSet::from_range(keys);
  for (int trial = 0; trial < 10; ++trial) {
    auto order = keys;
    std::shuffle(order.begin(), order.end(), rng);
    IntSet s;
    for (auto k : order) s = s | IntSet::singleton(k);
    EXPECT_EQ(s.root(), reference.root());
  }
}

}  // namespace
}  // namespace confluent
