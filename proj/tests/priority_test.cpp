#include "confluent/priority.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>

#include "confluent/encoding.hpp"
#include "confluent/set.hpp"
#include "confluent/treap.hpp"

namespace confluent {
namespace {

std::string hex_prefix(const Sha512Priority::digest_type& d, std::size_t bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bytes; ++i) {
    out += kHex[d[i] >> 4];
    out += kHex[d[i] & 0xf];
  }
  return out;
}

TEST(EncodingTest, TextIsLengthPrefixed) {
  EXPECT_EQ(canonical_encoding(std::string("a")),
            std::string("\0\0\0\0\0\0\0\1a", 9));
  EXPECT_EQ(canonical_encoding(std::string()), std::string(8, '\0'));
}

TEST(EncodingTest, IntegersAreFixedWidthBigEndian) {
  EXPECT_EQ(canonical_encoding(std::int64_t{1}), std::string("\0\0\0\0\0\0\0\1", 8));
  EXPECT_EQ(canonical_encoding(std::int64_t{-1}), std::string(8, '\xff'));
  EXPECT_EQ(canonical_encoding(std::int32_t{258}), std::string("\0\0\1\2", 4));
}

TEST(EncodingTest, TextEncodingIsPrefixFree) {
  // "ab" + "c" and "a" + "bc" must not collide when concatenated.
  EXPECT_NE(canonical_encoding(std::string("ab")) + canonical_encoding(std::string("c")),
            canonical_encoding(std::string("a")) + canonical_encoding(std::string("bc")));
}

// Expected prefixes computed with Python's hashlib.sha512 over the same
// canonical encodings.
TEST(Sha512PriorityTest, MatchesReferenceDigests) {
  auto text = [](const char* s) {
    return Sha512Priority::digest(canonical_encoding(std::string(s)));
  };
  EXPECT_EQ(hex_prefix(text("a"), 16), "a5ed326a3f4c04e6e5730f744a71f577");
  EXPECT_EQ(hex_prefix(text("b"), 16), "fd950bb7ac83cf83737eba8fd50b0b72");
  EXPECT_EQ(hex_prefix(text("c"), 16), "348d48d2526197111de69811cd2b2202");
  EXPECT_EQ(hex_prefix(text("d"), 16), "f25669074b5fe764d961610e07c0b0f5");
  EXPECT_EQ(hex_prefix(text("e"), 16), "d295765fda2c6cb0f306ceab0010e902");
  auto integer = [](std::int64_t v) {
    return Sha512Priority::digest(canonical_encoding(v));
  };
  EXPECT_EQ(hex_prefix(integer(0), 16), "1b7409ccf0d5a34d3a77eaabfa9fe274");
  EXPECT_EQ(hex_prefix(integer(-1), 16), "d0e784dd6dfb1a1f64da68379c349e5d");
  EXPECT_EQ(hex_prefix(integer(42), 16), "4feac35b8fb016c66121cdd0e3fe6fe3");
}

TEST(Sha512PriorityTest, DeterministicAndOrdered) {
  const auto a = Sha512Priority::digest(canonical_encoding(std::string("a")));
  EXPECT_EQ(a, Sha512Priority::digest(canonical_encoding(std::string("a"))));
  const auto b = Sha512Priority::digest(canonical_encoding(std::string("b")));
  EXPECT_LT(a, b);  // b (fd..) outranks a (a5..)
}

TEST(Crc32cTest, StandardCheckValue) {
  EXPECT_EQ(crc32c("123456789"), 0xE3069283u);
  EXPECT_EQ(crc32c(""), 0u);
  const auto d = Crc32cPriority::digest("123456789");
  EXPECT_EQ(d, (Crc32cPriority::digest_type{0xE3, 0x06, 0x92, 0x83}));
}

// Finds two integer keys with equal CRC-32C digests (birthday search).
std::pair<std::int64_t, std::int64_t> crc_collision() {
  // Consecutive integers never collide: over fixed-width input the CRC is
  // a bijection on any 32-bit window. Random keys do, after ~2^16 draws.
  std::mt19937_64 rng(1);
  std::unordered_map<std::uint32_t, std::int64_t> seen;
  for (;;) {
    const auto k = static_cast<std::int64_t>(rng());
    auto [it, fresh] = seen.emplace(crc32c(canonical_encoding(k)), k);
    if (!fresh && it->second != k) return std::minmax(it->second, k);
  }
}

TEST(Crc32cPriorityTest, CollidingDigestsFallBackToKeyOrder) {
  const auto [lo, hi] = crc_collision();
  ASSERT_LT(lo, hi);
  ASSERT_EQ(Crc32cPriority::digest(canonical_encoding(lo)),
            Crc32cPriority::digest(canonical_encoding(hi)));

  using WeakSet = Set<std::int64_t, Crc32cPriority>;
  const auto a = WeakSet::singleton(lo);
  const auto b = WeakSet::singleton(hi);
  EXPECT_TRUE(rank_less(*a.root(), *b.root()));
  EXPECT_FALSE(rank_less(*b.root(), *a.root()));

  // The greater key becomes the root and the set stays canonical.
  const auto both = a | b;
  EXPECT_EQ(both.root()->element(), hi);
  EXPECT_EQ(both, WeakSet({hi, lo}));
  EXPECT_EQ(both, b | a);
  EXPECT_TRUE(treap::is_valid_treap(both.root()));
}

}  // namespace
}  // namespace confluent
