#ifndef CONFLUENT_PRIORITY_HPP_
#define CONFLUENT_PRIORITY_HPP_

// Priority backends. A backend maps a key's canonical encoding to a
// fixed-width digest; digests compare lexicographically, and a greater
// digest means a node sits closer to the root. Equal digests are broken by
// comparing elements, so a weak backend changes the tree shape but never
// correctness.

#include <array>
#include <cstdint>
#include <string_view>

namespace confluent {

template <class H>
concept PriorityBackend = requires(std::string_view bytes) {
  typename H::digest_type;
  { H::digest(bytes) } -> std::same_as<typename H::digest_type>;
};

/// SHA-512 over the canonical encoding. The default backend.
struct Sha512Priority {
  using digest_type = std::array<std::uint8_t, 64>;
  static digest_type digest(std::string_view bytes);
};

/// CRC-32C (Castagnoli) over the canonical encoding, stored big-endian.
/// Cheap, 32 bits wide, and collides; ties fall back to element order.
struct Crc32cPriority {
  using digest_type = std::array<std::uint8_t, 4>;
  static digest_type digest(std::string_view bytes);
};

std::uint32_t crc32c(std::string_view bytes, std::uint32_t crc = 0);

template <std::size_t N>
std::uint64_t digest_prefix(const std::array<std::uint8_t, N>& d) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < N && i < 8; ++i) v = (v << 8) | d[i];
  return v;
}

}  // namespace confluent

#endif  // CONFLUENT_PRIORITY_HPP_
