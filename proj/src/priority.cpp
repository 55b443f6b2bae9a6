#include "confluent/priority.hpp"

#include <openssl/sha.h>

#include <array>

namespace confluent {
namespace {

// Reflected Castagnoli polynomial.
constexpr std::uint32_t kCastagnoli = 0x82F63B78u;

constexpr std::array<std::uint32_t, 256> make_crc_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1) ? (c >> 1) ^ kCastagnoli : c >> 1;
    table[i] = c;
  }
  return table;
}

constexpr auto kCrcTable = make_crc_table();

}  // namespace

std::uint32_t crc32c(std::string_view bytes, std::uint32_t crc) {
  crc = ~crc;
  for (unsigned char b : bytes) crc = kCrcTable[(crc ^ b) & 0xff] ^ (crc >> 8);
  return ~crc;
}

Sha512Priority::digest_type Sha512Priority::digest(std::string_view bytes) {
  digest_type out;
  SHA512(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(),
         out.data());
  return out;
}

Crc32cPriority::digest_type Crc32cPriority::digest(std::string_view bytes) {
  const std::uint32_t c = crc32c(bytes);
  return {static_cast<std::uint8_t>(c >> 24), static_cast<std::uint8_t>(c >> 16),
          static_cast<std::uint8_t>(c >> 8), static_cast<std::uint8_t>(c)};
}

}  // namespace confluent
