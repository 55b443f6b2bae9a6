#ifndef CONFLUENT_ENCODING_HPP_
#define CONFLUENT_ENCODING_HPP_

// Canonical byte encodings for keys and values.
//
// Priorities are digests of these encodings, so an encoding must be
// injective: two keys encode to the same bytes only if they are equal.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>

namespace confluent {

namespace internal {

template <std::unsigned_integral U>
void append_big_endian(std::string& out, U value) {
  for (int shift = int{sizeof(U) * 8} - 8; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((value >> shift) & 0xff));
  }
}

}  // namespace internal

/// Customization point. A specialization provides
///   static void encode(const T&, std::string& out);   // appends bytes
///   static std::string describe(const T&);            // diagnostics
template <class T, class Enable = void>
struct KeyTraits;

/// Text: 64-bit big-endian byte length followed by the UTF-8 bytes.
template <>
struct KeyTraits<std::string> {
  static void encode(const std::string& key, std::string& out) {
    internal::append_big_endian(out, static_cast<std::uint64_t>(key.size()));
    out.append(key);
  }
  static std::string describe(const std::string& key) { return key; }
};

/// Integers: fixed-width big-endian two's complement.
template <std::integral T>
struct KeyTraits<T> {
  static void encode(T key, std::string& out) {
    internal::append_big_endian(out, static_cast<std::make_unsigned_t<T>>(key));
  }
  static std::string describe(T key) { return std::to_string(key); }
};

template <class T>
concept CanonicalKey = std::totally_ordered<T> && std::copy_constructible<T> &&
                       requires(const T& key, std::string& out) {
                         KeyTraits<T>::encode(key, out);
                         { KeyTraits<T>::describe(key) } -> std::convertible_to<std::string>;
                         { std::hash<T>{}(key) } -> std::convertible_to<std::size_t>;
                       };

template <CanonicalKey T>
std::string canonical_encoding(const T& key) {
  std::string out;
  KeyTraits<T>::encode(key, out);
  return out;
}

}  // namespace confluent

#endif  // CONFLUENT_ENCODING_HPP_
