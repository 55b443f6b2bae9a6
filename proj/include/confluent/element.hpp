#ifndef CONFLUENT_ELEMENT_HPP_
#define CONFLUENT_ELEMENT_HPP_

// Elements stored in treap nodes, and the comparison modes merges run under.
//
// A set stores keys. A map stores MapEntry values, ordered key-then-value
// inside the tree but prioritised by the key alone. Merges take an Order:
// ElementOrder compares whole elements, KeyOrder compares map entries by key
// only. KeyOrder must be a coarsening of ElementOrder (a <_key b implies
// a <_element b) so that both modes can split the same trees.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "confluent/counters.hpp"
#include "confluent/encoding.hpp"

namespace confluent {

template <CanonicalKey K, CanonicalKey V>
struct MapEntry {
  K key;
  V value;

  friend auto operator<=>(const MapEntry&, const MapEntry&) = default;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

inline std::size_t hash_mix(std::size_t h) {
  // splitmix64 finalizer
  std::uint64_t z = static_cast<std::uint64_t>(h) + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

template <class E>
struct ElementTraits {
  static void encode_priority(const E& e, std::string& out) {
    KeyTraits<E>::encode(e, out);
  }
  static bool less(const E& a, const E& b) { return a < b; }
  static std::size_t hash(const E& e) { return std::hash<E>{}(e); }
  static std::string describe(const E& e) { return KeyTraits<E>::describe(e); }
};

template <class K, class V>
struct ElementTraits<MapEntry<K, V>> {
  using Entry = MapEntry<K, V>;
  // The priority of an entry is the priority of its key.
  static void encode_priority(const Entry& e, std::string& out) {
    KeyTraits<K>::encode(e.key, out);
  }
  static bool less(const Entry& a, const Entry& b) { return a < b; }
  static std::size_t hash(const Entry& e) {
    return hash_mix(std::hash<K>{}(e.key)) ^ std::hash<V>{}(e.value);
  }
  static std::string describe(const Entry& e) {
    return KeyTraits<K>::describe(e.key);
  }
};

template <class E>
concept Element = std::equality_comparable<E> && std::copy_constructible<E> &&
                  requires(const E& e, std::string& out) {
                    ElementTraits<E>::encode_priority(e, out);
                    { ElementTraits<E>::less(e, e) } -> std::same_as<bool>;
                    { ElementTraits<E>::hash(e) } -> std::convertible_to<std::size_t>;
                  };

template <Element E>
std::string priority_encoding(const E& e) {
  std::string out;
  ElementTraits<E>::encode_priority(e, out);
  return out;
}

/// Whole-element comparison. The only mode for sets; "pair mode" for maps.
struct ElementOrder {
  template <class E>
  static bool less(const E& a, const E& b) {
    internal::bump(internal::g_counters.comparisons);
    return ElementTraits<E>::less(a, b);
  }
  template <class E>
  static bool equiv(const E& a, const E& b) {
    internal::bump(internal::g_counters.comparisons);
    return a == b;
  }
};

/// Map entries compared by key alone.
struct KeyOrder {
  template <class K, class V>
  static bool less(const MapEntry<K, V>& a, const MapEntry<K, V>& b) {
    internal::bump(internal::g_counters.comparisons);
    return a.key < b.key;
  }
  template <class K, class V>
  static bool equiv(const MapEntry<K, V>& a, const MapEntry<K, V>& b) {
    internal::bump(internal::g_counters.comparisons);
    return a.key == b.key;
  }
};

}  // namespace confluent

#endif  // CONFLUENT_ELEMENT_HPP_
