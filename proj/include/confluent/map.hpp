#ifndef CONFLUENT_MAP_HPP_
#define CONFLUENT_MAP_HPP_

// Map<K, V>: a persistent ordered map stored as a treap of (key, value)
// entries.
//
// Entries are ordered key-then-value and prioritised by the key's digest,
// so each binding set has one representation. Updates run merges in key
// mode (entries equal when keys are equal) which keeps keys unique. Melds
// run twice: key mode catches two branches binding the same new key, pair
// mode catches two branches touching the same existing binding.

#include <cstddef>
#include <optional>
#include <utility>

#include "confluent/conflict.hpp"
#include "confluent/element.hpp"
#include "confluent/interner.hpp"
#include "confluent/meld.hpp"
#include "confluent/priority.hpp"
#include "confluent/set_ops.hpp"
#include "confluent/treap.hpp"

namespace confluent {

template <CanonicalKey K, CanonicalKey V, PriorityBackend H = Sha512Priority>
class Map {
 public:
  using key_type = K;
  using mapped_type = V;
  using entry_type = MapEntry<K, V>;
  using node_type = Node<entry_type, H>;
  using ref_type = NodeRef<entry_type, H>;
  using const_iterator = treap::InorderIterator<entry_type, H>;
  using iterator = const_iterator;

  Map() = default;
  explicit Map(ref_type root) : root_(std::move(root)) {}

  bool empty() const { return !root_; }
  std::size_t size() const { return treap::cardinality(root_); }

  std::optional<V> get(const K& key) const {
    if (const node_type* n = find(key)) return n->element().value;
    return std::nullopt;
  }

  bool contains(const K& key) const { return find(key) != nullptr; }

  /// Binds key to value, replacing any previous binding.
  Map insert(K key, V value) const {
    auto entry = treap::singleton<entry_type, H>(
        entry_type{std::move(key), std::move(value)});
    // Key-mode union keeps the first operand's entry on equal keys.
    return Map(treap::unite<KeyOrder>(entry, root_));
  }

  /// Unbinds key. Returns the identical map when key is absent.
  Map remove(const K& key) const {
    const node_type* n = find(key);
    if (!n) return *this;
    return Map(treap::difference(root_, treap::singleton<entry_type, H>(n->element())));
  }

  const_iterator begin() const { return const_iterator(root_.get()); }
  const_iterator end() const { return const_iterator(); }

  const node_type* root() const { return root_.get(); }
  const ref_type& ref() const { return root_; }

  friend bool operator==(const Map& a, const Map& b) { return a.root_ == b.root_; }

 private:
  const node_type* find(const K& key) const {
    const node_type* n = root_.get();
    while (n) {
      const K& k = n->element().key;
      if (key < k) {
        n = n->left();
      } else if (k < key) {
        n = n->right();
      } else {
        return n;
      }
    }
    return nullptr;
  }

  ref_type root_;
};

/// Three-way map meld. Valid iff the key sets meld and the binding sets
/// meld; throws MeldConflict tagged with the failing pass otherwise.
template <class K, class V, class H>
Map<K, V, H> map_meld(const Map<K, V, H>& m0, const Map<K, V, H>& m1,
                      const Map<K, V, H>& m2) {
  treap::meld<KeyOrder>(m0.ref(), m1.ref(), m2.ref(), MeldPass::key);
  return Map<K, V, H>(
      treap::meld<ElementOrder>(m0.ref(), m1.ref(), m2.ref(), MeldPass::value));
}

template <class K, class V, class H>
Map<K, V, H> meld(const Map<K, V, H>& m0, const Map<K, V, H>& m1,
                  const Map<K, V, H>& m2) {
  return map_meld(m0, m1, m2);
}

/// Treap invariants plus strictly increasing keys.
template <class K, class V, class H>
bool is_valid_map(const Map<K, V, H>& m) {
  if (!treap::is_valid_treap(m.root())) return false;
  const K* prev = nullptr;
  for (const auto& entry : m) {
    if (prev && !(*prev < entry.key)) return false;
    prev = &entry.key;
  }
  return true;
}

}  // namespace confluent

#endif  // CONFLUENT_MAP_HPP_
