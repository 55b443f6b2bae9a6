#ifndef CONFLUENT_SET_HPP_
#define CONFLUENT_SET_HPP_

// Set<Key>: a persistent ordered set with a unique representation.
//
// A Set is a value holding one reference to an interned root (or nothing,
// for the empty set). Copies are O(1). Every operation returns a new Set
// and leaves its inputs untouched. Two sets with the same keys share the
// same root, so equality is a pointer comparison.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <ranges>
#include <utility>
#include <vector>

#include "confluent/encoding.hpp"
#include "confluent/interner.hpp"
#include "confluent/priority.hpp"
#include "confluent/set_ops.hpp"
#include "confluent/treap.hpp"

namespace confluent {

template <CanonicalKey Key, PriorityBackend H = Sha512Priority>
class Set {
 public:
  using key_type = Key;
  using value_type = Key;
  using backend_type = H;
  using node_type = Node<Key, H>;
  using ref_type = NodeRef<Key, H>;
  using const_iterator = treap::InorderIterator<Key, H>;
  using iterator = const_iterator;
  using size_type = std::size_t;

  Set() = default;
  explicit Set(ref_type root) : root_(std::move(root)) {}
  Set(std::initializer_list<Key> keys) : Set(from_range(keys)) {}

  static Set singleton(Key key) {
    return Set(treap::singleton<Key, H>(std::move(key)));
  }

  /// Builds a set from any range of keys (duplicates allowed).
  template <std::ranges::input_range R>
  static Set from_range(R&& keys) {
    std::vector<Key> sorted(std::ranges::begin(keys), std::ranges::end(keys));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return Set(treap::build_sorted<Key, H>(std::move(sorted)));
  }

  bool empty() const { return !root_; }
  size_type size() const { return treap::cardinality(root_); }
  size_type height() const { return treap::height(root_.get()); }

  bool contains(const Key& key) const {
    return treap::find<ElementOrder>(root_.get(), key) != nullptr;
  }

  const_iterator begin() const { return const_iterator(root_.get()); }
  const_iterator end() const { return const_iterator(); }

  /// (keys <= key, keys > key)
  std::pair<Set, Set> split(const Key& key) const {
    auto [l, r] = treap::split<ElementOrder>(root_, key);
    return {Set(std::move(l)), Set(std::move(r))};
  }

  /// Root identity; null for the empty set.
  const node_type* root() const { return root_.get(); }
  const ref_type& ref() const { return root_; }

  std::vector<Key> to_vector() const { return std::vector<Key>(begin(), end()); }

  /// Same keys iff same root. O(1).
  friend bool operator==(const Set& a, const Set& b) { return a.root_ == b.root_; }

  friend Set operator|(const Set& a, const Set& b) {
    return Set(treap::unite(a.root_, b.root_));
  }
  friend Set operator&(const Set& a, const Set& b) {
    return Set(treap::intersect(a.root_, b.root_));
  }
  friend Set operator-(const Set& a, const Set& b) {
    return Set(treap::difference(a.root_, b.root_));
  }
  friend Set operator^(const Set& a, const Set& b) {
    return Set(treap::symmetric_difference(a.root_, b.root_));
  }

 private:
  ref_type root_;
};

template <class Key, class H>
bool equal(const Set<Key, H>& a, const Set<Key, H>& b) {
  return a == b;
}

template <class Key, class H>
std::size_t cardinality(const Set<Key, H>& t) {
  return t.size();
}

/// Every key of a must be less than every key of b.
template <class Key, class H>
Set<Key, H> join(const Set<Key, H>& a, const Set<Key, H>& b) {
  return Set<Key, H>(treap::join(a.ref(), b.ref()));
}

template <class Key, class H>
Set<Key, H> unite(const Set<Key, H>& a, const Set<Key, H>& b) {
  return a | b;
}

template <class Key, class H>
Set<Key, H> intersect(const Set<Key, H>& a, const Set<Key, H>& b) {
  return a & b;
}

template <class Key, class H>
Set<Key, H> difference(const Set<Key, H>& a, const Set<Key, H>& b) {
  return a - b;
}

template <class Key, class H>
Set<Key, H> symmetric_difference(const Set<Key, H>& a, const Set<Key, H>& b) {
  return a ^ b;
}

/// Union of disjoint sets. Throws DisjointnessViolation on a shared key.
template <class Key, class H>
Set<Key, H> add(const Set<Key, H>& a, const Set<Key, H>& b) {
  return Set<Key, H>(treap::add(a.ref(), b.ref()));
}

/// a minus b, b a subset of a. Throws SubsetViolation on a key of b
/// missing from a.
template <class Key, class H>
Set<Key, H> sub(const Set<Key, H>& a, const Set<Key, H>& b) {
  return Set<Key, H>(treap::sub(a.ref(), b.ref()));
}

}  // namespace confluent

#endif  // CONFLUENT_SET_HPP_
