#ifndef CONFLUENT_TREAP_HPP_
#define CONFLUENT_TREAP_HPP_

// Structural primitives over interned treaps: split, join, search,
// in-order iteration, height, and linear-time construction from sorted
// input.
//
// Trees are BST-ordered by ElementTraits<E>::less and strictly heap-ordered
// by rank_less. Algorithms recurse to tree height, which is expected
// O(log n) because priorities are hash digests; see README for the depth
// assumption.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <iterator>
#include <utility>
#include <vector>

#include "confluent/counters.hpp"
#include "confluent/element.hpp"
#include "confluent/interner.hpp"

namespace confluent::treap {

template <Element E, PriorityBackend H>
using Ref = NodeRef<E, H>;

template <Element E, PriorityBackend H>
Store<E, H>& store_of(const Ref<E, H>&) {
  return Store<E, H>::instance();
}

template <Element E, PriorityBackend H>
std::size_t cardinality(const Ref<E, H>& t) {
  return t ? t->size() : 0;
}

template <Element E, PriorityBackend H>
std::size_t height(const Node<E, H>* t) {
  if (!t) return 0;
  return 1 + std::max(height(t->left()), height(t->right()));
}

template <Element E, PriorityBackend H>
Ref<E, H> singleton(E element) {
  return Store<E, H>::instance().intern(std::move(element), {}, {});
}

/// Returns (L, R) with L = {x <= key}, R = {x > key} under Order.
template <class Order, Element E, PriorityBackend H>
std::pair<Ref<E, H>, Ref<E, H>> split(const Ref<E, H>& t, const E& key) {
  internal::bump(internal::g_counters.split_calls);
  if (!t) return {};
  auto& store = store_of(t);
  if (Order::less(key, t->element())) {
    auto [l1, l2] = split<Order>(t.left(), key);
    return {std::move(l1), store.intern_like(*t, l2, t.right())};
  }
  auto [r1, r2] = split<Order>(t.right(), key);
  return {store.intern_like(*t, t.left(), r1), std::move(r2)};
}

/// Concatenates t1 and t2. Every element of t1 must precede every element
/// of t2.
template <Element E, PriorityBackend H>
Ref<E, H> join(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  internal::bump(internal::g_counters.join_calls);
  if (!t1) return t2;
  if (!t2) return t1;
  auto& store = store_of(t1);
  if (rank_less(*t1, *t2)) {
    return store.intern_like(*t2, join(t1, t2.left()), t2.right());
  }
  return store.intern_like(*t1, t1.left(), join(t1.right(), t2));
}

/// The node in t equivalent to key under Order, or null.
template <class Order, Element E, PriorityBackend H>
const Node<E, H>* find(const Node<E, H>* t, const E& key) {
  while (t) {
    if (Order::less(key, t->element())) {
      t = t->left();
    } else if (Order::less(t->element(), key)) {
      t = t->right();
    } else {
      return t;
    }
  }
  return nullptr;
}

/// Lazy in-order traversal. Borrows the tree: the owning version must
/// outlive the iterator.
template <Element E, PriorityBackend H>
class InorderIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = E;
  using difference_type = std::ptrdiff_t;
  using pointer = const E*;
  using reference = const E&;

  InorderIterator() = default;
  explicit InorderIterator(const Node<E, H>* root) { descend(root); }

  reference operator*() const { return path_.back()->element(); }
  pointer operator->() const { return &path_.back()->element(); }

  InorderIterator& operator++() {
    const Node<E, H>* n = path_.back();
    path_.pop_back();
    descend(n->right());
    return *this;
  }
  InorderIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }

  friend bool operator==(const InorderIterator& a, const InorderIterator& b) {
    return a.path_ == b.path_;
  }

 private:
  void descend(const Node<E, H>* n) {
    for (; n; n = n->left()) path_.push_back(n);
  }

  std::vector<const Node<E, H>*> path_;
};

/// Builds the unique treap holding `sorted`, which must be strictly
/// increasing. O(n) factory calls.
template <Element E, PriorityBackend H>
Ref<E, H> build_sorted(std::vector<E> sorted) {
  using Digest = typename H::digest_type;
  auto& store = Store<E, H>::instance();
  const std::size_t n = sorted.size();
  if (n == 0) return {};

  std::vector<Digest> digests;
  digests.reserve(n);
  for (const E& e : sorted) digests.push_back(Store<E, H>::priority_digest(e));
  auto higher = [&](std::size_t a, std::size_t b) {
    if (auto c = digests[a] <=> digests[b]; c != 0) return c > 0;
    return ElementTraits<E>::less(sorted[b], sorted[a]);
  };

  // Cartesian tree by rank, built left to right with a rightmost-spine stack.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> left(n, kNone), right(n, kNone), spine;
  for (std::size_t i = 0; i < n; ++i) {
    assert(i == 0 || ElementTraits<E>::less(sorted[i - 1], sorted[i]));
    std::size_t last = kNone;
    while (!spine.empty() && higher(i, spine.back())) {
      last = spine.back();
      spine.pop_back();
    }
    left[i] = last;
    if (!spine.empty()) right[spine.back()] = i;
    spine.push_back(i);
  }

  // Intern bottom-up in post-order.
  std::vector<Ref<E, H>> built(n);
  std::vector<std::pair<std::size_t, bool>> stack{{spine.front(), false}};
  while (!stack.empty()) {
    auto [i, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.push_back({i, true});
      if (right[i] != kNone) stack.push_back({right[i], false});
      if (left[i] != kNone) stack.push_back({left[i], false});
      continue;
    }
    Ref<E, H> l = left[i] != kNone ? std::move(built[left[i]]) : Ref<E, H>{};
    Ref<E, H> r = right[i] != kNone ? std::move(built[right[i]]) : Ref<E, H>{};
    built[i] = store.intern(std::move(sorted[i]), digests[i], l, r);
  }
  return std::move(built[spine.front()]);
}

/// Full-walk check of BST order, strict heap order and memoized sizes.
template <Element E, PriorityBackend H>
bool is_valid_treap(const Node<E, H>* t) {
  struct Frame {
    const Node<E, H>* node;
    const E* low;
    const E* high;
  };
  std::vector<Frame> stack;
  if (t) stack.push_back({t, nullptr, nullptr});
  while (!stack.empty()) {
    auto [n, low, high] = stack.back();
    stack.pop_back();
    const E& e = n->element();
    if (low && !ElementTraits<E>::less(*low, e)) return false;
    if (high && !ElementTraits<E>::less(e, *high)) return false;
    std::size_t size = 1;
    for (const Node<E, H>* child : {n->left(), n->right()}) {
      if (!child) continue;
      if (!rank_less(*child, *n)) return false;
      size += child->size();
    }
    if (size != n->size()) return false;
    if (n->left()) stack.push_back({n->left(), low, &e});
    if (n->right()) stack.push_back({n->right(), &e, high});
  }
  return true;
}

}  // namespace confluent::treap

#endif  // CONFLUENT_TREAP_HPP_
