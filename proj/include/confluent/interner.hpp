#ifndef CONFLUENT_INTERNER_HPP_
#define CONFLUENT_INTERNER_HPP_

// Hash-consed treap nodes.
//
// Every node is created through a Store, which keeps exactly one live node
// per (element, left identity, right identity). Since children are unique
// by induction, two roots are the same pointer iff they hold the same set.
//
// Nodes are reference counted. When the last reference goes away the node
// is unlinked from the store and destroyed immediately, releasing its
// children in turn. The store lookup and insert happen under one shard
// lock, so concurrent interning of equal nodes yields one node.

#include <array>
#include <atomic>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "confluent/counters.hpp"
#include "confluent/element.hpp"
#include "confluent/priority.hpp"

namespace confluent {

struct StoreStats {
  std::uint64_t live_nodes = 0;
  std::uint64_t total_interned = 0;  // monotone
};

template <Element E, PriorityBackend H>
class Store;
template <Element E, PriorityBackend H>
class NodeRef;

template <Element E, PriorityBackend H>
class Node {
 public:
  using element_type = E;
  using digest_type = typename H::digest_type;

  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  const E& element() const { return element_; }
  const Node* left() const { return left_; }
  const Node* right() const { return right_; }
  std::size_t size() const { return size_; }
  const digest_type& digest() const { return digest_; }

  /// Strict total order on priority: digest first, element order on ties.
  friend bool rank_less(const Node& a, const Node& b) {
    if (auto c = a.digest_ <=> b.digest_; c != 0) return c < 0;
    return ElementTraits<E>::less(a.element_, b.element_);
  }

 private:
  friend class Store<E, H>;
  friend class NodeRef<E, H>;

  Node(E element, const digest_type& digest, const Node* left,
       const Node* right, std::size_t table_hash)
      : element_(std::move(element)),
        digest_(digest),
        left_(left),
        right_(right),
        size_(1 + (left ? left->size_ : 0) + (right ? right->size_ : 0)),
        table_hash_(table_hash) {}

  mutable std::atomic<std::size_t> refs_{1};
  E element_;
  digest_type digest_;
  const Node* left_;
  const Node* right_;
  std::size_t size_;
  std::size_t table_hash_;
};

/// Owning handle to an interned node; null is the empty tree.
template <Element E, PriorityBackend H>
class NodeRef {
 public:
  using node_type = Node<E, H>;

  NodeRef() = default;
  NodeRef(const NodeRef& other) : ptr_(other.ptr_) { retain(ptr_); }
  NodeRef(NodeRef&& other) noexcept : ptr_(std::exchange(other.ptr_, nullptr)) {}
  NodeRef& operator=(NodeRef other) noexcept {
    std::swap(ptr_, other.ptr_);
    return *this;
  }
  ~NodeRef();

  /// Adds a reference to a node owned elsewhere (e.g. a child).
  static NodeRef share(const node_type* node) {
    retain(node);
    return NodeRef(node);
  }

  const node_type* get() const { return ptr_; }
  const node_type* operator->() const { return ptr_; }
  const node_type& operator*() const { return *ptr_; }
  explicit operator bool() const { return ptr_ != nullptr; }

  NodeRef left() const { return share(ptr_->left()); }
  NodeRef right() const { return share(ptr_->right()); }

  friend bool operator==(const NodeRef& a, const NodeRef& b) {
    return a.ptr_ == b.ptr_;
  }

 private:
  friend class Store<E, H>;
  explicit NodeRef(const node_type* adopted) : ptr_(adopted) {}

  static void retain(const node_type* node) {
    if (node) node->refs_.fetch_add(1, std::memory_order_relaxed);
  }

  const node_type* ptr_ = nullptr;
};

template <Element E, PriorityBackend H>
class Store {
 public:
  using node_type = Node<E, H>;
  using ref_type = NodeRef<E, H>;
  using digest_type = typename H::digest_type;

  /// One store per (element, backend). Intentionally leaked so versions held
  /// in static storage can be destroyed in any order at exit.
  static Store& instance() {
    static Store* store = new Store;
    return *store;
  }

  static digest_type priority_digest(const E& element) {
    return H::digest(priority_encoding(element));
  }

  /// The node factory. Returns the unique node (element, left, right).
  ref_type intern(E element, const digest_type& digest, const ref_type& left,
                  const ref_type& right) {
    internal::bump(internal::g_counters.nodes_constructed);
    const std::size_t hash = table_hash(element, digest, left.get(), right.get());
    Shard& shard = shard_for(hash);
    std::lock_guard<std::mutex> lock(shard.mutex);
    auto it = shard.nodes.find(Probe{&element, left.get(), right.get(), hash});
    if (it != shard.nodes.end()) {
      if (try_acquire(*it)) return ref_type(*it);
      // The node is being released by another thread; replace its slot.
      shard.nodes.erase(it);
    }
    auto* node = new node_type(std::move(element), digest, left.get(),
                               right.get(), hash);
    ref_type::retain(node->left_);
    ref_type::retain(node->right_);
    shard.nodes.insert(node);
    internal::bump(internal::g_counters.nodes_allocated);
    live_.fetch_add(1, std::memory_order_relaxed);
    total_.fetch_add(1, std::memory_order_relaxed);
    return ref_type(node);
  }

  ref_type intern(E element, const ref_type& left, const ref_type& right) {
    const digest_type digest = priority_digest(element);
    return intern(std::move(element), digest, left, right);
  }

  /// Reuses donor's element and digest with new children.
  ref_type intern_like(const node_type& donor, const ref_type& left,
                       const ref_type& right) {
    return intern(donor.element_, donor.digest_, left, right);
  }

  StoreStats stats() const {
    return StoreStats{live_.load(std::memory_order_acquire),
                      total_.load(std::memory_order_acquire)};
  }

  void release(const node_type* node) noexcept {
    std::vector<const node_type*> pending;
    while (node) {
      if (node->refs_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        unlink(node);
        if (node->left_) pending.push_back(node->left_);
        if (node->right_) pending.push_back(node->right_);
        delete node;
        live_.fetch_sub(1, std::memory_order_release);
      }
      if (pending.empty()) break;
      node = pending.back();
      pending.pop_back();
    }
  }

 private:
  static constexpr std::size_t kShards = 64;

  struct Probe {
    const E* element;
    const node_type* left;
    const node_type* right;
    std::size_t hash;
  };

  struct ProbeHash {
    using is_transparent = void;
    std::size_t operator()(const node_type* n) const { return n->table_hash_; }
    std::size_t operator()(const Probe& p) const { return p.hash; }
  };

  struct ProbeEq {
    using is_transparent = void;
    static bool same(const node_type* n, const E& e, const node_type* l,
                     const node_type* r) {
      return n->left_ == l && n->right_ == r && n->element_ == e;
    }
    bool operator()(const node_type* a, const node_type* b) const {
      return a == b || same(a, b->element_, b->left_, b->right_);
    }
    bool operator()(const node_type* n, const Probe& p) const {
      return same(n, *p.element, p.left, p.right);
    }
    bool operator()(const Probe& p, const node_type* n) const {
      return same(n, *p.element, p.left, p.right);
    }
  };

  struct Shard {
    std::mutex mutex;
    std::unordered_set<const node_type*, ProbeHash, ProbeEq> nodes;
  };

  Store() : shards_(std::make_unique<Shard[]>(kShards)) {}

  static std::size_t table_hash(const E& element, const digest_type& digest,
                                const node_type* left, const node_type* right) {
    std::size_t h = hash_mix(digest_prefix(digest) ^ ElementTraits<E>::hash(element));
    h = hash_mix(h ^ reinterpret_cast<std::uintptr_t>(left));
    return hash_mix(h ^ reinterpret_cast<std::uintptr_t>(right));
  }

  Shard& shard_for(std::size_t hash) { return shards_[(hash >> 58) % kShards]; }

  static bool try_acquire(const node_type* node) {
    std::size_t n = node->refs_.load(std::memory_order_relaxed);
    while (n != 0) {
      if (node->refs_.compare_exchange_weak(n, n + 1, std::memory_order_acq_rel,
                                            std::memory_order_relaxed)) {
        return true;
      }
    }
    return false;
  }

  void unlink(const node_type* node) {
    Shard& shard = shard_for(node->table_hash_);
    std::lock_guard<std::mutex> lock(shard.mutex);
    auto it = shard.nodes.find(
        Probe{&node->element_, node->left_, node->right_, node->table_hash_});
    // A concurrent intern may already have replaced this slot.
    if (it != shard.nodes.end() && *it == node) shard.nodes.erase(it);
  }

  std::unique_ptr<Shard[]> shards_;
  std::atomic<std::uint64_t> live_{0};
  std::atomic<std::uint64_t> total_{0};
};

template <Element E, PriorityBackend H>
NodeRef<E, H>::~NodeRef() {
  if (ptr_) Store<E, H>::instance().release(ptr_);
}

template <Element E, PriorityBackend H>
StoreStats store_stats() {
  return Store<E, H>::instance().stats();
}

}  // namespace confluent

#endif  // CONFLUENT_INTERNER_HPP_
