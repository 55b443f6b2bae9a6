#ifndef CONFLUENT_MELD_HPP_
#define CONFLUENT_MELD_HPP_

// Three-way meld and the refresh/commit protocol.
//
// meld(t0, t1, t2) applies the changes t0 -> t1 on top of t2. It is valid
// when the branches did not both delete, or both add, the same element;
// otherwise it throws MeldConflict and produces nothing. The cost is
// governed by |t0 ^ t1|, so pass the branch with fewer changes as t1.

#include <utility>

#include "confluent/conflict.hpp"
#include "confluent/element.hpp"
#include "confluent/set.hpp"
#include "confluent/set_ops.hpp"

namespace confluent {
namespace treap {

/// Four merges: add(sub(t2, t0 - t1), t1 - t0).
template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> meld(const Ref<E, H>& t0, const Ref<E, H>& t1, const Ref<E, H>& t2,
               MeldPass pass = MeldPass::set) {
  const auto deleted = difference<Order>(t0, t1);
  const auto added = difference<Order>(t1, t0);
  Ref<E, H> kept;
  try {
    kept = sub<Order>(t2, deleted);
  } catch (const SubsetViolation& e) {
    throw MeldConflict(ConflictKind::duplicate_delete, e.key(), pass);
  }
  try {
    return add<Order>(kept, added);
  } catch (const DisjointnessViolation& e) {
    throw MeldConflict(ConflictKind::duplicate_add, e.key(), pass);
  }
}

/// Six merges: computes both branches' deletions and additions, rejects
/// overlaps, then applies branch one to branch two.
template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> meld_reference(const Ref<E, H>& t0, const Ref<E, H>& t1,
                         const Ref<E, H>& t2, MeldPass pass = MeldPass::set) {
  const auto d1 = difference<Order>(t0, t1);
  const auto a1 = difference<Order>(t1, t0);
  const auto d2 = difference<Order>(t0, t2);
  const auto a2 = difference<Order>(t2, t0);
  if (const auto dd = intersect<Order>(d1, d2)) {
    throw MeldConflict(ConflictKind::duplicate_delete,
                       ElementTraits<E>::describe(dd->element()), pass);
  }
  if (const auto aa = intersect<Order>(a1, a2)) {
    throw MeldConflict(ConflictKind::duplicate_add,
                       ElementTraits<E>::describe(aa->element()), pass);
  }
  return unite<Order>(difference<Order>(t2, d1), a1);
}

}  // namespace treap

template <class Key, class H>
Set<Key, H> meld(const Set<Key, H>& t0, const Set<Key, H>& t1,
                 const Set<Key, H>& t2) {
  return Set<Key, H>(treap::meld(t0.ref(), t1.ref(), t2.ref()));
}

template <class Key, class H>
Set<Key, H> meld_reference(const Set<Key, H>& t0, const Set<Key, H>& t1,
                           const Set<Key, H>& t2) {
  return Set<Key, H>(treap::meld_reference(t0.ref(), t1.ref(), t2.ref()));
}

/// A local line of work: the version it last synchronized with, and its
/// current state.
template <class Version>
struct Flow {
  Version ancestor;
  Version current;

  static Flow branch(const Version& shared) { return Flow{shared, shared}; }

  friend bool operator==(const Flow&, const Flow&) = default;
};

template <class Version>
struct CommitResult {
  Version shared;
  Flow<Version> flow;
};

/// Pulls shared changes into the flow. Throws MeldConflict, leaving the
/// caller's flow as it was.
template <class Version>
Flow<Version> refresh(const Flow<Version>& flow, const Version& shared) {
  // Meld before building the aggregate: some compilers skip destroying
  // already-initialized members when a later initializer throws.
  auto current = meld(flow.ancestor, flow.current, shared);
  return Flow<Version>{shared, std::move(current)};
}

/// Pushes the flow's changes into the shared version. Throws MeldConflict.
template <class Version>
CommitResult<Version> commit(const Flow<Version>& flow, const Version& shared) {
  auto merged = meld(flow.ancestor, flow.current, shared);
  return CommitResult<Version>{std::move(merged), Flow<Version>{flow.current, flow.current}};
}

}  // namespace confluent

#endif  // CONFLUENT_MELD_HPP_
