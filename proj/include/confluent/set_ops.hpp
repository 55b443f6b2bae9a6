#ifndef CONFLUENT_SET_OPS_HPP_
#define CONFLUENT_SET_OPS_HPP_

// Set merges over interned treaps.
//
// All merges share one recursion: identical operands and empty operands
// are resolved immediately; otherwise the higher-ranked root is taken as
// the pivot, the other operand is split by it, and both halves are merged
// recursively. A merge is described by MergeRules: what to return at the
// base cases and whether to keep, drop or reject the pivot depending on
// which operands hold it.
//
// Identical operands end the recursion without touching their contents, so
// the cost tracks the size of the difference between the operands rather
// than their sizes.

#include <cassert>

#include "confluent/conflict.hpp"
#include "confluent/counters.hpp"
#include "confluent/element.hpp"
#include "confluent/treap.hpp"

namespace confluent::treap {

enum class Base { none, first, second, empty, fail };
enum class Take { keep, drop, fail };
enum class Violation { none, disjointness, subset };

struct MergeRules {
  Base same;          // operands are the same tree (none: no shortcut)
  Base first_empty;   // only the first operand is empty
  Base second_empty;  // only the second operand is empty
  Take both;          // pivot is in both operands
  Take first_only;
  Take second_only;
  Violation violation;
};

inline constexpr MergeRules kUnion{Base::first, Base::second, Base::first,
                                   Take::keep,  Take::keep,   Take::keep,
                                   Violation::none};
inline constexpr MergeRules kIntersection{Base::first, Base::empty, Base::empty,
                                          Take::keep,  Take::drop,  Take::drop,
                                          Violation::none};
inline constexpr MergeRules kDifference{Base::empty, Base::empty, Base::first,
                                        Take::drop,  Take::keep,  Take::drop,
                                        Violation::none};
inline constexpr MergeRules kSymmetricDifference{
    Base::empty, Base::second, Base::first, Take::drop,
    Take::keep,  Take::keep,   Violation::none};
// Union that rejects a shared element. No identity shortcut: add(t, t)
// fails for non-empty t.
inline constexpr MergeRules kAdd{Base::none, Base::second, Base::first,
                                 Take::fail, Take::keep,   Take::keep,
                                 Violation::disjointness};
// Difference that rejects a subtrahend element missing from the minuend.
inline constexpr MergeRules kSub{Base::empty, Base::fail, Base::first,
                                 Take::drop,  Take::keep, Take::fail,
                                 Violation::subset};

namespace detail {

template <MergeRules R, Element E>
[[noreturn]] void raise(const E& offending) {
  static_assert(R.violation != Violation::none);
  if constexpr (R.violation == Violation::disjointness) {
    throw DisjointnessViolation(ElementTraits<E>::describe(offending));
  } else {
    throw SubsetViolation(ElementTraits<E>::describe(offending));
  }
}

template <MergeRules R, Element E, PriorityBackend H>
Ref<E, H> base_case(Base b, const Ref<E, H>& t1, const Ref<E, H>& t2) {
  switch (b) {
    case Base::first:
      return t1;
    case Base::second:
      return t2;
    case Base::fail:
      if constexpr (R.violation != Violation::none) {
        raise<R>((t1 ? t1 : t2)->element());
      }
      break;
    case Base::none:
    case Base::empty:
      break;
  }
  return {};
}

template <MergeRules R, Element E, PriorityBackend H>
Ref<E, H> combine(Take take, const Node<E, H>& pivot, const Ref<E, H>& left,
                  const Ref<E, H>& right) {
  if (take == Take::keep) {
    return Store<E, H>::instance().intern_like(pivot, left, right);
  }
  return join(left, right);
}

}  // namespace detail

template <MergeRules R, class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> merge(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  internal::bump(internal::g_counters.merge_calls);
  if constexpr (R.same != Base::none) {
    if (t1 == t2) return detail::base_case<R>(R.same, t1, t2);
  }
  if (!t1) return detail::base_case<R>(R.first_empty, t1, t2);
  if (!t2) return detail::base_case<R>(R.second_empty, t1, t2);

  if (Order::equiv(t1->element(), t2->element())) {
    if constexpr (R.both == Take::fail) detail::raise<R>(t1->element());
    auto left = merge<R, Order>(t1.left(), t2.left());
    auto right = merge<R, Order>(t1.right(), t2.right());
    return detail::combine<R>(R.both, *t1, left, right);
  }
  if (rank_less(*t1, *t2)) {
    if constexpr (R.second_only == Take::fail) detail::raise<R>(t2->element());
    // Strict heap order: a higher-ranked element cannot sit below t1's root.
    assert((find<Order>(t1.get(), t2->element()) == nullptr));
    auto [l1, r1] = split<Order>(t1, t2->element());
    auto left = merge<R, Order>(l1, t2.left());
    auto right = merge<R, Order>(r1, t2.right());
    return detail::combine<R>(R.second_only, *t2, left, right);
  }
  if constexpr (R.first_only == Take::fail) detail::raise<R>(t1->element());
  assert((find<Order>(t2.get(), t1->element()) == nullptr));
  auto [l2, r2] = split<Order>(t2, t1->element());
  auto left = merge<R, Order>(t1.left(), l2);
  auto right = merge<R, Order>(t1.right(), r2);
  return detail::combine<R>(R.first_only, *t1, left, right);
}

template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> unite(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  return merge<kUnion, Order>(t1, t2);
}

template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> intersect(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  return merge<kIntersection, Order>(t1, t2);
}

template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> difference(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  return merge<kDifference, Order>(t1, t2);
}

template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> symmetric_difference(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  return merge<kSymmetricDifference, Order>(t1, t2);
}

/// Union of disjoint operands; DisjointnessViolation otherwise.
template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> add(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  return merge<kAdd, Order>(t1, t2);
}

/// t1 minus t2 where t2 is a subset of t1; SubsetViolation otherwise.
template <class Order = ElementOrder, Element E, PriorityBackend H>
Ref<E, H> sub(const Ref<E, H>& t1, const Ref<E, H>& t2) {
  return merge<kSub, Order>(t1, t2);
}

}  // namespace confluent::treap

#endif  // CONFLUENT_SET_OPS_HPP_
