#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace kcausal {

using Event = std::size_t;
using EventPair = std::pair<Event, Event>;

// Subset of the events 0..n-1 of a fixed ground, stored as a packed bitset.
class EventSet {
 public:
  EventSet() = default;
  explicit EventSet(std::size_t universe);
  EventSet(std::size_t universe, std::initializer_list<Event> members);
  EventSet(std::size_t universe, std::span<const Event> members);

  static EventSet all(std::size_t universe);
  // Low `universe` bits of `mask`; universe must be at most 64.
  static EventSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Event e) const;
  void insert(Event e);
  void erase(Event e);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const EventSet& other) const;
  EventSet complement() const;
  std::vector<Event> members() const;

  EventSet& operator|=(const EventSet& other);
  EventSet& operator&=(const EventSet& other);
  friend EventSet operator|(EventSet a, const EventSet& b) { return a |= b; }
  friend EventSet operator&(EventSet a, const EventSet& b) { return a &= b; }
  friend bool operator==(const EventSet&, const EventSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Event>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check(Event e) const;
  void check_same_universe(const EventSet& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Binary relation over the events of a ground of size n, held as an n x n
// bit matrix (row p = successors of p) plus its transpose for past images.
// The matrix is authoritative; `pairs()` is derived for serialization.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  // Throws ValidationError if a coordinate lies outside 0..n-1. Repeated
  // pairs collapse; the file layer is responsible for rejecting them.
  static Relation from_pairs(std::size_t n, std::span<const EventPair> pairs);
  static Relation from_pairs(std::size_t n, std::initializer_list<EventPair> pairs);
  // rows[p] is the successor set of p.
  static Relation from_rows(std::vector<EventSet> rows);

  std::size_t ground_size() const noexcept { return n_; }
  bool contains(Event p, Event q) const;
  const EventSet& successors(Event p) const { return rows_.at(p); }
  const EventSet& predecessors(Event q) const { return cols_.at(q); }

  std::size_t size() const noexcept;
  // Lexicographically sorted.
  std::vector<EventPair> pairs() const;

  bool is_subset_of(const Relation& other) const;
  Relation intersect(const Relation& other) const;
  Relation complement() const;
  Relation transpose() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void rebuild_columns();

  std::size_t n_ = 0;
  std::vector<EventSet> rows_;
  std::vector<EventSet> cols_;
};

// Finite stand-in for a spacetime: events 0..n-1 with a base (chronology-like)
// relation. Bases with self-loops are accepted but flagged.
class CausalGround {
 public:
  explicit CausalGround(Relation base);

  std::size_t size() const noexcept { return base_.ground_size(); }
  const Relation& base() const noexcept { return base_; }
  bool is_irreflexive() const noexcept { return irreflexive_; }

 private:
  Relation base_;
  bool irreflexive_ = true;
};

Relation diagonal(std::size_t n);
Relation full_relation(std::size_t n);

// Smallest reflexive and transitive relation containing the base.
// On a finite discrete space closedness is automatic, so this is K+.
Relation k_plus(const CausalGround& ground);
Relation reflexive_transitive_closure(const Relation& r);

EventSet future_set(const Relation& r, const EventSet& x);
EventSet past_set(const Relation& r, const EventSet& x);
bool is_future_closed(const Relation& r, const EventSet& x);
bool is_past_closed(const Relation& r, const EventSet& x);

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_antisymmetric(const Relation& r);
bool is_preorder(const Relation& r);

// is_future_closed(r, x) == is_past_closed(r, complement of x). Always true;
// exposed as a self-test of the image operations.
bool complement_duality_check(const Relation& r, const EventSet& x);

}  // namespace kcausal
