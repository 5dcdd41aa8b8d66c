#include "kcausal/relation.hpp"

#include <string>

#include "kcausal/errors.hpp"

namespace kcausal {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------------------
// EventSet

EventSet::EventSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

EventSet::EventSet(std::size_t universe, std::initializer_list<Event> members)
    : EventSet(universe) {
  for (Event e : members) insert(e);
}

EventSet::EventSet(std::size_t universe, std::span<const Event> members) : EventSet(universe) {
  for (Event e : members) insert(e);
}

EventSet EventSet::all(std::size_t universe) {
  EventSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

EventSet EventSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw ValidationError("from_mask: universe larger than 64");
  EventSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

void EventSet::check(Event e) const {
  if (e >= universe_) {
    throw ValidationError("event " + std::to_string(e) + " outside ground of size " +
                          std::to_string(universe_));
  }
}

void EventSet::check_same_universe(const EventSet& other) const {
  if (other.universe_ != universe_) {
    throw ValidationError("event sets over grounds of different size");
  }
}

void EventSet::trim() {
  const std::size_t tail = universe_ % 64;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

bool EventSet::contains(Event e) const {
  check(e);
  return (words_[e / 64] >> (e % 64)) & 1U;
}

void EventSet::insert(Event e) {
  check(e);
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EventSet::erase(Event e) {
  check(e);
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

std::size_t EventSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool EventSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool EventSet::is_subset_of(const EventSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

EventSet EventSet::complement() const {
  EventSet c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  c.trim();
  return c;
}

std::vector<Event> EventSet::members() const {
  std::vector<Event> out;
  out.reserve(count());
  for_each([&](Event e) { out.push_back(e); });
  return out;
}

EventSet& EventSet::operator|=(const EventSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EventSet& EventSet::operator&=(const EventSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::size_t n) : n_(n), rows_(n, EventSet(n)), cols_(n, EventSet(n)) {}

Relation Relation::from_pairs(std::size_t n, std::span<const EventPair> pairs) {
  Relation r(n);
  for (const auto& [p, q] : pairs) {
    if (p >= n || q >= n) {
      throw ValidationError("pair (" + std::to_string(p) + "," + std::to_string(q) +
                            ") outside ground of size " + std::to_string(n));
    }
    r.rows_[p].insert(q);
    r.cols_[q].insert(p);
  }
  return r;
}

Relation Relation::from_pairs(std::size_t n, std::initializer_list<EventPair> pairs) {
  return from_pairs(n, std::span<const EventPair>(pairs.begin(), pairs.size()));
}

Relation Relation::from_rows(std::vector<EventSet> rows) {
  Relation r;
  r.n_ = rows.size();
  for (const auto& row : rows) {
    if (row.universe() != r.n_) throw ValidationError("relation rows of inconsistent size");
  }
  r.rows_ = std::move(rows);
  r.rebuild_columns();
  return r;
}

void Relation::rebuild_columns() {
  cols_.assign(n_, EventSet(n_));
  for (Event p = 0; p < n_; ++p) {
    rows_[p].for_each([&](Event q) { cols_[q].insert(p); });
  }
}

bool Relation::contains(Event p, Event q) const { return rows_.at(p).contains(q); }

std::size_t Relation::size() const noexcept {
  std::size_t s = 0;
  for (const auto& row : rows_) s += row.count();
  return s;
}

std::vector<EventPair> Relation::pairs() const {
  std::vector<EventPair> out;
  out.reserve(size());
  for (Event p = 0; p < n_; ++p) {
    rows_[p].for_each([&](Event q) { out.emplace_back(p, q); });
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (other.n_ != n_) throw ValidationError("relations over grounds of different size");
  for (Event p = 0; p < n_; ++p) {
    if (!rows_[p].is_subset_of(other.rows_[p])) return false;
  }
  return true;
}

Relation Relation::intersect(const Relation& other) const {
  if (other.n_ != n_) throw ValidationError("relations over grounds of different size");
  std::vector<EventSet> rows = rows_;
  for (Event p = 0; p < n_; ++p) rows[p] &= other.rows_[p];
  return from_rows(std::move(rows));
}

Relation Relation::complement() const {
  std::vector<EventSet> rows;
  rows.reserve(n_);
  for (const auto& row : rows_) rows.push_back(row.complement());
  return from_rows(std::move(rows));
}

Relation Relation::transpose() const { return from_rows(cols_); }

// ---------------------------------------------------------------------------
// CausalGround

CausalGround::CausalGround(Relation base) : base_(std::move(base)) {
  for (Event p = 0; p < base_.ground_size(); ++p) {
    if (base_.contains(p, p)) {
      irreflexive_ = false;
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Operations

Relation diagonal(std::size_t n) {
  std::vector<EventSet> rows;
  rows.reserve(n);
  for (Event p = 0; p < n; ++p) rows.emplace_back(n, std::initializer_list<Event>{p});
  return Relation::from_rows(std::move(rows));
}

Relation full_relation(std::size_t n) {
  return Relation::from_rows(std::vector<EventSet>(n, EventSet::all(n)));
}

Relation reflexive_transitive_closure(const Relation& r) {
  const std::size_t n = r.ground_size();
  std::vector<EventSet> rows;
  rows.reserve(n);
  for (Event p = 0; p < n; ++p) {
    rows.push_back(r.successors(p));
    rows.back().insert(p);
  }
  // Warshall: after step k, rows[i] holds every q reachable through
  // intermediate events < k.
  for (Event k = 0; k < n; ++k) {
    for (Event i = 0; i < n; ++i) {
      if (i != k && rows[i].contains(k)) rows[i] |= rows[k];
    }
  }
  return Relation::from_rows(std::move(rows));
}

Relation k_plus(const CausalGround& ground) { return reflexive_transitive_closure(ground.base()); }

EventSet future_set(const Relation& r, const EventSet& x) {
  if (x.universe() != r.ground_size()) throw ValidationError("event set / relation size mismatch");
  EventSet out(r.ground_size());
  x.for_each([&](Event p) { out |= r.successors(p); });
  return out;
}

EventSet past_set(const Relation& r, const EventSet& x) {
  if (x.universe() != r.ground_size()) throw ValidationError("event set / relation size mismatch");
  EventSet out(r.ground_size());
  x.for_each([&](Event q) { out |= r.predecessors(q); });
  return out;
}

bool is_future_closed(const Relation& r, const EventSet& x) {
  return future_set(r, x).is_subset_of(x);
}

bool is_past_closed(const Relation& r, const EventSet& x) { return past_set(r, x).is_subset_of(x); }

bool is_reflexive(const Relation& r) {
  for (Event p = 0; p < r.ground_size(); ++p) {
    if (!r.contains(p, p)) return false;
  }
  return true;
}

bool is_transitive(const Relation& r) {
  for (Event p = 0; p < r.ground_size(); ++p) {
    if (!future_set(r, r.successors(p)).is_subset_of(r.successors(p))) return false;
  }
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (Event p = 0; p < r.ground_size(); ++p) {
    bool ok = true;
    r.successors(p).for_each([&](Event q) {
      if (q != p && r.contains(q, p)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_preorder(const Relation& r) { return is_reflexive(r) && is_transitive(r); }

bool complement_duality_check(const Relation& r, const EventSet& x) {
  return is_future_closed(r, x) == is_past_closed(r, x.complement());
}

}  // namespace kcausal
