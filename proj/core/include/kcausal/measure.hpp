#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kcausal/rational.hpp"
#include "kcausal/relation.hpp"
#include "kcausal/time_function.hpp"

namespace kcausal {

// Probability measure on the events 0..n-1 with exact rational weights.
class Measure {
 public:
  // Throws ValidationError unless every weight is >= 0 and they sum to 1.
  static Measure from_weights(std::vector<Rational> weights);
  static Measure dirac(std::size_t n, Event p);
  static Measure uniform(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](Event p) const { return weights_.at(p); }
  std::span<const Rational> weights() const noexcept { return weights_; }
  EventSet support() const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  explicit Measure(std::vector<Rational> weights) : weights_(std::move(weights)) {}

  std::vector<Rational> weights_;
};

struct CouplingEntry {
  Event from;
  Event to;
  Rational mass;
};

// Joint probability on event pairs, dense n x n, row-major.
class Coupling {
 public:
  // Throws ValidationError on a negative entry, a wrong length, or a total
  // different from 1.
  static Coupling from_joint(std::size_t n, std::vector<Rational> joint);
  static Coupling from_entries(std::size_t n, std::span<const CouplingEntry> entries);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(Event p, Event q) const { return joint_.at(p * n_ + q); }
  // Nonzero cells in row-major order.
  std::vector<CouplingEntry> entries() const;
  // Row sums equal mu and column sums equal nu.
  bool has_marginals(const Measure& mu, const Measure& nu) const;

  friend bool operator==(const Coupling&, const Coupling&) = default;

 private:
  Coupling(std::size_t n, std::vector<Rational> joint) : n_(n), joint_(std::move(joint)) {}

  std::size_t n_ = 0;
  std::vector<Rational> joint_;
};

// (row marginal, column marginal).
std::pair<Measure, Measure> marginals(const Coupling& w);

// The coupling concentrated on the diagonal with weights m; both marginals are m.
Coupling diagonal_pushforward(const Measure& m);

// Total joint mass carried by the pairs of r.
Rational mass_on(const Coupling& w, const Relation& r);

Rational measure_of(const Measure& m, const EventSet& x);

// Sum over events of f(p) * m(p).
Rational integrate(const Measure& m, std::span<const Rational> f);

struct ScoreAtom {
  std::vector<Rational> scores;
  Rational mass;

  friend bool operator==(const ScoreAtom&, const ScoreAtom&) = default;
};

// Distribution of the score vector (t_1(p), ..., t_k(p)) under m. Events with
// identical score vectors are merged; zero-mass atoms are dropped. Atoms are
// sorted lexicographically by score vector.
std::vector<ScoreAtom> pushforward_scores(const Measure& m, std::span<const TimeFunction> fns);

}  // namespace kcausal
