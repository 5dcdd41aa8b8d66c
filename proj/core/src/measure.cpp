#include "kcausal/measure.hpp"

#include <map>
#include <string>

#include "kcausal/errors.hpp"

namespace kcausal {

namespace {

void require_probability(std::span<const Rational> weights, const char* what) {
  Rational total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw ValidationError(std::string(what) + " has a negative entry at index " +
                            std::to_string(i));
    }
    total += weights[i];
  }
  if (total != 1) {
    throw ValidationError(std::string(what) + " sums to " + format_rational(total) +
                          " instead of 1");
  }
}

}  // namespace

Measure Measure::from_weights(std::vector<Rational> weights) {
  if (weights.empty()) throw ValidationError("measure on an empty ground");
  for (auto& w : weights) w.canonicalize();
  require_probability(weights, "measure");
  return Measure(std::move(weights));
}

Measure Measure::dirac(std::size_t n, Event p) {
  if (p >= n) throw ValidationError("dirac mass outside the ground");
  std::vector<Rational> w(n, Rational(0));
  w[p] = 1;
  return Measure(std::move(w));
}

Measure Measure::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("measure on an empty ground");
  return Measure(std::vector<Rational>(n, Rational(1, n)));
}

EventSet Measure::support() const {
  EventSet s(size());
  for (Event p = 0; p < size(); ++p) {
    if (weights_[p] != 0) s.insert(p);
  }
  return s;
}

Coupling Coupling::from_joint(std::size_t n, std::vector<Rational> joint) {
  if (joint.size() != n * n) {
    throw ValidationError("coupling needs " + std::to_string(n * n) + " entries, got " +
                          std::to_string(joint.size()));
  }
  for (auto& w : joint) w.canonicalize();
  require_probability(joint, "coupling");
  return Coupling(n, std::move(joint));
}

Coupling Coupling::from_entries(std::size_t n, std::span<const CouplingEntry> entries) {
  std::vector<Rational> joint(n * n, Rational(0));
  for (const auto& e : entries) {
    if (e.from >= n || e.to >= n) throw ValidationError("coupling entry outside the ground");
    joint[e.from * n + e.to] += e.mass;
  }
  return from_joint(n, std::move(joint));
}

std::vector<CouplingEntry> Coupling::entries() const {
  std::vector<CouplingEntry> out;
  for (Event p = 0; p < n_; ++p) {
    for (Event q = 0; q < n_; ++q) {
      const auto& m = joint_[p * n_ + q];
      if (m != 0) out.push_back({p, q, m});
    }
  }
  return out;
}

bool Coupling::has_marginals(const Measure& mu, const Measure& nu) const {
  if (mu.size() != n_ || nu.size() != n_) return false;
  const auto [rows, cols] = marginals(*this);
  return rows == mu && cols == nu;
}

std::pair<Measure, Measure> marginals(const Coupling& w) {
  const std::size_t n = w.size();
  std::vector<Rational> rows(n, Rational(0));
  std::vector<Rational> cols(n, Rational(0));
  for (const auto& e : w.entries()) {
    rows[e.from] += e.mass;
    cols[e.to] += e.mass;
  }
  return {Measure::from_weights(std::move(rows)), Measure::from_weights(std::move(cols))};
}

Coupling diagonal_pushforward(const Measure& m) {
  const std::size_t n = m.size();
  std::vector<Rational> joint(n * n, Rational(0));
  for (Event p = 0; p < n; ++p) joint[p * n + p] = m[p];
  return Coupling::from_joint(n, std::move(joint));
}

Rational mass_on(const Coupling& w, const Relation& r) {
  if (r.ground_size() != w.size()) throw ValidationError("coupling / relation size mismatch");
  Rational total = 0;
  for (const auto& e : w.entries()) {
    if (r.contains(e.from, e.to)) total += e.mass;
  }
  return total;
}

Rational measure_of(const Measure& m, const EventSet& x) {
  if (x.universe() != m.size()) throw ValidationError("event set / measure size mismatch");
  Rational total = 0;
  x.for_each([&](Event p) { total += m[p]; });
  return total;
}

Rational integrate(const Measure& m, std::span<const Rational> f) {
  if (f.size() != m.size()) throw ValidationError("function / measure size mismatch");
  Rational total = 0;
  for (Event p = 0; p < m.size(); ++p) total += f[p] * m[p];
  return total;
}

std::vector<ScoreAtom> pushforward_scores(const Measure& m, std::span<const TimeFunction> fns) {
  for (const auto& t : fns) {
    if (t.size() != m.size()) throw ValidationError("time function / measure size mismatch");
  }
  std::map<std::vector<Rational>, Rational> atoms;
  for (Event p = 0; p < m.size(); ++p) {
    if (m[p] == 0) continue;
    std::vector<Rational> score;
    score.reserve(fns.size());
    for (const auto& t : fns) score.push_back(t(p));
    atoms[std::move(score)] += m[p];
  }
  std::vector<ScoreAtom> out;
  out.reserve(atoms.size());
  for (auto& [score, mass] : atoms) out.push_back({score, mass});
  return out;
}

}  // namespace kcausal
