#include "kcausal/models.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kcausal/errors.hpp"
#include "kcausal/time_functions.hpp"

namespace kcausal {

namespace {

std::vector<Event> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Event> perm(n);
  std::iota(perm.begin(), perm.end(), Event{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CausalGround gen_random_dag(std::size_t n, double edge_density, std::uint64_t seed) {
  if (n == 0) throw ValidationError("ground size must be positive");
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) {
    throw ValidationError("edge density must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  const auto perm = random_permutation(n, rng);
  std::bernoulli_distribution edge(edge_density);
  std::vector<EventPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) pairs.emplace_back(perm[i], perm[j]);
    }
  }
  return CausalGround(Relation::from_pairs(n, pairs));
}

CausalGround gen_cyclic(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("a cyclic ground needs at least two events");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution chord(0.2);
  std::vector<EventPair> pairs;
  for (Event p = 0; p < n; ++p) pairs.emplace_back(p, (p + 1) % n);
  for (Event p = 0; p < n; ++p) {
    for (Event q = 0; q < n; ++q) {
      if (p != q && q != (p + 1) % n && chord(rng)) pairs.emplace_back(p, q);
    }
  }
  return CausalGround(Relation::from_pairs(n, pairs));
}

CausalGround chain_ground(std::size_t n) {
  std::vector<EventPair> pairs;
  for (Event p = 0; p + 1 < n; ++p) pairs.emplace_back(p, p + 1);
  return CausalGround(Relation::from_pairs(n, pairs));
}

CausalGround antichain_ground(std::size_t n) { return CausalGround(Relation(n)); }

MinkowskiSample minkowski_from_points(std::vector<MinkowskiPoint> points) {
  const std::size_t n = points.size();
  for (auto& p : points) {
    p.t.canonicalize();
    p.x.canonicalize();
  }
  std::vector<EventPair> pairs;
  for (Event p = 0; p < n; ++p) {
    for (Event q = 0; q < n; ++q) {
      if (p == q) continue;
      if (points[q].t - points[p].t >= abs(points[q].x - points[p].x)) pairs.emplace_back(p, q);
    }
  }
  CausalGround ground(Relation::from_pairs(n, pairs));
  return MinkowskiSample{std::move(points), std::move(ground)};
}

MinkowskiSample gen_minkowski(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("ground size must be positive");
  constexpr long kGrid = 1L << 16;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, kGrid);
  std::set<std::pair<long, long>> seen;
  std::vector<MinkowskiPoint> points;
  while (points.size() < n) {
    const long t = coord(rng);
    const long x = coord(rng);
    if (!seen.emplace(t, x).second) continue;
    points.push_back({Rational(t, kGrid), Rational(x, kGrid)});
  }
  return minkowski_from_points(std::move(points));
}

TimeFunction boosted_time_function(const MinkowskiSample& sample, const Rational& velocity) {
  if (abs(velocity) >= 1) throw ValidationError("boost velocity must satisfy |v| < 1");
  std::vector<Rational> raw;
  raw.reserve(sample.points.size());
  for (const auto& p : sample.points) raw.emplace_back(p.t - velocity * p.x);
  return TimeFunction::rescaled(sample.ground, raw, Rational(1));
}

Measure gen_measure(std::size_t n, std::size_t support_size, std::uint64_t seed, bool uniform) {
  if (support_size == 0 || support_size > n) {
    throw ValidationError("support size must lie in [1, n]");
  }
  std::mt19937_64 rng(seed);
  auto perm = random_permutation(n, rng);
  std::uniform_int_distribution<long> weight(1, 12);
  std::vector<long> raw(n, 0);
  long total = 0;
  for (std::size_t i = 0; i < support_size; ++i) {
    raw[perm[i]] = uniform ? 1 : weight(rng);
    total += raw[perm[i]];
  }
  std::vector<Rational> weights;
  weights.reserve(n);
  for (long w : raw) {
    Rational r(w, total);
    r.canonicalize();
    weights.push_back(r);
  }
  return Measure::from_weights(std::move(weights));
}

Measure gen_related_measure(const Relation& r, const Measure& mu, std::uint64_t seed) {
  const std::size_t n = r.ground_size();
  if (mu.size() != n) throw ValidationError("relation / measure size mismatch");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> share(0, 4);
  std::vector<Rational> nu(n, Rational(0));
  for (Event p = 0; p < n; ++p) {
    if (mu[p] == 0) continue;
    const std::vector<Event> targets = r.successors(p).members();
    if (targets.empty()) throw ValidationError("supported event without successors");
    std::vector<long> parts(targets.size());
    long total = 0;
    for (auto& s : parts) total += (s = share(rng));
    if (total == 0) {
      parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
      nu[targets[i]] += mu[p] * ratio(parts[i], total);
    }
  }
  return Measure::from_weights(std::move(nu));
}

TimeFunction gen_time_function(const CausalGround& ground, std::uint64_t seed) {
  const std::size_t n = ground.size();
  const std::vector<std::size_t> height = event_heights(ground);
  std::vector<Event> order(n);
  std::iota(order.begin(), order.end(), Event{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Event a, Event b) { return height[a] < height[b]; });
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> step(1, 3);
  std::vector<long> label(n, 0);
  for (Event q : order) {
    long floor = -1;
    ground.base().predecessors(q).for_each([&](Event p) {
      if (p != q) floor = std::max(floor, label[p]);
    });
    label[q] = floor + step(rng);
  }
  std::vector<Rational> raw;
  raw.reserve(n);
  for (long v : label) raw.emplace_back(v);
  return TimeFunction::rescaled(ground, raw, Rational(1));
}

std::string_view to_string(GroundKind kind) {
  switch (kind) {
    case GroundKind::RandomDag: return "dag";
    case GroundKind::Minkowski: return "minkowski";
    case GroundKind::Chain: return "chain";
    case GroundKind::Antichain: return "antichain";
  }
  return "unknown";
}

GeneratedGround gen_audit_ground(std::size_t max_n, std::uint64_t seed) {
  if (max_n == 0) throw ValidationError("max ground size must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const int bucket = std::uniform_int_distribution<int>(0, 9)(rng);
  const std::uint64_t sub = rng();
  if (bucket < 7) {
    const double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    return {GroundKind::RandomDag, gen_random_dag(n, density, sub)};
  }
  if (bucket < 9) return {GroundKind::Minkowski, gen_minkowski(n, sub).ground};
  if (rng() % 2 == 0) return {GroundKind::Chain, chain_ground(n)};
  return {GroundKind::Antichain, antichain_ground(n)};
}

}  // namespace kcausal
