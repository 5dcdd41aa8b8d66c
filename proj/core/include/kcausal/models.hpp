#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "kcausal/measure.hpp"
#include "kcausal/rational.hpp"
#include "kcausal/relation.hpp"
#include "kcausal/time_function.hpp"

namespace kcausal {

// Seeded generators of grounds, measures and time functions. Every generator
// is a pure function of its arguments.

// Edges only go forward along a random permutation, each with probability
// edge_density, so the base is acyclic.
CausalGround gen_random_dag(std::size_t n, double edge_density, std::uint64_t seed);

// Ring 0 -> 1 -> ... -> n-1 -> 0 plus random chords. n >= 2.
CausalGround gen_cyclic(std::size_t n, std::uint64_t seed);

CausalGround chain_ground(std::size_t n);
CausalGround antichain_ground(std::size_t n);

struct MinkowskiPoint {
  Rational t;
  Rational x;
};

// Points of 1+1 Minkowski space in [0,1]^2 with the closed-cone base
// relation: p -> q iff p != q and t_q - t_p >= |x_q - x_p|.
struct MinkowskiSample {
  std::vector<MinkowskiPoint> points;
  CausalGround ground;
};

MinkowskiSample minkowski_from_points(std::vector<MinkowskiPoint> points);

// n distinct points on the 2^-16 grid of the unit square.
MinkowskiSample gen_minkowski(std::size_t n, std::uint64_t seed);

// t - v x, rescaled into (0,1); a time function for rational |v| < 1.
// This is order-equivalent to the boosted time coordinate.
TimeFunction boosted_time_function(const MinkowskiSample& sample, const Rational& velocity);

// Random positive integer weights on a random support of the given size,
// normalized exactly. With uniform = true all support weights are equal.
Measure gen_measure(std::size_t n, std::size_t support_size, std::uint64_t seed,
                    bool uniform = false);

// A measure nu with mu <=_r nu by construction: each mu(p) is split in random
// rational proportions among r-successors of p. Needs every supported p to
// have at least one successor (true when r is reflexive).
Measure gen_related_measure(const Relation& r, const Measure& mu, std::uint64_t seed);

// Random time function: increments along a topological order, then rescaled
// into (0,1). Throws NotStablyCausal for a cyclic base.
TimeFunction gen_time_function(const CausalGround& ground, std::uint64_t seed);

enum class GroundKind { RandomDag, Minkowski, Chain, Antichain };
std::string_view to_string(GroundKind kind);

struct GeneratedGround {
  GroundKind kind;
  CausalGround ground;
};

// Audit instance mix: 70% random DAGs, 20% Minkowski samples, 10% chains or
// antichains; size uniform in [1, max_n].
GeneratedGround gen_audit_ground(std::size_t max_n, std::uint64_t seed);

// Per-trial seed derived from a run seed and trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace kcausal
