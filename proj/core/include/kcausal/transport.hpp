#pragma once

#include <cstddef>
#include <optional>

#include "kcausal/measure.hpp"
#include "kcausal/relation.hpp"

namespace kcausal {

// Outcome of deciding whether mu is R-related with nu, i.e. whether some
// coupling of (mu, nu) puts all of its mass on R.
struct RelatednessVerdict {
  bool related = false;
  // Present iff related: a coupling with marginals (mu, nu) and mass 1 on R.
  std::optional<Coupling> witness;
  // Present iff not related: a set X with mu(X) > nu(R+(X)).
  std::optional<EventSet> certificate;
};

// Largest ground the exhaustive subset routines will enumerate.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

// Exact decision by bipartite max flow: source -> p with capacity mu(p),
// p -> q for (p,q) in r with capacity 1, q -> sink with capacity nu(q).
// Related iff the maximum flow is 1. Throws ValidationError on size mismatch.
RelatednessVerdict relate(const Relation& r, const Measure& mu, const Measure& nu);

// Checks the witness or certificate against the verdict invariants.
bool verdict_is_sound(const Relation& r, const Measure& mu, const Measure& nu,
                      const RelatednessVerdict& verdict);

// Independent decision by enumerating every subset B and testing
//   mu(B) <= nu(R+(B))  and  mu(R-(B)) >= nu(B).
// Throws CapacityError when n exceeds cap.
bool oracle_relate(const Relation& r, const Measure& mu, const Measure& nu,
                   std::size_t cap = kDefaultEnumerationCap);

// mu(R+(C)) <= nu(R+(C)) for every subset C.
bool check_compact_condition(const Relation& r, const Measure& mu, const Measure& nu,
                             std::size_t cap = kDefaultEnumerationCap);
// mu(R-(C)) >= nu(R-(C)) for every subset C.
bool check_past_compact_condition(const Relation& r, const Measure& mu, const Measure& nu,
                                  std::size_t cap = kDefaultEnumerationCap);
// mu(X) <= nu(X) for every X with R+(X) contained in X.
bool check_future_closed_condition(const Relation& r, const Measure& mu, const Measure& nu,
                                   std::size_t cap = kDefaultEnumerationCap);
// mu(Y) >= nu(Y) for every Y with R-(Y) contained in Y.
bool check_past_closed_condition(const Relation& r, const Measure& mu, const Measure& nu,
                                 std::size_t cap = kDefaultEnumerationCap);

struct EquivalenceReport {
  bool coupling = false;       // relate, by flow
  bool compact = false;        // future images of arbitrary subsets
  bool future_closed = false;  // up-sets
  bool past_compact = false;   // past images of arbitrary subsets
  bool past_closed = false;    // down-sets

  bool all_agree() const noexcept {
    return coupling == compact && coupling == future_closed && coupling == past_compact &&
           coupling == past_closed;
  }
};

// Evaluates the five characterizations independently. r must be a preorder
// (reflexive and transitive), otherwise ValidationError.
EquivalenceReport equivalence_audit(const Relation& r, const Measure& mu, const Measure& nu,
                                    std::size_t cap = kDefaultEnumerationCap);

}  // namespace kcausal
