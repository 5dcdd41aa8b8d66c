#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kcausal/measure.hpp"
#include "kcausal/relation.hpp"
#include "kcausal/time_function.hpp"
#include "kcausal/transport.hpp"

namespace kcausal {

// Ordered, nonempty list of time functions together with its multi-time
// ordering: the pairs (p,q) with t(p) <= t(q) for every member t.
class MultiTimeFamily {
 public:
  // Throws ValidationError on an empty list or members of differing size.
  static MultiTimeFamily from(std::vector<TimeFunction> fns);

  std::span<const TimeFunction> functions() const noexcept { return fns_; }
  const Relation& ordering() const noexcept { return ordering_; }
  std::size_t size() const noexcept { return fns_.size(); }
  std::size_t ground_size() const noexcept { return ordering_.ground_size(); }

  // The first k members, 1 <= k <= size().
  MultiTimeFamily prefix(std::size_t k) const;

 private:
  MultiTimeFamily(std::vector<TimeFunction> fns, Relation ordering)
      : fns_(std::move(fns)), ordering_(std::move(ordering)) {}

  std::vector<TimeFunction> fns_;
  Relation ordering_;
};

// One function per event p:
//   t_p = (chi_{K+(p)} + eps * height + eps) / (1 + (n + 1) eps),  eps = 1 / (2 (n + 1)),
// where height(x) is the longest base path ending at x. The family's
// multi-time ordering is exactly K+, it separates points, and distinct values
// of any member differ by at least 1 / (3 (n + 1)).
// Throws NotStablyCausal if K+ is not antisymmetric.
MultiTimeFamily build_separating_family(const CausalGround& ground);

// Longest base path (ignoring self-loops) ending at each event.
// Throws NotStablyCausal if the base has a cycle of length >= 2.
std::vector<std::size_t> event_heights(const CausalGround& ground);

// {(p,q) | t(p) <= t(q)}: a total preorder.
Relation time_ordering(const TimeFunction& t);

// Intersection of the time orderings. Throws ValidationError if empty.
Relation multi_time_ordering(std::span<const TimeFunction> fns);

// One time function per nonempty proper up-set U of K+, with U as a
// super-level set: the normalization of chi_U + eps * height. Together these
// realize every super-level set any time function on the ground can have.
// Throws NotStablyCausal, or CapacityError when n > cap.
std::vector<TimeFunction> upset_time_functions(const CausalGround& ground,
                                               std::size_t cap = kDefaultEnumerationCap);

enum class HalfLine { Open, Closed };

// For every t and every threshold lambda,
//   mu(t > lambda) <= nu(t > lambda)   (Open)   or
//   mu(t >= lambda) <= nu(t >= lambda) (Closed).
// Only the distinct values of t (plus one point below the minimum) are
// tested; every super-level set arises at one of them.
bool check_threshold_condition(std::span<const TimeFunction> fns, const Measure& mu,
                               const Measure& nu, HalfLine half_line);

struct IntegralBattery {
  // Random monotone rational reparameterizations of positive combinations.
  std::size_t random_samples = 0;
  std::uint64_t seed = 0;
  // Adds, for every up-set U of the multi-time ordering, the function
  // delta * sum_a t_a + chi_U with delta small enough that its integral
  // separates mu(U) from nu(U) exactly. Requires n <= cap.
  bool multi_time_indicators = true;
  std::size_t cap = kDefaultEnumerationCap;
};

// Labelings (values in (0,1)) tested by check_integral_condition: the
// members themselves, then the optional indicator and random parts. Each one
// is a componentwise strictly increasing function of the members, so it is a
// time function whenever the members are.
std::vector<std::vector<Rational>> integral_battery(std::span<const TimeFunction> fns,
                                                    const Measure& mu, const Measure& nu,
                                                    const IntegralBattery& options = {});

// sum_p t(p) mu(p) <= sum_p t(p) nu(p) for every labeling of integral_battery.
bool check_integral_condition(std::span<const TimeFunction> fns, const Measure& mu,
                              const Measure& nu, const IntegralBattery& options = {});

// sum_a 2^-a t_a, normalized by the total weight so the result stays in (0,1).
TimeFunction weighted_sum_functional(const CausalGround& ground,
                                     std::span<const TimeFunction> fns);

// mu <=_K nu and nu <=_K mu imply mu == nu, decided by running relate both
// ways. Throws NotStablyCausal if K+ is not antisymmetric.
bool antisymmetry_verdict(const CausalGround& ground, const Measure& mu, const Measure& nu);

enum class PhiSign { Plus, Minus };

// 1/2 + 1/2 tanh(k^2 x + k) for Plus, 1/2 + 1/2 tanh(k^2 x - k) for Minus.
double phi_smoothing(unsigned k, PhiSign sign, double x);

struct SmoothingParams {
  unsigned k = 1;
  unsigned l = 1;
};

// T_{k,l}(p) = phi_l^-( sum_{q in c} prod_a phi_k^+(t_a(p) - t_a(q)) ) at every
// event. As k and then l grow this tends to the indicator of the multi-time
// future of c. Throws ValidationError if c is empty or k, l < 1.
std::vector<double> t_kl_indicator_demo(std::span<const TimeFunction> fns, const EventSet& c,
                                        SmoothingParams params);

// Samples bounded componentwise-increasing Phi and compares the integrals of
// Phi(t_1, ..., t_n) under mu and nu. The first members.size() trials are the
// coordinate projections. Returns false at the first violation (beyond a
// 1e-9 floating-point allowance).
bool monotone_phi_sampler(std::span<const TimeFunction> fns, const Measure& mu,
                          const Measure& nu, std::size_t trials, std::uint64_t seed);

struct PrefixReport {
  // verdicts[k-1]: relate on the multi-time ordering of the first k members.
  std::vector<bool> verdicts;
  bool non_increasing = false;
  bool k_plus_verdict = false;
  bool matches_k_plus = false;
};

PrefixReport prefix_monotonicity_check(const CausalGround& ground, const MultiTimeFamily& family,
                                       const Measure& mu, const Measure& nu);

}  // namespace kcausal
