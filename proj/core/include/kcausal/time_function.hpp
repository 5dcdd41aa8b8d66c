#pragma once

#include <span>
#include <vector>

#include "kcausal/rational.hpp"
#include "kcausal/relation.hpp"

namespace kcausal {

// Rational event labeling valued in the open interval (0,1) and strictly
// increasing along every base edge p -> q with p != q.
class TimeFunction {
 public:
  // Throws ValidationError if the values are out of range, of the wrong
  // length, or fail to increase along some base edge.
  static TimeFunction on(const CausalGround& ground, std::vector<Rational> values);

  // Affinely maps raw labels into (0,1): v -> (v - min + margin) / (max - min + 2 margin).
  // Order (and hence validity along edges) is preserved. margin must be > 0.
  static TimeFunction rescaled(const CausalGround& ground, std::span<const Rational> raw,
                               const Rational& margin);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator()(Event p) const { return values_.at(p); }
  std::span<const Rational> values() const noexcept { return values_; }

  friend bool operator==(const TimeFunction&, const TimeFunction&) = default;

 private:
  explicit TimeFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  std::vector<Rational> values_;
};

bool is_time_function(const CausalGround& ground, std::span<const Rational> values);

}  // namespace kcausal
