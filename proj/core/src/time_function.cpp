#include "kcausal/time_function.hpp"

#include <algorithm>
#include <string>

#include "kcausal/errors.hpp"

namespace kcausal {

bool is_time_function(const CausalGround& ground, std::span<const Rational> values) {
  if (values.size() != ground.size()) return false;
  for (const auto& v : values) {
    if (v <= 0 || v >= 1) return false;
  }
  for (const auto& [p, q] : ground.base().pairs()) {
    if (p != q && !(values[p] < values[q])) return false;
  }
  return true;
}

TimeFunction TimeFunction::on(const CausalGround& ground, std::vector<Rational> values) {
  if (values.size() != ground.size()) {
    throw ValidationError("time function has " + std::to_string(values.size()) +
                          " values for a ground of size " + std::to_string(ground.size()));
  }
  for (auto& v : values) v.canonicalize();
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (values[p] <= 0 || values[p] >= 1) {
      throw ValidationError("time function value at event " + std::to_string(p) +
                            " is outside (0,1)");
    }
  }
  for (const auto& [p, q] : ground.base().pairs()) {
    if (p != q && !(values[p] < values[q])) {
      throw ValidationError("time function does not increase along base edge (" +
                            std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  return TimeFunction(std::move(values));
}

TimeFunction TimeFunction::rescaled(const CausalGround& ground, std::span<const Rational> raw,
                                    const Rational& margin) {
  if (margin <= 0) throw ValidationError("rescale margin must be positive");
  if (raw.empty()) return on(ground, {});
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const Rational width = *hi - *lo + 2 * margin;
  std::vector<Rational> values;
  values.reserve(raw.size());
  for (const auto& v : raw) values.emplace_back((v - *lo + margin) / width);
  return on(ground, std::move(values));
}

}  // namespace kcausal
