#include "kcausal/time_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "kcausal/errors.hpp"
#include "subset_scan.hpp"

namespace kcausal {

namespace {

void require_stably_causal(const Relation& k) {
  if (!is_antisymmetric(k)) {
    throw NotStablyCausal("K+ is not antisymmetric: the ground has a causal cycle");
  }
}

void require_common_size(std::span<const TimeFunction> fns, std::size_t n) {
  for (const auto& t : fns) {
    if (t.size() != n) throw ValidationError("time functions over grounds of different size");
  }
}

// Normalization shared by the separating family and the up-set battery.
std::vector<Rational> normalize_grid(std::vector<Rational> raw, const Rational& eps,
                                     std::size_t n) {
  const Rational scale = 1 + Rational(n + 1) * eps;
  for (auto& v : raw) v = (v + eps) / scale;
  return raw;
}

std::vector<Rational> to_open_unit(std::vector<Rational> raw) {
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const Rational low = *lo;
  const Rational width = *hi - low + 2;
  for (auto& v : raw) v = (v - low + 1) / width;
  return raw;
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiTimeFamily

MultiTimeFamily MultiTimeFamily::from(std::vector<TimeFunction> fns) {
  Relation ordering = multi_time_ordering(fns);
  return MultiTimeFamily(std::move(fns), std::move(ordering));
}

MultiTimeFamily MultiTimeFamily::prefix(std::size_t k) const {
  if (k == 0 || k > fns_.size()) throw ValidationError("prefix length out of range");
  return from(std::vector<TimeFunction>(fns_.begin(), fns_.begin() + static_cast<long>(k)));
}

// ---------------------------------------------------------------------------
// Construction

std::vector<std::size_t> event_heights(const CausalGround& ground) {
  const std::size_t n = ground.size();
  const Relation& base = ground.base();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [p, q] : base.pairs()) {
    if (p != q) ++indegree[q];
  }
  std::vector<Event> ready;
  for (Event p = 0; p < n; ++p) {
    if (indegree[p] == 0) ready.push_back(p);
  }
  std::vector<std::size_t> height(n, 0);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const Event p = ready.back();
    ready.pop_back();
    ++visited;
    base.successors(p).for_each([&](Event q) {
      if (q == p) return;
      height[q] = std::max(height[q], height[p] + 1);
      if (--indegree[q] == 0) ready.push_back(q);
    });
  }
  if (visited != n) throw NotStablyCausal("base relation has a cycle");
  return height;
}

MultiTimeFamily build_separating_family(const CausalGround& ground) {
  const std::size_t n = ground.size();
  const Relation k = k_plus(ground);
  require_stably_causal(k);
  const std::vector<std::size_t> height = event_heights(ground);
  const Rational eps(1, 2 * (n + 1));

  std::vector<TimeFunction> fns;
  fns.reserve(n);
  for (Event p = 0; p < n; ++p) {
    const EventSet& future = k.successors(p);
    std::vector<Rational> raw(n);
    for (Event x = 0; x < n; ++x) {
      raw[x] = Rational(future.contains(x) ? 1 : 0) + eps * Rational(height[x]);
    }
    fns.push_back(TimeFunction::on(ground, normalize_grid(std::move(raw), eps, n)));
  }
  return MultiTimeFamily::from(std::move(fns));
}

Relation time_ordering(const TimeFunction& t) {
  const std::size_t n = t.size();
  std::vector<EventSet> rows(n, EventSet(n));
  for (Event p = 0; p < n; ++p) {
    for (Event q = 0; q < n; ++q) {
      if (t(p) <= t(q)) rows[p].insert(q);
    }
  }
  return Relation::from_rows(std::move(rows));
}

Relation multi_time_ordering(std::span<const TimeFunction> fns) {
  if (fns.empty()) throw ValidationError("multi-time ordering of an empty family");
  require_common_size(fns, fns.front().size());
  Relation out = time_ordering(fns.front());
  for (const auto& t : fns.subspan(1)) out = out.intersect(time_ordering(t));
  return out;
}

std::vector<TimeFunction> upset_time_functions(const CausalGround& ground, std::size_t cap) {
  const std::size_t n = ground.size();
  if (n > cap || n > 31) throw CapacityError(n, std::min<std::size_t>(cap, 31));
  const Relation k = k_plus(ground);
  require_stably_causal(k);
  const std::vector<std::size_t> height = event_heights(ground);
  const Rational eps(1, 2 * (n + 1));
  const auto succ = detail::row_masks(k, false);

  std::vector<TimeFunction> out;
  const detail::SubsetMask full = (detail::SubsetMask{1} << n) - 1;
  for (detail::SubsetMask u = 1; u < full; ++u) {
    if ((detail::SubsetScan<int>::image(succ, u) & ~u) != 0) continue;
    std::vector<Rational> raw(n);
    for (Event x = 0; x < n; ++x) {
      raw[x] = Rational((u >> x) & 1U) + eps * Rational(height[x]);
    }
    out.push_back(TimeFunction::on(ground, normalize_grid(std::move(raw), eps, n)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Threshold and integral conditions

bool check_threshold_condition(std::span<const TimeFunction> fns, const Measure& mu,
                               const Measure& nu, HalfLine half_line) {
  const std::size_t n = mu.size();
  if (nu.size() != n) throw ValidationError("measures over grounds of different size");
  require_common_size(fns, n);
  for (const auto& t : fns) {
    std::set<Rational> levels(t.values().begin(), t.values().end());
    // Below the minimum both super-level sets are the whole ground: 1 <= 1.
    for (const auto& lambda : levels) {
      Rational mu_mass = 0;
      Rational nu_mass = 0;
      for (Event p = 0; p < n; ++p) {
        const bool above = half_line == HalfLine::Open ? t(p) > lambda : t(p) >= lambda;
        if (above) {
          mu_mass += mu[p];
          nu_mass += nu[p];
        }
      }
      if (mu_mass > nu_mass) return false;
    }
  }
  return true;
}

std::vector<std::vector<Rational>> integral_battery(std::span<const TimeFunction> fns,
                                                    const Measure& mu, const Measure& nu,
                                                    const IntegralBattery& options) {
  const std::size_t n = mu.size();
  if (nu.size() != n) throw ValidationError("measures over grounds of different size");
  if (fns.empty()) throw ValidationError("integral condition needs a nonempty family");
  require_common_size(fns, n);

  std::vector<std::vector<Rational>> battery;
  for (const auto& t : fns) battery.emplace_back(t.values().begin(), t.values().end());

  std::vector<Rational> coordinate_sum(n, Rational(0));
  for (const auto& t : fns) {
    for (Event p = 0; p < n; ++p) coordinate_sum[p] += t(p);
  }

  if (options.multi_time_indicators) {
    if (n > options.cap || n > 31) throw CapacityError(n, std::min<std::size_t>(options.cap, 31));
    // If mu(U) > nu(U) the gap is at least 1/D; the perturbation moves each
    // integral by less than delta * |F| = 1/(2D).
    std::vector<Rational> weights(mu.weights().begin(), mu.weights().end());
    weights.insert(weights.end(), nu.weights().begin(), nu.weights().end());
    const Rational delta(Integer(1), 2 * common_denominator(weights) * Integer(fns.size()));
    const auto succ = detail::row_masks(multi_time_ordering(fns), false);
    const detail::SubsetMask full =
        n == 0 ? 0 : (n == 32 ? ~detail::SubsetMask{0} : (detail::SubsetMask{1} << n) - 1);
    for (std::uint64_t m = 1; m <= full; ++m) {
      const auto u = static_cast<detail::SubsetMask>(m);
      if ((detail::SubsetScan<int>::image(succ, u) & ~u) != 0) continue;
      std::vector<Rational> raw(n);
      for (Event p = 0; p < n; ++p) raw[p] = delta * coordinate_sum[p] + Rational((u >> p) & 1U);
      battery.push_back(to_open_unit(std::move(raw)));
    }
  }

  if (options.random_samples > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> weight_dist(0, 4);
    std::uniform_int_distribution<int> slope_dist(0, 8);
    std::uniform_int_distribution<std::size_t> kink_count(0, 3);

    // y + sum_j c_j max(0, y - b_j) with kinks at observed values.
    auto reparameterize = [&](std::vector<Rational> values) {
      std::vector<std::pair<Rational, Rational>> kinks;
      std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
      for (std::size_t j = kink_count(rng); j > 0; --j) {
        kinks.emplace_back(values[pick(rng)], ratio(slope_dist(rng), 2));
      }
      for (auto& y : values) {
        Rational out = y;
        for (const auto& [b, c] : kinks) {
          if (y > b) out += c * (y - b);
        }
        y = out;
      }
      return values;
    };

    for (std::size_t s = 0; s < options.random_samples; ++s) {
      std::vector<Rational> combo(n, Rational(0));
      bool any = false;
      for (std::size_t a = 0; a < fns.size(); ++a) {
        int w = weight_dist(rng);
        if (a + 1 == fns.size() && !any && w == 0) w = 1;
        if (w == 0) continue;
        any = true;
        const auto inner = reparameterize(
            std::vector<Rational>(fns[a].values().begin(), fns[a].values().end()));
        for (Event p = 0; p < n; ++p) combo[p] += Rational(w) * inner[p];
      }
      battery.push_back(to_open_unit(reparameterize(std::move(combo))));
    }
  }
  return battery;
}

bool check_integral_condition(std::span<const TimeFunction> fns, const Measure& mu,
                              const Measure& nu, const IntegralBattery& options) {
  for (const auto& f : integral_battery(fns, mu, nu, options)) {
    if (integrate(mu, f) > integrate(nu, f)) return false;
  }
  return true;
}

TimeFunction weighted_sum_functional(const CausalGround& ground,
                                     std::span<const TimeFunction> fns) {
  if (fns.empty()) throw ValidationError("weighted sum of an empty family");
  const std::size_t n = ground.size();
  require_common_size(fns, n);
  std::vector<Rational> values(n, Rational(0));
  Rational weight(1, 2);
  Rational total_weight = 0;
  for (const auto& t : fns) {
    for (Event p = 0; p < n; ++p) values[p] += weight * t(p);
    total_weight += weight;
    weight /= 2;
  }
  for (auto& v : values) v /= total_weight;
  return TimeFunction::on(ground, std::move(values));
}

bool antisymmetry_verdict(const CausalGround& ground, const Measure& mu, const Measure& nu) {
  const Relation k = k_plus(ground);
  require_stably_causal(k);
  const bool forward = relate(k, mu, nu).related;
  const bool backward = relate(k, nu, mu).related;
  return !(forward && backward) || mu == nu;
}

// ---------------------------------------------------------------------------
// Smoothing

double phi_smoothing(unsigned k, PhiSign sign, double x) {
  if (k == 0) throw ValidationError("smoothing index must be at least 1");
  const double kd = static_cast<double>(k);
  const double z = kd * kd * x + (sign == PhiSign::Plus ? kd : -kd);
  // 1/2 + 1/2 tanh(z) == 1 / (1 + exp(-2z)); the logistic form keeps
  // precision in the lower tail.
  return 1.0 / (1.0 + std::exp(-2.0 * z));
}

std::vector<double> t_kl_indicator_demo(std::span<const TimeFunction> fns, const EventSet& c,
                                        SmoothingParams params) {
  if (fns.empty()) throw ValidationError("smoothing demo needs a nonempty family");
  if (c.empty()) throw ValidationError("smoothing demo needs a nonempty set C");
  if (params.k == 0 || params.l == 0) throw ValidationError("k and l must be at least 1");
  const std::size_t n = fns.front().size();
  require_common_size(fns, n);
  if (c.universe() != n) throw ValidationError("set C is over a ground of different size");

  std::vector<std::vector<double>> scores(fns.size(), std::vector<double>(n));
  for (std::size_t a = 0; a < fns.size(); ++a) {
    for (Event p = 0; p < n; ++p) scores[a][p] = to_double(fns[a](p));
  }
  const std::vector<Event> anchors = c.members();
  std::vector<double> out(n);
  for (Event p = 0; p < n; ++p) {
    double sum = 0.0;
    for (Event q : anchors) {
      double product = 1.0;
      for (const auto& t : scores) product *= phi_smoothing(params.k, PhiSign::Plus, t[p] - t[q]);
      sum += product;
    }
    out[p] = phi_smoothing(params.l, PhiSign::Minus, sum);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monotone Phi sampler

bool monotone_phi_sampler(std::span<const TimeFunction> fns, const Measure& mu,
                          const Measure& nu, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ValidationError("sampler needs at least one trial");
  if (fns.empty()) throw ValidationError("sampler needs a nonempty family");
  constexpr double kTolerance = 1e-9;
  const std::size_t dim = fns.size();

  struct Atom {
    std::vector<double> y;
    double mass;
  };
  auto atoms_of = [&](const Measure& m) {
    std::vector<Atom> out;
    for (const auto& a : pushforward_scores(m, fns)) {
      Atom atom{{}, to_double(a.mass)};
      for (const auto& s : a.scores) atom.y.push_back(to_double(s));
      out.push_back(std::move(atom));
    }
    return out;
  };
  const std::vector<Atom> mu_atoms = atoms_of(mu);
  const std::vector<Atom> nu_atoms = atoms_of(nu);

  using Phi = std::function<double(const std::vector<double>&)>;
  auto integral = [](const std::vector<Atom>& atoms, const Phi& phi) {
    double total = 0.0;
    for (const auto& a : atoms) total += a.mass * phi(a.y);
    return total;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<unsigned> k_dist(1, 40);
  std::uniform_int_distribution<int> terms(1, 3);

  // Bounded increasing piecewise-linear map of one coordinate.
  auto random_ramp = [&]() {
    std::vector<std::array<double, 3>> steps;  // {weight, start, width}
    for (int j = terms(rng); j > 0; --j) {
      steps.push_back({unit(rng) + 1e-3, unit(rng), 1e-3 + 0.5 * unit(rng)});
    }
    return [steps](double y) {
      double out = 0.0;
      for (const auto& [w, b, s] : steps) out += w * std::clamp((y - b) / s, 0.0, 1.0);
      return out;
    };
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Phi phi;
    if (trial < dim) {
      phi = [trial](const std::vector<double>& y) { return y[trial]; };
    } else {
      switch (trial % 3) {
        case 0: {
          struct Bump {
            double weight;
            unsigned k;
            std::vector<double> shift;
          };
          std::vector<Bump> bumps;
          for (int j = terms(rng); j > 0; --j) {
            Bump b{unit(rng) + 1e-3, k_dist(rng), {}};
            for (std::size_t a = 0; a < dim; ++a) b.shift.push_back(unit(rng));
            bumps.push_back(std::move(b));
          }
          phi = [bumps](const std::vector<double>& y) {
            double out = 0.0;
            for (const auto& b : bumps) {
              double product = b.weight;
              for (std::size_t a = 0; a < y.size(); ++a) {
                product *= phi_smoothing(b.k, PhiSign::Plus, y[a] - b.shift[a]);
              }
              out += product;
            }
            return out;
          };
          break;
        }
        case 1: {
          std::vector<std::function<double(double)>> ramps;
          std::vector<double> weights;
          for (std::size_t a = 0; a < dim; ++a) {
            ramps.push_back(random_ramp());
            weights.push_back(unit(rng));
          }
          phi = [ramps, weights](const std::vector<double>& y) {
            double out = 0.0;
            for (std::size_t a = 0; a < y.size(); ++a) out += weights[a] * ramps[a](y[a]);
            return out;
          };
          break;
        }
        default: {
          std::vector<std::function<double(double)>> ramps;
          for (std::size_t a = 0; a < dim; ++a) ramps.push_back(random_ramp());
          phi = [ramps](const std::vector<double>& y) {
            double out = ramps[0](y[0]);
            for (std::size_t a = 1; a < y.size(); ++a) out = std::min(out, ramps[a](y[a]));
            return out;
          };
          break;
        }
      }
    }
    if (integral(mu_atoms, phi) - integral(nu_atoms, phi) > kTolerance) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Prefix monotonicity

PrefixReport prefix_monotonicity_check(const CausalGround& ground, const MultiTimeFamily& family,
                                       const Measure& mu, const Measure& nu) {
  if (family.ground_size() != ground.size()) {
    throw ValidationError("family and ground have different sizes");
  }
  PrefixReport report;
  for (std::size_t k = 1; k <= family.size(); ++k) {
    report.verdicts.push_back(relate(family.prefix(k).ordering(), mu, nu).related);
  }
  report.non_increasing = std::is_sorted(report.verdicts.rbegin(), report.verdicts.rend());
  report.k_plus_verdict = relate(k_plus(ground), mu, nu).related;
  report.matches_k_plus = report.verdicts.back() == report.k_plus_verdict;
  return report;
}

}  // namespace kcausal
