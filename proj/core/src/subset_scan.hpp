#pragma once

// Shared machinery for the exhaustive subset checks: relation rows as bit
// masks and measures as integers over a common denominator, so each subset
// test is a handful of word operations and integer sums.

#include <cstdint>
#include <limits>
#include <vector>

#include "kcausal/errors.hpp"
#include "kcausal/measure.hpp"
#include "kcausal/relation.hpp"

namespace kcausal::detail {

using SubsetMask = std::uint32_t;

template <class W>
struct SubsetScan {
  std::size_t n = 0;
  std::vector<SubsetMask> succ;
  std::vector<SubsetMask> pred;
  std::vector<W> mu;
  std::vector<W> nu;

  SubsetMask full() const { return n == 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1; }

  static SubsetMask image(const std::vector<SubsetMask>& rows, SubsetMask x) {
    SubsetMask out = 0;
    while (x != 0) {
      out |= rows[static_cast<std::size_t>(__builtin_ctz(x))];
      x &= x - 1;
    }
    return out;
  }
  SubsetMask future(SubsetMask x) const { return image(succ, x); }
  SubsetMask past(SubsetMask x) const { return image(pred, x); }

  static W sum(const std::vector<W>& w, SubsetMask x) {
    W total = 0;
    while (x != 0) {
      total += w[static_cast<std::size_t>(__builtin_ctz(x))];
      x &= x - 1;
    }
    return total;
  }
  W mu_of(SubsetMask x) const { return sum(mu, x); }
  W nu_of(SubsetMask x) const { return sum(nu, x); }

  // Calls pred(mask) for every subset; stops at the first false.
  template <class Pred>
  bool all_subsets(Pred&& pred_fn) const {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < count; ++m) {
      if (!pred_fn(static_cast<SubsetMask>(m))) return false;
    }
    return true;
  }
};

inline std::vector<SubsetMask> row_masks(const Relation& r, bool transpose) {
  std::vector<SubsetMask> out(r.ground_size(), 0);
  for (Event p = 0; p < r.ground_size(); ++p) {
    const EventSet& row = transpose ? r.predecessors(p) : r.successors(p);
    row.for_each([&](Event q) { out[p] |= SubsetMask{1} << q; });
  }
  return out;
}

// Builds the scan over the cheapest exact integer type and hands it to body.
template <class Body>
decltype(auto) with_subset_scan(const Relation& r, const Measure& mu, const Measure& nu,
                                std::size_t cap, Body&& body) {
  const std::size_t n = r.ground_size();
  if (mu.size() != n || nu.size() != n) {
    throw ValidationError("relation and measures are over grounds of different size");
  }
  if (n > cap || n > 31) throw CapacityError(n, cap < 31 ? cap : 31);

  std::vector<Rational> all(mu.weights().begin(), mu.weights().end());
  all.insert(all.end(), nu.weights().begin(), nu.weights().end());
  const Integer denom = common_denominator(all);

  auto scaled = [&](const Measure& m) {
    std::vector<Integer> out;
    out.reserve(n);
    for (const auto& w : m.weights()) out.emplace_back(w.get_num() * (denom / w.get_den()));
    return out;
  };

  // Every subset sum is at most denom, so int64 is exact whenever denom fits.
  if (denom <= std::numeric_limits<std::int64_t>::max() / 2) {
    SubsetScan<std::int64_t> scan;
    scan.n = n;
    scan.succ = row_masks(r, false);
    scan.pred = row_masks(r, true);
    for (const auto& v : scaled(mu)) scan.mu.push_back(v.get_si());
    for (const auto& v : scaled(nu)) scan.nu.push_back(v.get_si());
    return body(scan);
  }
  SubsetScan<Integer> scan;
  scan.n = n;
  scan.succ = row_masks(r, false);
  scan.pred = row_masks(r, true);
  scan.mu = scaled(mu);
  scan.nu = scaled(nu);
  return body(scan);
}

}  // namespace kcausal::detail
