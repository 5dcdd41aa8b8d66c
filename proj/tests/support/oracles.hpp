#pragma once

// Reference implementations used to cross-check the library. They share no
// code with it beyond the Rational type and deliberately pick different
// algorithms: fixed-point composition instead of Warshall, breadth-first
// search instead of bitset unions, plain subset loops over Rational instead
// of scaled integer scans.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Weights = std::vector<mpq_class>;

inline Matrix from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [p, q] : pairs) m[p][q] = true;
  return m;
}

// R <- R u R;R u identity until nothing changes.
inline Matrix closure_by_composition(Matrix r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    Matrix next = r;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r[a][b])
          for (std::size_t c = 0; c < n; ++c)
            if (r[b][c] && !next[a][c]) {
              next[a][c] = true;
              changed = true;
            }
    r = std::move(next);
  }
  return r;
}

inline std::vector<bool> reachable_from(const Matrix& base, std::size_t start) {
  std::vector<bool> seen(base.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t q = 0; q < base.size(); ++q) {
      if (base[p][q] && !seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  }
  return seen;
}

inline bool in_mask(std::uint32_t mask, std::size_t p) { return (mask >> p) & 1U; }

inline mpq_class mass(const Weights& w, std::uint32_t mask) {
  mpq_class total = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    if (in_mask(mask, p)) total += w[p];
  return total;
}

inline std::uint32_t future_mask(const Matrix& r, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t p = 0; p < r.size(); ++p)
    if (in_mask(mask, p))
      for (std::size_t q = 0; q < r.size(); ++q)
        if (r[p][q]) out |= 1U << q;
  return out;
}

inline std::uint32_t past_mask(const Matrix& r, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t q = 0; q < r.size(); ++q)
    if (in_mask(mask, q))
      for (std::size_t p = 0; p < r.size(); ++p)
        if (r[p][q]) out |= 1U << p;
  return out;
}

// Hall's condition for the bipartite supply/demand problem: every set B of
// sources must find enough demand in its image. Equivalent to the existence
// of a coupling supported on r.
inline bool hall_related(const Matrix& r, const Weights& mu, const Weights& nu) {
  const std::uint32_t limit = 1U << r.size();
  for (std::uint32_t b = 0; b < limit; ++b) {
    if (mass(mu, b) > mass(nu, future_mask(r, b))) return false;
  }
  return true;
}

// mu(U) <= nu(U) for every up-set U of r.
inline bool upset_dominance(const Matrix& r, const Weights& mu, const Weights& nu) {
  const std::uint32_t limit = 1U << r.size();
  for (std::uint32_t u = 0; u < limit; ++u) {
    if ((future_mask(r, u) & ~u) != 0) continue;
    if (mass(mu, u) > mass(nu, u)) return false;
  }
  return true;
}

// Multi-time ordering straight from the definition.
inline Matrix multi_time(const std::vector<std::vector<mpq_class>>& fns, std::size_t n) {
  Matrix m(n, std::vector<bool>(n, true));
  for (const auto& t : fns)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (t[p] > t[q]) m[p][q] = false;
  return m;
}

}  // namespace oracle
