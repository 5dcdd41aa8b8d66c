#include "kcausal/transport.hpp"

#include <stdexcept>

#include "kcausal/errors.hpp"
#include "kcausal/max_flow.hpp"
#include "subset_scan.hpp"

namespace kcausal {

namespace {

void require_same_size(const Relation& r, const Measure& mu, const Measure& nu) {
  if (mu.size() != r.ground_size() || nu.size() != r.ground_size()) {
    throw ValidationError("relation and measures are over grounds of different size");
  }
}

bool violates_hall(const Relation& r, const Measure& mu, const Measure& nu, const EventSet& x) {
  return measure_of(mu, x) > measure_of(nu, future_set(r, x));
}

}  // namespace

RelatednessVerdict relate(const Relation& r, const Measure& mu, const Measure& nu) {
  require_same_size(r, mu, nu);
  const std::size_t n = r.ground_size();
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  auto left = [](Event p) { return p; };
  auto right = [n](Event q) { return n + q; };

  MaxFlow flow(2 * n + 2);
  for (Event p = 0; p < n; ++p) flow.add_edge(source, left(p), mu[p]);
  std::vector<std::pair<MaxFlow::EdgeId, EventPair>> middle;
  middle.reserve(r.size());
  for (const auto& [p, q] : r.pairs()) {
    middle.emplace_back(flow.add_edge(left(p), right(q), Rational(1)), EventPair{p, q});
  }
  for (Event q = 0; q < n; ++q) flow.add_edge(right(q), sink, nu[q]);

  const Rational value = flow.solve(source, sink);

  RelatednessVerdict verdict;
  if (value == 1) {
    std::vector<CouplingEntry> entries;
    for (const auto& [edge, pq] : middle) {
      if (flow.flow(edge) != 0) entries.push_back({pq.first, pq.second, flow.flow(edge)});
    }
    verdict.related = true;
    verdict.witness = Coupling::from_entries(n, entries);
    return verdict;
  }

  // A cut below 1 cannot sever a capacity-1 middle edge, so the left nodes on
  // the source side have all of their r-successors on the source side too.
  const std::vector<bool> side = flow.source_side();
  EventSet x(n);
  for (Event p = 0; p < n; ++p) {
    if (side[left(p)]) x.insert(p);
  }
  const EventSet closed = x | future_set(r, x);
  verdict.certificate = violates_hall(r, mu, nu, closed) ? closed : x;
  if (!violates_hall(r, mu, nu, *verdict.certificate)) {
    throw std::logic_error("min-cut certificate does not violate the Hall condition");
  }
  return verdict;
}

bool verdict_is_sound(const Relation& r, const Measure& mu, const Measure& nu,
                      const RelatednessVerdict& verdict) {
  if (verdict.related) {
    return verdict.witness.has_value() && !verdict.certificate.has_value() &&
           verdict.witness->size() == r.ground_size() &&
           verdict.witness->has_marginals(mu, nu) && mass_on(*verdict.witness, r) == 1;
  }
  return !verdict.witness.has_value() && verdict.certificate.has_value() &&
         verdict.certificate->universe() == r.ground_size() &&
         violates_hall(r, mu, nu, *verdict.certificate);
}

bool oracle_relate(const Relation& r, const Measure& mu, const Measure& nu, std::size_t cap) {
  return detail::with_subset_scan(r, mu, nu, cap, [](const auto& s) {
    return s.all_subsets([&](detail::SubsetMask b) {
      return s.mu_of(b) <= s.nu_of(s.future(b)) && s.mu_of(s.past(b)) >= s.nu_of(b);
    });
  });
}

bool check_compact_condition(const Relation& r, const Measure& mu, const Measure& nu,
                             std::size_t cap) {
  return detail::with_subset_scan(r, mu, nu, cap, [](const auto& s) {
    return s.all_subsets([&](detail::SubsetMask c) {
      const auto img = s.future(c);
      return s.mu_of(img) <= s.nu_of(img);
    });
  });
}

bool check_past_compact_condition(const Relation& r, const Measure& mu, const Measure& nu,
                                  std::size_t cap) {
  return detail::with_subset_scan(r, mu, nu, cap, [](const auto& s) {
    return s.all_subsets([&](detail::SubsetMask c) {
      const auto img = s.past(c);
      return s.mu_of(img) >= s.nu_of(img);
    });
  });
}

bool check_future_closed_condition(const Relation& r, const Measure& mu, const Measure& nu,
                                   std::size_t cap) {
  return detail::with_subset_scan(r, mu, nu, cap, [](const auto& s) {
    return s.all_subsets([&](detail::SubsetMask x) {
      if ((s.future(x) & ~x) != 0) return true;
      return s.mu_of(x) <= s.nu_of(x);
    });
  });
}

bool check_past_closed_condition(const Relation& r, const Measure& mu, const Measure& nu,
                                 std::size_t cap) {
  return detail::with_subset_scan(r, mu, nu, cap, [](const auto& s) {
    return s.all_subsets([&](detail::SubsetMask y) {
      if ((s.past(y) & ~y) != 0) return true;
      return s.mu_of(y) >= s.nu_of(y);
    });
  });
}

EquivalenceReport equivalence_audit(const Relation& r, const Measure& mu, const Measure& nu,
                                    std::size_t cap) {
  require_same_size(r, mu, nu);
  if (!is_preorder(r)) {
    throw ValidationError("equivalence audit requires a reflexive and transitive relation");
  }
  if (r.ground_size() > cap) throw CapacityError(r.ground_size(), cap);
  EquivalenceReport report;
  report.coupling = relate(r, mu, nu).related;
  report.compact = check_compact_condition(r, mu, nu, cap);
  report.future_closed = check_future_closed_condition(r, mu, nu, cap);
  report.past_compact = check_past_compact_condition(r, mu, nu, cap);
  report.past_closed = check_past_closed_condition(r, mu, nu, cap);
  return report;
}

}  // namespace kcausal
