#include "kcausal/audit.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kcausal/errors.hpp"
#include "kcausal/models.hpp"
#include "kcausal/time_functions.hpp"
#include "kcausal/transport.hpp"

namespace kcausal {

namespace {

using Json = nlohmann::ordered_json;

struct TrialContext {
  std::size_t index;
  AuditReport& report;
  TrialRecord& record;

  void check(const std::string& name, bool held, const std::string& detail = {}) {
    if (held) {
      ++report.agreement[name];
      return;
    }
    report.agreement.try_emplace(name, 0);
    record.ok = false;
    report.discrepancies.push_back("trial " + std::to_string(index) + ": " + name +
                                   (detail.empty() ? "" : " (" + detail + ")"));
  }
};

std::pair<Measure, Measure> measure_pair(const Relation& r, std::mt19937_64& rng) {
  const std::size_t n = r.ground_size();
  std::uniform_int_distribution<std::size_t> support(1, n);
  const Measure mu = gen_measure(n, support(rng), rng());
  const int mode = std::uniform_int_distribution<int>(0, 3)(rng);
  if (mode == 0) return {mu, mu};
  if (mode == 1) return {mu, gen_measure(n, support(rng), rng())};
  return {mu, gen_related_measure(r, mu, rng())};
}

void equality_trial(TrialContext& t, const CausalGround& g, std::mt19937_64& rng) {
  const std::size_t n = g.size();
  const Relation diag = diagonal(n);
  const auto [mu, nu] = measure_pair(diag, rng);
  // At least half of the pairs share an identical measure.
  const Measure nu2 = rng() % 2 == 0 ? mu : nu;
  const auto verdict = relate(diag, mu, nu2);
  t.record.related = verdict.related;
  t.check("equality", verdict.related == (mu == nu2));
  t.check("soundness", verdict_is_sound(diag, mu, nu2, verdict));
  t.check("oracle", oracle_relate(diag, mu, nu2) == verdict.related);
}

void main_trial(TrialContext& t, const CausalGround& g, std::mt19937_64& rng) {
  const Relation k = k_plus(g);
  const auto [mu, nu] = measure_pair(k, rng);
  const auto verdict = relate(k, mu, nu);
  const auto report = equivalence_audit(k, mu, nu);
  t.record.related = verdict.related;
  t.check("five_way", report.all_agree());
  t.check("oracle", oracle_relate(k, mu, nu) == verdict.related);
  t.check("soundness", verdict_is_sound(k, mu, nu, verdict));
}

void timefns_trial(TrialContext& t, const CausalGround& g, std::mt19937_64& rng,
                   const AuditOptions& options) {
  const Relation k = k_plus(g);
  const auto [mu, nu] = measure_pair(k, rng);
  const bool related = relate(k, mu, nu).related;
  t.record.related = related;

  const MultiTimeFamily family = build_separating_family(g);
  std::vector<TimeFunction> all_times(family.functions().begin(), family.functions().end());
  for (auto& f : upset_time_functions(g)) all_times.push_back(std::move(f));

  t.check("family_reproduces_k_plus", family.ordering() == k);
  t.check("threshold_open",
          check_threshold_condition(all_times, mu, nu, HalfLine::Open) == related);
  t.check("threshold_closed",
          check_threshold_condition(all_times, mu, nu, HalfLine::Closed) == related);
  IntegralBattery battery;
  battery.random_samples = options.battery_samples;
  battery.seed = rng();
  t.check("integral", check_integral_condition(family.functions(), mu, nu, battery) == related);
  if (related) {
    t.check("family_threshold_necessity",
            check_threshold_condition(family.functions(), mu, nu, HalfLine::Open));
  }
  const PrefixReport prefix = prefix_monotonicity_check(g, family, mu, nu);
  t.check("prefix", prefix.non_increasing && prefix.matches_k_plus);
}

void multitime_trial(TrialContext& t, const CausalGround& g, std::mt19937_64& rng,
                     const AuditOptions& options) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::vector<TimeFunction> fns;
  for (std::size_t i = 0; i < size; ++i) fns.push_back(gen_time_function(g, rng()));
  const MultiTimeFamily family = MultiTimeFamily::from(fns);
  const Relation& order = family.ordering();
  const auto [mu, nu] = measure_pair(order, rng);
  const auto report = equivalence_audit(order, mu, nu);
  t.record.related = report.coupling;
  t.check("five_way", report.all_agree());
  t.check("k_plus_contained", k_plus(g).is_subset_of(order));
  if (report.coupling) {
    t.check("phi_sampler", monotone_phi_sampler(family.functions(), mu, nu,
                                                options.phi_samples, rng()));
  }

  // The smoothing device on the separating family of the same ground.
  const MultiTimeFamily separating = build_separating_family(g);
  EventSet c(g.size());
  while (c.empty()) {
    for (Event p = 0; p < g.size(); ++p) {
      if (rng() % 3 == 0) c.insert(p);
    }
  }
  const auto values = t_kl_indicator_demo(separating.functions(), c, {40, 40});
  const EventSet exact = future_set(separating.ordering(), c);
  double worst = 0.0;
  for (Event p = 0; p < g.size(); ++p) {
    worst = std::max(worst, std::abs(values[p] - (exact.contains(p) ? 1.0 : 0.0)));
  }
  t.check("smoothing", worst < 1e-6);
}

void antisym_trial(TrialContext& t, const CausalGround& g, std::mt19937_64& rng) {
  const Relation k = k_plus(g);
  const auto [mu, nu] = measure_pair(k, rng);
  t.check("antisymmetry", antisymmetry_verdict(g, mu, nu));
  const auto forward = relate(k, mu, nu);
  const auto backward = relate(k, nu, mu);
  t.record.related = forward.related && backward.related;
  const auto self = relate(k, mu, mu);
  t.check("diagonal_witness", self.related && mass_on(*self.witness, diagonal(g.size())) == 1);
}

void cyclic_trial(TrialContext& t, std::size_t n, std::mt19937_64& rng) {
  const CausalGround g = gen_cyclic(n, rng());
  const Relation k = k_plus(g);
  bool raised = false;
  try {
    antisymmetry_verdict(g, Measure::uniform(n), Measure::uniform(n));
  } catch (const NotStablyCausal&) {
    raised = true;
  }
  t.check("precondition_error", raised);
  // The ring puts 0 and 1 on a common cycle.
  const Measure mu = Measure::dirac(n, 0);
  const Measure nu = Measure::dirac(n, 1);
  const bool mutual = relate(k, mu, nu).related && relate(k, nu, mu).related;
  t.record.related = mutual;
  t.check("counterexample", mutual && !(mu == nu));
}

}  // namespace

std::optional<AuditSuite> parse_audit_suite(std::string_view name) {
  if (name == "main") return AuditSuite::Main;
  if (name == "timefns") return AuditSuite::TimeFunctions;
  if (name == "multitime") return AuditSuite::MultiTime;
  if (name == "antisym") return AuditSuite::Antisymmetry;
  if (name == "equality") return AuditSuite::Equality;
  return std::nullopt;
}

std::string_view to_string(AuditSuite suite) {
  switch (suite) {
    case AuditSuite::Main: return "main";
    case AuditSuite::TimeFunctions: return "timefns";
    case AuditSuite::MultiTime: return "multitime";
    case AuditSuite::Antisymmetry: return "antisym";
    case AuditSuite::Equality: return "equality";
  }
  return "unknown";
}

AuditReport run_audit(const AuditOptions& options) {
  if (options.trials == 0) throw ValidationError("audit needs at least one trial");
  if (options.max_n == 0 || options.max_n > kAuditMaxGround) {
    throw ValidationError("audit max-n must lie in [1, " + std::to_string(kAuditMaxGround) + "]");
  }
  const auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.trials = options.trials;
  report.cyclic = options.cyclic;

  for (std::size_t i = 0; i < options.trials; ++i) {
    std::mt19937_64 rng(trial_seed(options.seed, i));
    TrialRecord record;
    record.index = i;
    TrialContext ctx{i, report, record};
    try {
      if (options.suite == AuditSuite::Antisymmetry && options.cyclic) {
        record.n = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, options.max_n))(rng);
        record.kind = "cyclic";
        cyclic_trial(ctx, record.n, rng);
      } else {
        const GeneratedGround gg = gen_audit_ground(options.max_n, rng());
        record.n = gg.ground.size();
        record.kind = std::string(to_string(gg.kind));
        switch (options.suite) {
          case AuditSuite::Equality: equality_trial(ctx, gg.ground, rng); break;
          case AuditSuite::Main: main_trial(ctx, gg.ground, rng); break;
          case AuditSuite::TimeFunctions: timefns_trial(ctx, gg.ground, rng, options); break;
          case AuditSuite::MultiTime: multitime_trial(ctx, gg.ground, rng, options); break;
          case AuditSuite::Antisymmetry: antisym_trial(ctx, gg.ground, rng); break;
        }
      }
    } catch (const std::exception& e) {
      record.ok = false;
      report.discrepancies.push_back("trial " + std::to_string(i) + ": error: " + e.what());
    }
    report.min_n = i == 0 ? record.n : std::min(report.min_n, record.n);
    report.max_n = std::max(report.max_n, record.n);
    ++report.instance_kinds[record.kind];
    report.records.push_back(std::move(record));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const AuditReport& report, bool machine) {
  std::ostringstream out;
  auto trial_line = [&](const TrialRecord& r) {
    Json j;
    j["index"] = r.index;
    j["n"] = r.n;
    j["kind"] = r.kind;
    j["related"] = r.related;
    j["ok"] = r.ok;
    return j.dump();
  };
  if (machine) {
    for (const auto& r : report.records) out << trial_line(r) << "\n";
    Json summary;
    summary["suite"] = std::string(to_string(report.suite));
    summary["seed"] = report.seed;
    summary["trials"] = report.trials;
    summary["cyclic"] = report.cyclic;
    summary["min_n"] = report.min_n;
    summary["max_n"] = report.max_n;
    summary["agreement"] = report.agreement;
    summary["discrepancies"] = report.discrepancies;
    summary["wall_seconds"] = report.wall_seconds;
    out << summary.dump() << "\n";
    return out.str();
  }
  out << "audit: " << to_string(report.suite) << (report.cyclic ? " (cyclic grounds)" : "")
      << "\n";
  out << "seed: " << report.seed << "\n";
  out << "trials: " << report.trials << "\n";
  out << "ground sizes: " << report.min_n << ".." << report.max_n << "\n";
  out << "instances:";
  for (const auto& [kind, count] : report.instance_kinds) out << " " << kind << "=" << count;
  out << "\nagreement:\n";
  for (const auto& [name, count] : report.agreement) {
    out << "  " << name << ": " << count << "\n";
  }
  out << "discrepancies: " << report.discrepancies.size() << "\n";
  for (const auto& d : report.discrepancies) out << "  " << d << "\n";
  if (report.cyclic && report.ok()) out << "counterexample regime confirmed\n";
  out << "wall time: " << report.wall_seconds << " s\n";
  for (const auto& r : report.records) out << "TRIAL " << trial_line(r) << "\n";
  return out.str();
}

}  // namespace kcausal
