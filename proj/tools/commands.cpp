#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kcausal/audit.hpp"
#include "kcausal/errors.hpp"
#include "kcausal/io.hpp"
#include "kcausal/models.hpp"
#include "kcausal/time_functions.hpp"
#include "kcausal/transport.hpp"

namespace kcausal::cli {

namespace {

using Json = nlohmann::ordered_json;

void emit(std::ostream& out, const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    io::write_file(path, contents);
  }
}

Json set_json(const EventSet& s) {
  Json j = Json::array();
  for (Event p : s.members()) j.push_back(p);
  return j;
}

std::string set_text(const EventSet& s) {
  std::string text = "{";
  bool first = true;
  for (Event p : s.members()) {
    if (!first) text += ",";
    text += std::to_string(p);
    first = false;
  }
  return text + "}";
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int cmd_closure(const GlobalOptions&, const ClosureArgs& a, std::ostream& out) {
  const CausalGround ground = io::parse_ground(io::read_file(a.ground));
  emit(out, a.out, io::write_relation(k_plus(ground)));
  return kSuccess;
}

int cmd_relate(const GlobalOptions& g, const RelateArgs& a, std::ostream& out) {
  const Relation r = io::parse_relation(io::read_file(a.relation));
  const Measure mu = io::parse_measure(io::read_file(a.mu));
  const Measure nu = io::parse_measure(io::read_file(a.nu));
  if (mu.size() != r.ground_size() || nu.size() != r.ground_size()) {
    throw ValidationError("relation has n=" + std::to_string(r.ground_size()) +
                          " but measures have n=" + std::to_string(mu.size()) + " and n=" +
                          std::to_string(nu.size()));
  }

  const RelatednessVerdict verdict = relate(r, mu, nu);
  if (!verdict_is_sound(r, mu, nu, verdict)) {
    throw std::logic_error("verdict failed its own soundness check");
  }
  std::optional<bool> oracle;
  if (g.oracle) oracle = oracle_relate(r, mu, nu);

  // The set conditions need a preorder and an enumerable ground.
  std::optional<EquivalenceReport> conditions;
  if (is_preorder(r) && r.ground_size() <= kDefaultEnumerationCap) {
    conditions = equivalence_audit(r, mu, nu);
  }

  const bool disagreement =
      (oracle && *oracle != verdict.related) || (conditions && !conditions->all_agree());

  if (g.machine) {
    Json j;
    j["related"] = verdict.related;
    j["n"] = r.ground_size();
    if (conditions) {
      j["conditions"] = {{"coupling", conditions->coupling},
                         {"compact", conditions->compact},
                         {"future_closed", conditions->future_closed},
                         {"past_compact", conditions->past_compact},
                         {"past_closed", conditions->past_closed}};
    } else {
      j["conditions"] = nullptr;
    }
    j["witness"] = verdict.witness ? Json::parse(io::write_coupling(*verdict.witness)) : Json();
    j["certificate"] = verdict.certificate ? set_json(*verdict.certificate) : Json();
    j["oracle"] = oracle ? Json(*oracle) : Json();
    out << j.dump() << "\n";
  } else {
    out << std::boolalpha << "related: " << verdict.related << "\n";
    if (conditions) {
      out << "conditions:\n"
          << "  coupling: " << conditions->coupling << "\n"
          << "  compact: " << conditions->compact << "\n"
          << "  future_closed: " << conditions->future_closed << "\n"
          << "  past_compact: " << conditions->past_compact << "\n"
          << "  past_closed: " << conditions->past_closed << "\n";
    } else {
      out << "conditions: skipped (relation is not a preorder or n > "
          << kDefaultEnumerationCap << ")\n";
    }
    if (verdict.witness) out << "witness: " << io::write_coupling(*verdict.witness);
    if (verdict.certificate) {
      const EventSet& b = *verdict.certificate;
      out << "certificate: " << set_text(b) << "\n"
          << "  mu(B) = " << format_rational(measure_of(mu, b)) << "\n"
          << "  nu(R+(B)) = " << format_rational(measure_of(nu, future_set(r, b))) << "\n";
    }
    if (oracle) {
      out << "oracle: " << (*oracle ? "true" : "false")
          << (*oracle == verdict.related ? " (agrees)" : " (DISAGREES)") << "\n";
    }
  }
  if (disagreement) return kInvariantViolation;
  return verdict.related ? kSuccess : kNegative;
}

int cmd_audit(const GlobalOptions& g, const AuditArgs& a, std::ostream& out) {
  const auto suite = parse_audit_suite(a.suite);
  if (!suite) throw ValidationError("unknown audit suite '" + a.suite + "'");
  AuditOptions options;
  options.suite = *suite;
  options.trials = a.trials;
  options.max_n = g.max_n;
  options.seed = g.seed;
  options.cyclic = a.cyclic;
  options.battery_samples = a.battery_samples;
  options.phi_samples = a.phi_samples;
  if (a.cyclic && *suite != AuditSuite::Antisymmetry) {
    throw ValidationError("--cyclic applies to the antisym suite only");
  }
  const AuditReport report = run_audit(options);
  emit(out, a.out, format_report(report, g.machine));
  return report.ok() ? kSuccess : kNegative;
}

int cmd_gen(const GlobalOptions& g, const GenArgs& a, std::ostream& out) {
  if (a.n == 0) throw ValidationError("n must be at least 1");
  if (a.kind == "dag") {
    if (!(a.density >= 0.0 && a.density <= 1.0)) {
      throw ValidationError("density must lie in [0, 1]");
    }
    emit(out, a.out, io::write_relation(gen_random_dag(a.n, a.density, g.seed).base()));
  } else if (a.kind == "cyclic") {
    if (a.n < 2) throw ValidationError("a cyclic ground needs n >= 2");
    emit(out, a.out, io::write_relation(gen_cyclic(a.n, g.seed).base()));
  } else if (a.kind == "chain") {
    emit(out, a.out, io::write_relation(chain_ground(a.n).base()));
  } else if (a.kind == "antichain") {
    emit(out, a.out, io::write_relation(antichain_ground(a.n).base()));
  } else if (a.kind == "minkowski") {
    const MinkowskiSample sample = gen_minkowski(a.n, g.seed);
    emit(out, a.out, io::write_relation(sample.ground.base()));
    if (!a.coords.empty()) io::write_file(a.coords, io::write_minkowski_points(sample));
  } else if (a.kind == "measure") {
    const std::size_t support = a.support == 0 ? a.n : a.support;
    if (support > a.n) throw ValidationError("support larger than n");
    emit(out, a.out, io::write_measure(gen_measure(a.n, support, g.seed, a.uniform)));
  } else {
    throw ValidationError("unknown generator '" + a.kind +
                          "' (dag, cyclic, chain, antichain, minkowski, measure)");
  }
  return kSuccess;
}

int cmd_demo_smoothing(const GlobalOptions& g, const SmoothingArgs& a, std::ostream& out) {
  const CausalGround ground = io::parse_ground(io::read_file(a.ground));
  const MultiTimeFamily family =
      MultiTimeFamily::from(io::parse_family(io::read_file(a.family), ground));
  EventSet c(ground.size());
  for (std::size_t p : a.c) c.insert(p);

  const std::vector<double> values = t_kl_indicator_demo(family.functions(), c, {a.k, a.l});
  const EventSet exact = future_set(family.ordering(), c);

  double worst = 0.0;
  Json rows = Json::array();
  std::ostringstream table;
  table << "event\tT_kl\tindicator\t|difference|\n";
  for (Event p = 0; p < ground.size(); ++p) {
    const int indicator = exact.contains(p) ? 1 : 0;
    const double diff = std::abs(values[p] - indicator);
    worst = std::max(worst, diff);
    table << p << "\t" << format_double(values[p]) << "\t" << indicator << "\t"
          << format_double(diff) << "\n";
    rows.push_back({{"event", p}, {"T_kl", values[p]}, {"indicator", indicator},
                    {"difference", diff}});
  }
  if (g.machine) {
    Json j;
    j["k"] = a.k;
    j["l"] = a.l;
    j["c"] = set_json(c);
    j["rows"] = rows;
    j["max_difference"] = worst;
    out << j.dump() << "\n";
  } else {
    out << "k = " << a.k << ", l = " << a.l << ", C = " << set_text(c) << "\n"
        << table.str() << "max |difference|: " << format_double(worst) << "\n";
  }
  return kSuccess;
}

int cmd_timefns(const GlobalOptions&, const TimefnsArgs& a, std::ostream& out) {
  const CausalGround ground = io::parse_ground(io::read_file(a.ground));
  const MultiTimeFamily family = build_separating_family(ground);
  emit(out, a.out, io::write_family(family.functions()));
  return kSuccess;
}

}  // namespace kcausal::cli
