#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kcausal {

enum class AuditSuite { Main, TimeFunctions, MultiTime, Antisymmetry, Equality };

std::optional<AuditSuite> parse_audit_suite(std::string_view name);
std::string_view to_string(AuditSuite suite);

struct AuditOptions {
  AuditSuite suite = AuditSuite::Main;
  std::size_t trials = 100;
  std::size_t max_n = 10;
  std::uint64_t seed = 0;
  // Antisymmetry suite only: run on cyclic grounds, where the precondition
  // must fail and a mutual-relatedness counterexample must exist.
  bool cyclic = false;
  std::size_t battery_samples = 100;
  std::size_t phi_samples = 1000;
};

// Largest max_n accepted for the subset-enumeration audits.
inline constexpr std::size_t kAuditMaxGround = 12;

struct TrialRecord {
  std::size_t index = 0;
  std::size_t n = 0;
  std::string kind;
  bool related = false;
  bool ok = true;
};

struct AuditReport {
  AuditSuite suite = AuditSuite::Main;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool cyclic = false;
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::map<std::string, std::size_t> instance_kinds;
  // check name -> number of trials where the check held
  std::map<std::string, std::size_t> agreement;
  std::vector<std::string> discrepancies;
  std::vector<TrialRecord> records;
  double wall_seconds = 0.0;

  bool ok() const noexcept { return discrepancies.empty(); }
};

// Runs the named suite on seeded random instances. Trials are independent and
// each derives its own seed from (options.seed, index). Throws
// ValidationError for trials == 0 or max_n outside [1, kAuditMaxGround].
AuditReport run_audit(const AuditOptions& options);

// Human-readable report with one machine-readable TRIAL line per trial, or
// (machine = true) only JSON lines: one per trial and a final summary.
std::string format_report(const AuditReport& report, bool machine);

}  // namespace kcausal
