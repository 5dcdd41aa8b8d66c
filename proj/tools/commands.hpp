#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kcausal::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kInputError = 2,
  kInvariantViolation = 3,
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool oracle = false;
  std::size_t max_n = 10;
  bool machine = false;
};

struct ClosureArgs {
  std::string ground;
  std::string out;
};

struct RelateArgs {
  std::string relation;
  std::string mu;
  std::string nu;
};

struct AuditArgs {
  std::string suite;
  std::size_t trials = 100;
  bool cyclic = false;
  std::size_t battery_samples = 100;
  std::size_t phi_samples = 1000;
  std::string out;
};

struct GenArgs {
  std::string kind;
  std::size_t n = 6;
  double density = 0.3;
  std::size_t support = 0;
  bool uniform = false;
  std::string out;
  std::string coords;
};

struct SmoothingArgs {
  std::string ground;
  std::string family;
  std::vector<std::size_t> c;
  unsigned k = 40;
  unsigned l = 40;
};

struct TimefnsArgs {
  std::string ground;
  std::string out;
};

// Each command writes its report to out and returns the process exit code.
// Library exceptions propagate to the caller.
int cmd_closure(const GlobalOptions& g, const ClosureArgs& a, std::ostream& out);
int cmd_relate(const GlobalOptions& g, const RelateArgs& a, std::ostream& out);
int cmd_audit(const GlobalOptions& g, const AuditArgs& a, std::ostream& out);
int cmd_gen(const GlobalOptions& g, const GenArgs& a, std::ostream& out);
int cmd_demo_smoothing(const GlobalOptions& g, const SmoothingArgs& a, std::ostream& out);
int cmd_timefns(const GlobalOptions& g, const TimefnsArgs& a, std::ostream& out);

}  // namespace kcausal::cli
