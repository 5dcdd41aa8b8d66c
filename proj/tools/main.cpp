#include <iostream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "commands.hpp"
#include "kcausal/errors.hpp"

using namespace kcausal;
using namespace kcausal::cli;

int main(int argc, char** argv) {
  CLI::App app{"Causal precedence of probability measures on finite causal structures"};
  app.name("kcausal");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  std::string format = "text";
  app.add_option("--seed", global.seed, "Seed for generators and audits");
  app.add_flag("--oracle", global.oracle, "Also decide by subset enumeration and compare");
  app.add_option("--max-n", global.max_n, "Largest ground size used by audits")
      ->check(CLI::Range(1, 12));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  ClosureArgs closure;
  auto* closure_cmd = app.add_subcommand("closure", "Write K+ of a ground file");
  closure_cmd->add_option("ground", closure.ground, "Ground file")->required();
  closure_cmd->add_option("-o,--out", closure.out, "Output file (default stdout)");

  RelateArgs relate_args;
  auto* relate_cmd = app.add_subcommand("relate", "Decide mu <=_R nu by max flow");
  relate_cmd->add_option("relation", relate_args.relation, "Relation file")->required();
  relate_cmd->add_option("mu", relate_args.mu, "Measure file for mu")->required();
  relate_cmd->add_option("nu", relate_args.nu, "Measure file for nu")->required();

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Randomized equivalence audit");
  audit_cmd->add_option("suite", audit.suite, "main, timefns, multitime, antisym or equality")
      ->required();
  audit_cmd->add_option("--trials", audit.trials, "Number of trials")->check(CLI::PositiveNumber);
  audit_cmd->add_flag("--cyclic", audit.cyclic, "antisym: use cyclic grounds");
  audit_cmd->add_option("--battery", audit.battery_samples,
                        "timefns: random monotone functions per trial");
  audit_cmd->add_option("--phi-samples", audit.phi_samples, "multitime: sampler trials");
  audit_cmd->add_option("-o,--out", audit.out, "Report file (default stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate grounds and measures");
  gen_cmd->add_option("kind", gen.kind, "dag, cyclic, chain, antichain, minkowski or measure")
      ->required();
  gen_cmd->add_option("-n", gen.n, "Ground size");
  gen_cmd->add_option("--density", gen.density, "dag: edge probability");
  gen_cmd->add_option("--support", gen.support, "measure: support size (default n)");
  gen_cmd->add_flag("--uniform", gen.uniform, "measure: equal weights on the support");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--coords", gen.coords, "minkowski: write point coordinates here");

  SmoothingArgs smoothing;
  auto* demo_cmd = app.add_subcommand("demo-smoothing",
                                      "Compare the smoothed indicator with the exact one");
  demo_cmd->add_option("ground", smoothing.ground, "Ground file")->required();
  demo_cmd->add_option("family", smoothing.family, "Time-function family file")->required();
  demo_cmd->add_option("--c", smoothing.c, "Events of C, comma separated")
      ->delimiter(',')
      ->required();
  demo_cmd->add_option("-k", smoothing.k, "Inner sharpness")->check(CLI::PositiveNumber);
  demo_cmd->add_option("-l", smoothing.l, "Outer sharpness")->check(CLI::PositiveNumber);

  TimefnsArgs timefns;
  auto* timefns_cmd = app.add_subcommand("timefns", "Write a separating family of time functions");
  timefns_cmd->add_option("ground", timefns.ground, "Ground file")->required();
  timefns_cmd->add_option("-o,--out", timefns.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }
  global.machine = format == "machine";

  try {
    if (*closure_cmd) return cmd_closure(global, closure, std::cout);
    if (*relate_cmd) return cmd_relate(global, relate_args, std::cout);
    if (*audit_cmd) return cmd_audit(global, audit, std::cout);
    if (*gen_cmd) return cmd_gen(global, gen, std::cout);
    if (*demo_cmd) return cmd_demo_smoothing(global, smoothing, std::cout);
    if (*timefns_cmd) return cmd_timefns(global, timefns, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "kcausal: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotStablyCausal& e) {
    std::cerr << "kcausal: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    std::cerr << "kcausal: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "kcausal: invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "kcausal: internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::exception& e) {
    std::cerr << "kcausal: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
