// hyperspec: principal eigenpairs of general hypergraphs and audits of the
// extreme-entry bounds.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyperspec/commands.hpp"

namespace {

struct SolverFlags {
  double tol = 1e-10;
  std::size_t max_iter = 200000;
  std::optional<double> shift;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", tol, "Collatz bracket gap at which iteration stops")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", max_iter, "iteration budget");
    cmd->add_option("--shift", shift, "shift added as shift * x^[k-1] (default: max degree)")
        ->check(CLI::NonNegativeNumber);
  }

  hyperspec::SolverConfig config() const {
    hyperspec::SolverConfig cfg;
    cfg.tolerance = tol;
    cfg.max_iterations = max_iter;
    cfg.shift = shift;
    return cfg;
  }
};

const std::map<std::string, hyperspec::OutputFormat> formats = {
    {"json", hyperspec::OutputFormat::json}, {"table", hyperspec::OutputFormat::table}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal eigenpairs of general hypergraphs and bound audits"};
  app.require_subcommand(1);

  std::string path;
  std::string family;
  hyperspec::OutputFormat format = hyperspec::OutputFormat::json;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t count = 500;

  SolverFlags analyze_flags;
  auto* analyze = app.add_subcommand("analyze", "solve and audit one instance");
  analyze->add_option("path", path, "instance file")->required();
  analyze_flags.attach(analyze);
  analyze->add_option("--format", format, "json or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* generate = app.add_subcommand(
      "generate", "print a family instance: star:n | path:n | complete:n:k | power:<base>:s:r");
  generate->add_option("family", family, "family spec")->required();

  auto* oracle = app.add_subcommand("oracle", "cross-check the operator against dense and "
                                              "enumerated evaluation");
  oracle->add_option("path", path, "instance file")->required();
  oracle->add_option("--trials", trials, "random vectors to test");
  oracle->add_option("--seed", seed, "random seed");
  oracle->add_option("--format", format, "json or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  SolverFlags audit_flags;
  auto* audit = app.add_subcommand("audit-suite", "run fixed families and random instances");
  audit->add_option("--seed", seed, "random seed");
  audit->add_option("--count", count, "number of random instances");
  audit_flags.attach(audit);
  audit->add_option("--format", format, "json or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hyperspec::exit_error;
  }

  if (*analyze)
    return hyperspec::cmd_analyze(path, analyze_flags.config(), format, std::cout, std::cerr);
  if (*generate) return hyperspec::cmd_generate(family, std::cout, std::cerr);
  if (*oracle) return hyperspec::cmd_oracle(path, trials, seed, format, std::cout, std::cerr);
  if (*audit)
    return hyperspec::cmd_audit_suite(seed, count, audit_flags.config(), format, std::cout,
                                      std::cerr);
  return hyperspec::exit_error;
}
