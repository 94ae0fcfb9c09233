// Command-line front end: single computations, invariant checks, table reproduction.

#include <CLI11.hpp>
#include <iostream>

#include "gcrit/config.hpp"
#include "gcrit/error.hpp"
#include "gcrit/run.hpp"
#include "gcrit/sandwich.hpp"
#include "gcrit/tables.hpp"

namespace {

enum ExitCode { kOk = 0, kInvariantFailure = 1, kConfigError = 2, kNoConvergence = 3 };

struct ComputeArgs {
  std::string config;
  std::string potential;
  double R = 1.0;
  double alpha = 1.0;
  double shell_width = 1e-3;
  std::string grid;
  std::string ell;
  std::string methods;
  std::string format;
  int digits = 6;
  bool sandwich = false;
};

gcrit::RunConfig resolve(const ComputeArgs& a, const CLI::App& cmd) {
  gcrit::RunConfig cfg;
  if (!a.config.empty()) cfg = gcrit::load_run_config(a.config);
  auto given = [&](const char* name) { return cmd.count(name) > 0; };

  auto& pot = cfg.potential;
  if (given("--potential")) {
    pot.kind = gcrit::parse_potential_kind(a.potential);
    if (!given("--methods") && a.config.empty()) cfg.methods.clear();
  } else if (a.config.empty()) {
    throw gcrit::ConfigError("either --config or --potential is required", "potential");
  }
  if (given("--R")) pot.R = a.R;
  if (given("--alpha")) pot.alpha = a.alpha;
  if (given("--shell-width")) pot.width = a.shell_width;
  if (given("--grid")) pot.grid_path = a.grid;
  if (given("--ell")) cfg.ells = gcrit::parse_ells(a.ell);
  if (given("--methods")) cfg.methods = gcrit::parse_methods(a.methods, pot.kind);
  if (cfg.methods.empty()) cfg.methods = gcrit::all_methods(pot.kind);
  if (given("--format")) cfg.format = gcrit::parse_output_format(a.format);
  if (given("--digits")) cfg.digits = a.digits;
  pot.build();
  cfg.validate();
  return cfg;
}

int compute(const ComputeArgs& a, const CLI::App& cmd) {
  const auto cfg = resolve(a, cmd);
  if (a.sandwich) {
    const auto pot = cfg.potential.build();
    std::vector<gcrit::SandwichReport> reports;
    for (int l : cfg.ells) reports.push_back(gcrit::sandwich(pot, gcrit::AngularMomentum(l), cfg.quadrature));
    gcrit::write_sandwich(std::cout, reports, cfg.format, cfg.digits);
    return kOk;
  }
  gcrit::write_records(std::cout, gcrit::run(cfg), cfg.format, cfg.digits);
  return kOk;
}

int reproduce(int table, const std::string& format, int digits) {
  const auto fmt = gcrit::parse_output_format(format);
  const auto artifact = gcrit::reproduce_table(table);
  std::cout << (fmt == gcrit::OutputFormat::Csv ? gcrit::render_csv(artifact, digits)
                                                : gcrit::render_markdown(artifact, digits));
  return artifact.pass ? kOk : kInvariantFailure;
}

int check(const std::string& config, const std::string& ell) {
  std::vector<gcrit::PotentialSpec> specs = gcrit::builtin_specs();
  std::vector<int> ells{0, 1, 2, 3, 4, 5};
  gcrit::QuadratureConfig quad;
  if (!config.empty()) {
    const auto cfg = gcrit::load_run_config(config);
    specs = {cfg.potential};
    ells = cfg.ells;
    quad = cfg.quadrature;
  }
  if (!ell.empty()) ells = gcrit::parse_ells(ell);

  int failures = 0;
  for (const auto& o : gcrit::check_invariants(specs, ells, quad)) {
    std::cout << (o.passed ? "PASS " : "FAIL ") << o.name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << '\n';
    failures += o.passed ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all invariants hold\n" : std::to_string(failures) + " invariant(s) failed\n");
  return failures == 0 ? kOk : kInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the critical coupling of attractive central potentials"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate bounds for one potential");
  compute_cmd->add_option("--config", ca.config, "INI run configuration")->check(CLI::ExistingFile);
  compute_cmd->add_option("--potential", ca.potential, "square_well | exponential | yukawa | stis | shell | tabulated");
  compute_cmd->add_option("--R", ca.R, "Range parameter");
  compute_cmd->add_option("--alpha", ca.alpha, "STIS cutoff multiplier");
  compute_cmd->add_option("--shell-width", ca.shell_width, "Shell width");
  compute_cmd->add_option("--grid", ca.grid, "Two-column CSV for tabulated potentials");
  compute_cmd->add_option("--ell", ca.ell, "Comma-separated list, ranges like 0-5 allowed");
  compute_cmd->add_option("--methods", ca.methods, "Comma-separated method names or 'all'");
  compute_cmd->add_option("--format", ca.format, "csv | md");
  compute_cmd->add_option("--digits", ca.digits, "Significant digits");
  compute_cmd->add_flag("--sandwich", ca.sandwich, "One wide row per ell with both exact oracles");

  int table = 0;
  std::string table_format = "csv";
  int table_digits = 6;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute a published table and compare");
  reproduce_cmd->add_option("--table", table, "Table number")->required()->check(CLI::Range(1, 4));
  reproduce_cmd->add_option("--format", table_format, "csv | md");
  reproduce_cmd->add_option("--digits", table_digits, "Significant digits");

  std::string check_config, check_ell;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant suite");
  check_cmd->add_option("--config", check_config, "INI run configuration")->check(CLI::ExistingFile);
  check_cmd->add_option("--ell", check_ell, "Override the ell list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*compute_cmd) return compute(ca, *compute_cmd);
    if (*reproduce_cmd) return reproduce(table, table_format, table_digits);
    return check(check_config, check_ell);
  } catch (const gcrit::ConfigError& e) {
    std::cerr << "configuration error";
    if (!e.field().empty()) std::cerr << " [" << e.field() << "]";
    std::cerr << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const gcrit::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const gcrit::DegeneratePotentialError& e) {
    std::cerr << "degenerate potential: " << e.what() << '\n';
    return kConfigError;
  } catch (const gcrit::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNoConvergence;
  }
}
