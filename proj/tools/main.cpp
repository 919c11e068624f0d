#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracineq/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fracineq: batch verifier for fractional-integral Hermite-Hadamard-Fejer "
      "inequalities over a builtin function/weight catalog"};

  std::string config_path;
  std::string out_path;
  std::string format;
  std::string checks;
  double tol = -1.0;
  long long seed = -1;
  bool quiet = false;

  app.add_option("--config", config_path, "sweep config file (key = value lines)")
      ->required();
  app.add_option("--out", out_path, "report output path (overrides config output_path)");
  app.add_option("--format", format, "report format: csv or json (overrides config)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", tol, "quadrature tolerance (overrides config)");
  app.add_option("--seed", seed, "certification RNG seed (overrides config)");
  app.add_option("--checks", checks,
                 "comma list from identity,sandwiches,bounds,reductions (overrides "
                 "config)");
  app.add_flag("--quiet", quiet, "suppress the summary on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // app.exit prints help or the error text; it returns 0 only for
    // --help/--version, which are not usage errors.
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    fracineq::harness::SweepConfig cfg = fracineq::harness::parse_config(config_path);
    if (!out_path.empty()) {
      cfg.output_path = out_path;
    }
    if (!format.empty()) {
      cfg.format = format == "json" ? fracineq::harness::OutputFormat::json
                                    : fracineq::harness::OutputFormat::csv;
    }
    if (tol > 0.0) {
      cfg.tol = tol;
    }
    if (seed >= 0) {
      cfg.seed = static_cast<std::uint64_t>(seed);
    }
    if (!checks.empty()) {
      // Reuse the config grammar so flag and file accept the same names.
      std::istringstream line("checks = " + checks);
      cfg.checks = fracineq::harness::parse_config_text(line, "--checks").checks;
    }

    std::vector<fracineq::ineq::InequalityReport> rows;
    const fracineq::harness::Summary summary = fracineq::harness::run_sweep(cfg, rows);

    if (!cfg.output_path.empty()) {
      fracineq::harness::emit_report(rows, cfg.format, cfg.output_path);
    }
    if (!quiet) {
      fracineq::harness::print_summary(std::cout, summary);
    }
    return summary.failures > 0 ? kExitVerificationFailure : kExitPass;
  } catch (const fracineq::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
