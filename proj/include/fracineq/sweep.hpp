#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracineq/ineq.hpp"
#include "fracineq/quad.hpp"

namespace fracineq::harness {

enum class CheckKind { identity, sandwiches, bounds, reductions };
enum class OutputFormat { csv, json };

const char* to_string(CheckKind check);
const char* to_string(OutputFormat format);

// Raised for malformed config files, unknown keys/labels, or invalid
// values; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::vector<quad::Interval> intervals;
  std::vector<double> alphas;
  std::vector<double> s_values;
  std::vector<double> q_values;
  std::vector<std::string> function_labels;
  std::vector<std::string> weight_labels;
  std::vector<CheckKind> checks;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::string output_path;  // empty = no report file
  OutputFormat format = OutputFormat::csv;

  // Test-only fault injection: scales every bound-check RHS before the
  // holds comparison. 1.0 (the default) leaves results untouched; the
  // fail fixture uses it to prove the gate trips.
  double inject_rhs_scale = 1.0;
};

// Flat "key = value" config file; '#' starts a comment, blank lines are
// skipped, unknown or repeated keys are errors. Lists are comma-separated;
// intervals are "lo,hi" pairs separated by ';'.
SweepConfig parse_config(const std::string& path);
SweepConfig parse_config_text(std::istream& in, const std::string& origin);

struct Summary {
  long cases = 0;
  long passes = 0;
  long failures = 0;   // certified cases whose assertion failed
  long warnings = 0;   // cases whose hypothesis certification failed
  double worst_ratio = 0.0;          // max lhs/rhs over certified cases
  double max_identity_residual = 0.0;
};

// Runs the cross product of parameters for every enabled check, appending
// one InequalityReport per case to rows (ordered by case_id). Throws
// ConfigError for unresolvable labels or empty required lists.
Summary run_sweep(const SweepConfig& config, std::vector<ineq::InequalityReport>& rows);

// Serializes rows to path (CSV columns: case_id, check, theorem, a, b,
// alpha, s, q, f_label, g_label, lhs, rhs, slack, ratio, holds,
// quad_error; JSON: array of objects, same keys). Numbers carry 17
// significant digits; absent parameters are "nan" (CSV) / null (JSON).
// Throws std::invalid_argument for empty rows, std::runtime_error on I/O
// failure.
void emit_report(const std::vector<ineq::InequalityReport>& rows, OutputFormat format,
                 const std::string& path);

void print_summary(std::ostream& out, const Summary& summary);

}  // namespace fracineq::harness
