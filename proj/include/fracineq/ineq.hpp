#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fracineq/fracint.hpp"
#include "fracineq/funcspace.hpp"
#include "fracineq/quad.hpp"

namespace fracineq::ineq {

enum class SandwichKind { HH, FEJER, S_HH, FRAC_HH, FRAC_FEJER };
enum class BoundTheorem { T4, T5, T6, T7, T8, T9 };
enum class ReductionPair { T7_to_T4, T8_to_T5, T9_to_T6 };

const char* to_string(SandwichKind kind);
const char* to_string(BoundTheorem theorem);
const char* to_string(ReductionPair pair);

// Reporting triple for a two-sided inequality; the harness asserts
// left <= middle <= right within tolerance when hypotheses certify.
struct SandwichTriple {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
  SandwichKind kind = SandwichKind::HH;
};

// Parameters identifying a verification case. NaN marks a parameter that
// does not apply to the case (serialized as "nan" / null).
struct CaseParams {
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double s = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  std::string f_label;
  std::string g_label;
};

// One verified assertion. `certified` records whether the case's
// hypotheses passed numeric certification: uncertified cases are
// evaluated and reported but excluded from the pass/fail gate (they
// count as warnings, not failures). It is bookkeeping for the gate and
// is not a report column.
struct InequalityReport {
  std::string case_id;
  std::string check;    // identity | sandwiches | bounds | reductions
  std::string theorem;  // L1, HH_lm, ..., T4..T9, T7_to_T4, ...
  CaseParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double ratio = 0.0;  // lhs / rhs, 0 when both are 0
  bool holds = false;
  double quad_error = 0.0;
  bool certified = true;
};

// The uniform acceptance comparison: lhs <= rhs * (1 + 1e-9) + 1e-12.
bool report_holds(double lhs, double rhs);
double report_ratio(double lhs, double rhs);

// Lemma kernel
//   k(t) =  integral_a^t (u - a)^(alpha-1) g(u) du     for t in [a, mid]
//          -integral_t^b (b - u)^(alpha-1) g(u) du     for t in (mid, b]
// with the left branch taken at t = mid. Throws std::domain_error for t
// outside [a, b].
double kernel_k(double t, quad::Interval iv, fracint::FracOrder order,
                const funcspace::WeightSpec& g, double tol = quad::kDefaultTol);

// | LHS - RHS | for the weighted midpoint identity
//   LHS = f(mid) * midpoint_pair(g) - midpoint_pair(f * g)
//   RHS = (1/Gamma(alpha)) * integral_a^b k(t) f'(t) dt,
// the RHS split at the midpoint so the kernel's branch jump never lands
// inside a quadrature panel. Accumulates quadrature error estimates into
// *quad_err when non-null.
double identity_residual(const funcspace::FunctionSpec& f, const funcspace::WeightSpec& g,
                         quad::Interval iv, fracint::FracOrder order,
                         double tol = quad::kDefaultTol, double* quad_err = nullptr);

// |f(mid) * midpoint_pair(g) - midpoint_pair(f * g)|: the quantity every
// bound theorem controls.
double fejer_midpoint_lhs(const funcspace::FunctionSpec& f, const funcspace::WeightSpec& g,
                          quad::Interval iv, fracint::FracOrder order,
                          double tol = quad::kDefaultTol, double* quad_err = nullptr);

// Evaluates the (left, middle, right) display for the requested kind.
//   HH:          f(mid) <= (1/(b-a)) int f    <= (f(a)+f(b))/2
//   FEJER:       f(mid) int g <= int f g      <= (f(a)+f(b))/2 int g
//   S_HH:        2^(s-1) f(mid) <= (1/(b-a)) int f <= (f(a)+f(b))/(s+1)
//   FRAC_HH:     f(mid) <= Gamma(alpha+1)/(2(b-a)^alpha) [J_a+ f(b) + J_b- f(a)]
//                       <= (f(a)+f(b))/2
//   FRAC_FEJER:  same shape weighted by the endpoint-anchored pair applied to g.
// g is required for the Fejer kinds, order for the fractional kinds, s for
// S_HH (std::invalid_argument when missing). Hypotheses are NOT checked
// here; certification lives in funcspace and the harness.
SandwichTriple sandwich(SandwichKind kind, const funcspace::FunctionSpec& f,
                        const funcspace::WeightSpec* g, quad::Interval iv,
                        std::optional<fracint::FracOrder> order,
                        std::optional<funcspace::SParam> s,
                        double tol = quad::kDefaultTol, double* quad_err = nullptr);

// Closed-form right-hand side of the midpoint-Fejer bound theorems. s is
// required for T7/T8/T9, hq for T5/T6/T8/T9 (std::invalid_argument when
// missing). All coefficients are closed-form (Gamma, incomplete beta at
// fixed high accuracy); tol is accepted for signature uniformity.
double bound_rhs(BoundTheorem theorem, const funcspace::FunctionSpec& f,
                 const funcspace::WeightSpec& g, quad::Interval iv,
                 fracint::FracOrder order, std::optional<funcspace::SParam> s,
                 std::optional<funcspace::HolderPair> hq,
                 double tol = quad::kDefaultTol);

// One audited point of a reduction pair: the s-dependent bound evaluated
// at s = 1 next to its classical counterpart, on the fixed reference case
// f(t) = t, g = 1, [0, 1] (the coefficient ratio does not depend on the
// reference). q is NaN for T7_to_T4 rows.
struct ReductionRow {
  double alpha = 0.0;
  double q = std::numeric_limits<double>::quiet_NaN();
  double new_bound_at_s1 = 0.0;
  double classical_bound = 0.0;
  double relative_difference = 0.0;
};

std::vector<ReductionRow> reduction_audit(ReductionPair pair,
                                          const std::vector<double>& alphas,
                                          const std::vector<double>& q_values);

}  // namespace fracineq::ineq
