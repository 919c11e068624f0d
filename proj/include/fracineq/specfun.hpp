#pragma once

namespace fracineq::specfun {

// Euler gamma function for x > 0. Throws std::domain_error for x <= 0 or
// NaN, std::overflow_error once the result would exceed double range
// (x > ~171.62).
double gamma_fn(double x);

// log(Gamma(x)) for x > 0; same domain policy as gamma_fn but never
// overflows for any representable positive x.
double log_gamma(double x);

// Complete Euler beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b),
// computed in log space for stability. Requires a > 0 and b > 0.
double beta_fn(double a, double b);

// Argument bundle for the (non-normalized) incomplete beta integral
//   B_x(alpha, beta) = integral_0^x t^(alpha-1) (1-t)^(beta-1) dt.
// Construction enforces 0 <= x <= 1, alpha > 0, beta > 0 and throws
// std::domain_error otherwise.
struct BetaArgs {
  double x;
  double alpha;
  double beta;

  BetaArgs(double x_, double alpha_, double beta_);
};

// Non-normalized incomplete beta via singularity-aware quadrature: the
// integral is split at x/2 and each endpoint power factor is absorbed as
// an exact quadrature weight, so both ends are handled without ever
// evaluating a singular integrand.
double incomplete_beta(const BetaArgs& args);

}  // namespace fracineq::specfun

// Hoisted for convenience: the module's names are also visible directly
// under fracineq::.
namespace fracineq {
using specfun::beta_fn;
using specfun::BetaArgs;
using specfun::gamma_fn;
using specfun::incomplete_beta;
using specfun::log_gamma;
}  // namespace fracineq
