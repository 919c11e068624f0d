#include "fracineq/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "fracineq/quad.hpp"

namespace fracineq::specfun {

namespace {

// Gamma(x) stays inside double range up to ~171.624.
constexpr double kGammaOverflow = 171.624;

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) {  // also rejects NaN
    throw std::domain_error(std::string(who) + ": argument must be positive");
  }
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  if (x > kGammaOverflow) {
    throw std::overflow_error("gamma_fn: result exceeds double range");
  }
  return std::tgamma(x);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return std::lgamma(x);
}

double beta_fn(double a, double b) {
  require_positive(a, "beta_fn");
  require_positive(b, "beta_fn");
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

BetaArgs::BetaArgs(double x_, double alpha_, double beta_)
    : x(x_), alpha(alpha_), beta(beta_) {
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error("BetaArgs: x must lie in [0, 1]");
  }
  require_positive(alpha, "BetaArgs");
  require_positive(beta, "BetaArgs");
}

double incomplete_beta(const BetaArgs& args) {
  if (args.x == 0.0) {
    return 0.0;
  }

  // Split at x/2. On [0, x/2] the factor t^(alpha-1) is absorbed as a
  // left-endpoint quadrature weight, so a potential singularity at 0 is
  // handled exactly; (1-t)^(beta-1) stays smooth there. On [x/2, x] the
  // t-factor is smooth; for x = 1 the (1-t)^(beta-1) factor is absorbed
  // as the right-endpoint weight, otherwise the whole integrand is
  // regular.
  constexpr double tol = 5e-14;
  const double split = 0.5 * args.x;
  const double am1 = args.alpha - 1.0;
  const double bm1 = args.beta - 1.0;

  const quad::QuadResult lo = quad::integrate_weighted(
      [bm1](double t) { return std::pow(1.0 - t, bm1); },
      quad::Interval(0.0, split), quad::EndpointWeight::left_power(am1), tol);

  quad::QuadResult hi;
  if (args.x == 1.0) {
    hi = quad::integrate_weighted(
        [am1](double t) { return std::pow(t, am1); },
        quad::Interval(split, 1.0), quad::EndpointWeight::right_power(bm1), tol);
  } else {
    hi = quad::integrate(
        [am1, bm1](double t) { return std::pow(t, am1) * std::pow(1.0 - t, bm1); },
        quad::Interval(split, args.x), tol);
  }
  return lo.value + hi.value;
}

}  // namespace fracineq::specfun
