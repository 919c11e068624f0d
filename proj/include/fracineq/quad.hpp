#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace fracineq::quad {

using Integrand = std::function<double(double)>;

// Closed bounded interval [a, b] with a < b.
struct Interval {
  double a;
  double b;

  Interval(double lo, double hi);

  double mid() const { return 0.5 * (a + b); }
  double length() const { return b - a; }
};

// Outcome of an adaptive integration: the value, an a-posteriori error
// estimate for it, and how many integrand evaluations were spent.
struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

enum class WeightKind { none, left_power, right_power };

// Endpoint power weight for integrals of the form
//   left_power:  integral of (t - a)^mu * f(t) dt
//   right_power: integral of (b - t)^mu * f(t) dt
// with mu > -1 so the weight stays integrable.
struct EndpointWeight {
  WeightKind kind = WeightKind::none;
  double exponent = 0.0;

  static EndpointWeight none() { return {WeightKind::none, 0.0}; }
  static EndpointWeight left_power(double mu) { return {WeightKind::left_power, mu}; }
  static EndpointWeight right_power(double mu) { return {WeightKind::right_power, mu}; }
};

// Thrown when the evaluation budget (or subdivision depth) is exhausted
// before the requested tolerance is met. Carries the partial result so
// callers can inspect how far the refinement got.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, QuadResult partial)
      : std::runtime_error(what), partial_(partial) {}

  const QuadResult& partial() const { return partial_; }

 private:
  QuadResult partial_;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr long kDefaultBudget = 1000000;

// Globally adaptive Gauss-Kronrod 7/15 integration of f over iv.
// Stops once the accumulated error estimate drops below
// max(tol * |value|, tol); otherwise throws NonConvergence.
QuadResult integrate(const Integrand& f, Interval iv, double tol = kDefaultTol,
                     long max_evaluations = kDefaultBudget);

// Integrates w(t) * f(t) over iv where w is an endpoint power weight.
// The weight singularity (exponent in (-1, 0)) is removed exactly by the
// substitution v = (t - a)^(mu + 1) (mirrored for right_power), so f is
// only ever evaluated inside [a, b] and the integrand handed to the
// adaptive core is weight-free. Throws std::domain_error for
// exponent <= -1.
QuadResult integrate_weighted(const Integrand& f, Interval iv, EndpointWeight w,
                              double tol = kDefaultTol,
                              long max_evaluations = kDefaultBudget);

}  // namespace fracineq::quad

// Hoisted for convenience: the module's names are also visible directly
// under fracineq::.
namespace fracineq {
using quad::EndpointWeight;
using quad::Integrand;
using quad::integrate;
using quad::integrate_weighted;
using quad::Interval;
using quad::kDefaultBudget;
using quad::kDefaultTol;
using quad::NonConvergence;
using quad::QuadResult;
using quad::WeightKind;
}  // namespace fracineq
