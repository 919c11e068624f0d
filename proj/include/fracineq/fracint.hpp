#pragma once

#include "fracineq/quad.hpp"

namespace fracineq::fracint {

// Fractional order alpha > 0 (construction-validated).
struct FracOrder {
  double alpha;

  explicit FracOrder(double a);
};

// Left-sided Riemann-Liouville integral of order alpha anchored at `base`:
//   (1 / Gamma(alpha)) * integral_base^x (x - t)^(alpha - 1) f(t) dt,
// requires x > base. The kernel singularity at t = x is absorbed as a
// right_power quadrature weight. If err_estimate is non-null the scaled
// quadrature error estimate is accumulated into it.
double rl_left(const quad::Integrand& f, double base, FracOrder order, double x,
               double tol = quad::kDefaultTol, double* err_estimate = nullptr);

// Right-sided Riemann-Liouville integral anchored at `top`:
//   (1 / Gamma(alpha)) * integral_x^top (t - x)^(alpha - 1) f(t) dt,
// requires x < top; mirror image of rl_left (left_power weight at t = x).
double rl_right(const quad::Integrand& f, double top, FracOrder order, double x,
                double tol = quad::kDefaultTol, double* err_estimate = nullptr);

// Midpoint-anchored operator pair evaluated at the endpoints of iv with
// mid = (a + b) / 2:
//   (1 / Gamma(alpha)) * [ integral_a^mid (t - a)^(alpha - 1) h(t) dt
//                        + integral_mid^b (b - t)^(alpha - 1) h(t) dt ].
// Note both kernels are anchored at the *outer* endpoints, so neither
// piece is singular (alpha >= 1) or both are integrably singular at the
// outer ends (alpha < 1); the midpoint itself is always regular.
double midpoint_pair(const quad::Integrand& h, quad::Interval iv, FracOrder order,
                     double tol = quad::kDefaultTol, double* err_estimate = nullptr);

}  // namespace fracineq::fracint

// Hoisted for convenience: the module's names are also visible directly
// under fracineq::.
namespace fracineq {
using fracint::FracOrder;
using fracint::midpoint_pair;
using fracint::rl_left;
using fracint::rl_right;
}  // namespace fracineq
