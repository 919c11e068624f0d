#include "fracineq/fracint.hpp"

#include <cmath>
#include <stdexcept>

#include "fracineq/specfun.hpp"

namespace fracineq::fracint {

FracOrder::FracOrder(double a) : alpha(a) {
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw std::invalid_argument("FracOrder: alpha must be finite and positive");
  }
}

namespace {

double scaled_weighted(const quad::Integrand& f, quad::Interval iv,
                       quad::EndpointWeight w, double alpha, double tol,
                       double* err_estimate) {
  const quad::QuadResult r = quad::integrate_weighted(f, iv, w, tol);
  const double scale = 1.0 / specfun::gamma_fn(alpha);
  if (err_estimate != nullptr) {
    *err_estimate += scale * r.error_estimate;
  }
  return scale * r.value;
}

}  // namespace

double rl_left(const quad::Integrand& f, double base, FracOrder order, double x,
               double tol, double* err_estimate) {
  if (!(x > base)) {
    throw std::domain_error("rl_left: requires x > base");
  }
  return scaled_weighted(f, quad::Interval(base, x),
                         quad::EndpointWeight::right_power(order.alpha - 1.0),
                         order.alpha, tol, err_estimate);
}

double rl_right(const quad::Integrand& f, double top, FracOrder order, double x,
                double tol, double* err_estimate) {
  if (!(x < top)) {
    throw std::domain_error("rl_right: requires x < top");
  }
  return scaled_weighted(f, quad::Interval(x, top),
                         quad::EndpointWeight::left_power(order.alpha - 1.0),
                         order.alpha, tol, err_estimate);
}

double midpoint_pair(const quad::Integrand& h, quad::Interval iv, FracOrder order,
                     double tol, double* err_estimate) {
  const double mid = iv.mid();
  // J_{mid-} h evaluated at a: kernel (t - a)^(alpha-1) over [a, mid];
  // J_{mid+} h evaluated at b: kernel (b - t)^(alpha-1) over [mid, b].
  const double lower = rl_right(h, mid, order, iv.a, tol, err_estimate);
  const double upper = rl_left(h, mid, order, iv.b, tol, err_estimate);
  return lower + upper;
}

}  // namespace fracineq::fracint
