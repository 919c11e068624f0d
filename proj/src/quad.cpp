#include "fracineq/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace fracineq::quad {

Interval::Interval(double lo, double hi) : a(lo), b(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("Interval: requires finite endpoints with a < b");
  }
}

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half, last entry is the
// centre) with the embedded 7-point Gauss rule. Values are the QUADPACK
// dqk15 constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

struct PanelLess {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

// One Gauss-Kronrod 7/15 pass over [a, b], with the QUADPACK error
// estimate: |K15 - G7| sharpened through the resasc scaling and floored
// at 50 ulp of the absolute integral.
Panel gk15(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv1[7];
  double fv2[7];
  const double fc = f(centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    const double fsum = f1 + f2;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) {
      resg += kWg[j / 2] * fsum;
    }
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }
  resasc *= std::fabs(half);
  resabs *= std::fabs(half);

  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50) {
    err = std::max(err, eps50 * resabs);
  }
  return Panel{a, b, resk * half, err};
}

// Compensated accumulator so tens of thousands of panel updates do not
// drift the convergence test at tight tolerances.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

QuadResult integrate(const Integrand& f, Interval iv, double tol, long max_evaluations) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate: tol must be positive");
  }
  if (max_evaluations < 15) {
    throw std::invalid_argument("integrate: budget below a single rule application");
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
  long evals = 15;
  Panel root = gk15(f, iv.a, iv.b);
  KahanSum total;
  KahanSum toterr;
  total.add(root.value);
  toterr.add(root.error);
  heap.push(root);

  auto converged = [&]() {
    return toterr.sum <= std::max(tol * std::fabs(total.sum), tol);
  };

  while (!converged()) {
    if (evals + 30 > max_evaluations) {
      throw NonConvergence("integrate: evaluation budget exhausted",
                           QuadResult{total.sum, toterr.sum, evals});
    }
    const Panel worst = heap.top();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(worst.a < m && m < worst.b)) {
      throw NonConvergence("integrate: interval too narrow to subdivide further",
                           QuadResult{total.sum, toterr.sum, evals});
    }
    heap.pop();
    const Panel left = gk15(f, worst.a, m);
    const Panel right = gk15(f, m, worst.b);
    evals += 30;
    total.add(left.value);
    total.add(right.value);
    total.add(-worst.value);
    toterr.add(left.error);
    toterr.add(right.error);
    toterr.add(-worst.error);
    heap.push(left);
    heap.push(right);
  }

  // Final resummation straight off the panel list removes any residual
  // accumulator drift from the returned value.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  KahanSum value;
  KahanSum error;
  for (const Panel& p : panels) {
    value.add(p.value);
    error.add(p.error);
  }
  return QuadResult{value.sum, error.sum, evals};
}

QuadResult integrate_weighted(const Integrand& f, Interval iv, EndpointWeight w,
                              double tol, long max_evaluations) {
  if (w.kind == WeightKind::none) {
    return integrate(f, iv, tol, max_evaluations);
  }
  if (!(w.exponent > -1.0)) {
    throw std::domain_error("integrate_weighted: exponent must exceed -1");
  }

  // Substitution v = (t - a)^(mu+1):
  //   integral_a^b (t - a)^mu f(t) dt
  //     = (1/(mu+1)) integral_0^{(b-a)^(mu+1)} f(a + v^(1/(mu+1))) dv
  // and the mirror image for the right-endpoint weight. The recovered
  // abscissa is clamped to [a, b] against pow round-trip overshoot.
  const double m1 = w.exponent + 1.0;
  const double upper = std::pow(iv.length(), m1);
  const double a = iv.a;
  const double b = iv.b;

  Integrand transformed;
  if (w.kind == WeightKind::left_power) {
    transformed = [&f, a, b, m1](double v) {
      return f(std::min(a + std::pow(v, 1.0 / m1), b));
    };
  } else {
    transformed = [&f, a, b, m1](double v) {
      return f(std::max(b - std::pow(v, 1.0 / m1), a));
    };
  }

  QuadResult r = integrate(transformed, Interval(0.0, upper), tol, max_evaluations);
  r.value /= m1;
  r.error_estimate /= m1;
  return r;
}

}  // namespace fracineq::quad
