#include "fracineq/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace fracineq::funcspace {

SParam::SParam(double value) : s(value) {
  if (!std::isfinite(value) || !(value > 0.0) || !(value <= 1.0)) {
    throw std::invalid_argument("SParam: s must lie in (0, 1]");
  }
}

HolderPair::HolderPair(double p_, double q_) : p(p_), q(q_) {
  if (!std::isfinite(p) || !std::isfinite(q) || !(p > 1.0) || !(q > 1.0)) {
    throw std::invalid_argument("HolderPair: p and q must exceed 1");
  }
  if (std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    throw std::invalid_argument("HolderPair: 1/p + 1/q must equal 1");
  }
}

HolderPair HolderPair::from_q(double q) {
  if (!std::isfinite(q) || !(q > 1.0)) {
    throw std::invalid_argument("HolderPair: q must exceed 1");
  }
  return HolderPair(q / (q - 1.0), q);
}

namespace {

constexpr int kGatePoints = 64;
constexpr double kGateRelTol = 1e-5;

// Central finite difference with the gate's step size.
double central_diff(const FunctionSpec::Fn& f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

void run_derivative_gate(const std::string& label, const FunctionSpec::Fn& f,
                         const FunctionSpec::Fn& fprime, const quad::Interval& domain) {
  const double h = domain.length() * 1e-6;

  double grid_t[kGatePoints];
  double grid_fp[kGatePoints];
  double max_abs_fp = 0.0;
  for (int i = 0; i < kGatePoints; ++i) {
    const double t = domain.a + domain.length() * (i + 0.5) / kGatePoints;
    grid_t[i] = t;
    grid_fp[i] = fprime(t);
    max_abs_fp = std::max(max_abs_fp, std::fabs(grid_fp[i]));
  }

  // Relative comparison with a floor so near-zero derivative values on an
  // otherwise nonflat grid do not demand absurd absolute accuracy.
  const double floor = 1e-8 * max_abs_fp + 1e-300;
  for (int i = 0; i < kGatePoints; ++i) {
    const double fd = central_diff(f, grid_t[i], h);
    const double scale = std::max(std::fabs(grid_fp[i]), floor);
    if (!(std::fabs(fd - grid_fp[i]) <= kGateRelTol * scale)) {
      throw std::invalid_argument(
          "FunctionSpec '" + label +
          "': supplied derivative disagrees with central finite difference");
    }
  }
}

}  // namespace

FunctionSpec::FunctionSpec(std::string label, Fn f, Fn fprime, quad::Interval domain,
                           ConvexClass cls, std::optional<SParam> s,
                           std::optional<HolderPair> holder)
    : label_(std::move(label)),
      f_(std::move(f)),
      fprime_(std::move(fprime)),
      domain_(domain),
      class_(cls),
      s_(s),
      holder_(holder) {
  if (!f_ || !fprime_) {
    throw std::invalid_argument("FunctionSpec: callable and derivative required");
  }
  run_derivative_gate(label_, f_, fprime_, domain_);
}

FunctionSpec FunctionSpec::with_numeric_derivative(std::string label, Fn f,
                                                   quad::Interval domain, ConvexClass cls,
                                                   std::optional<SParam> s,
                                                   std::optional<HolderPair> holder) {
  if (!f) {
    throw std::invalid_argument("FunctionSpec: callable required");
  }
  const double h = domain.length() * 1e-6;
  Fn fprime = [f, h](double t) { return central_diff(f, t, h); };
  return FunctionSpec(std::move(label), std::move(f), std::move(fprime), domain, cls, s,
                      holder);
}

WeightSpec::WeightSpec(std::string label, Fn g, quad::Interval domain)
    : label_(std::move(label)), g_(std::move(g)), domain_(domain) {
  if (!g_) {
    throw std::invalid_argument("WeightSpec: callable required");
  }
  constexpr int n = 1024;
  for (int i = 0; i < n; ++i) {
    const double t = domain_.a + domain_.length() * i / (n - 1.0);
    const double v = g_(t);
    if (!(v >= -1e-12)) {
      throw std::invalid_argument("WeightSpec '" + label_ + "': negative on the domain");
    }
    const double mirrored = g_(domain_.a + domain_.b - t);
    if (!(std::fabs(mirrored - v) <= 1e-10)) {
      throw std::invalid_argument("WeightSpec '" + label_ +
                                  "': not symmetric about the midpoint");
    }
  }
}

SConvexResult check_s_convex(const std::function<double(double)>& f,
                             quad::Interval domain, SParam s, int grid,
                             std::uint64_t seed) {
  if (domain.a < 0.0) {
    throw std::domain_error("check_s_convex: s-convexity requires a domain in [0, inf)");
  }
  if (grid < 8) {
    throw std::invalid_argument("check_s_convex: grid must be at least 8");
  }

  std::vector<double> pts(grid);
  std::vector<double> fx(grid);
  std::vector<double> lams(grid);
  for (int i = 0; i < grid; ++i) {
    pts[i] = domain.a + domain.length() * i / (grid - 1.0);
    fx[i] = f(pts[i]);
    lams[i] = i / (grid - 1.0);
  }

  SConvexResult result;
  result.worst.gap = -std::numeric_limits<double>::infinity();
  auto consider = [&](double x, double y, double lam, double fx_, double fy_) {
    const double combo = f(lam * x + (1.0 - lam) * y);
    const double gap =
        combo - std::pow(lam, s.s) * fx_ - std::pow(1.0 - lam, s.s) * fy_;
    if (gap > result.worst.gap) {
      result.worst = SConvexWitness{x, y, lam, gap};
    }
  };

  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        consider(pts[i], pts[j], lams[k], fx[i], fx[j]);
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const long draws = 10L * grid * grid * grid;
  for (long n = 0; n < draws; ++n) {
    const double x = domain.a + domain.length() * unit(rng);
    const double y = domain.a + domain.length() * unit(rng);
    const double lam = unit(rng);
    consider(x, y, lam, f(x), f(y));
  }

  result.certified = result.worst.gap <= kSConvexGapTol;
  return result;
}

double sup_norm(const std::function<double(double)>& g, quad::Interval iv) {
  constexpr int n = 4096;
  auto h = [&g](double t) { return std::fabs(g(t)); };

  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    const double t = iv.a + iv.length() * i / (n - 1.0);
    const double v = h(t);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }

  // Golden-section polish inside the bracket around the grid argmax; on
  // this fine a grid |g| is locally unimodal for any practical weight.
  double lo = iv.a + iv.length() * std::max(0, best_i - 1) / (n - 1.0);
  double hi = iv.a + iv.length() * std::min(n - 1, best_i + 1) / (n - 1.0);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = h(c);
  double fd = h(d);
  for (int it = 0; it < 60; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = h(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = h(d);
    }
  }
  return std::max(best, std::max(fc, fd));
}

const FunctionSpec* Catalog::find_function(std::string_view label) const {
  for (const FunctionSpec& f : functions) {
    if (f.label() == label) {
      return &f;
    }
  }
  return nullptr;
}

const WeightSpec* Catalog::find_weight(std::string_view label) const {
  for (const WeightSpec& w : weights) {
    if (w.label() == label) {
      return &w;
    }
  }
  return nullptr;
}

Catalog builtin_catalog(quad::Interval iv, SParam s, HolderPair holder) {
  const double a = iv.a;
  const double b = iv.b;
  const double len = iv.length();
  const double mid = iv.mid();
  auto u = [a, len](double t) { return (t - a) / len; };

  Catalog cat;

  cat.functions.emplace_back(
      "linear", [](double t) { return t; }, [](double) { return 1.0; }, iv,
      ConvexClass::convex);
  cat.functions.emplace_back(
      "quadratic", [](double t) { return t * t; }, [](double t) { return 2.0 * t; }, iv,
      ConvexClass::convex);
  cat.functions.emplace_back(
      "exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
      iv, ConvexClass::convex);

  // f'(t) = u^s: |f'| is s-convex; f by closed-form antiderivative.
  {
    const double sv = s.s;
    cat.functions.emplace_back(
        "dpow_s",
        [u, len, sv](double t) { return len * std::pow(u(t), sv + 1.0) / (sv + 1.0); },
        [u, sv](double t) { return std::pow(u(t), sv); }, iv,
        ConvexClass::abs_deriv_s_convex, s);
  }

  // f'(t) = u^(s/q): |f'|^q = u^s is s-convex.
  {
    const double e = s.s / holder.q;
    cat.functions.emplace_back(
        "dpow_sq",
        [u, len, e](double t) { return len * std::pow(u(t), e + 1.0) / (e + 1.0); },
        [u, e](double t) { return std::pow(u(t), e); }, iv,
        ConvexClass::abs_deriv_q_power_s_convex, s, holder);
  }

  // f(t) = u^s: the canonical s-convex function (tight for the s-convex
  // sandwich); its derivative blows up at t = a when s < 1.
  {
    const double sv = s.s;
    cat.functions.emplace_back(
        "pow_s", [u, sv](double t) { return std::pow(u(t), sv); },
        [u, sv, len](double t) { return (sv / len) * std::pow(u(t), sv - 1.0); }, iv,
        ConvexClass::none, s);
  }

  // Concave test case registered with a deliberately wrong convexity
  // claim; the certifier flags it, exercising the warning path.
  cat.functions.emplace_back(
      "neg_quadratic", [](double t) { return -t * t; },
      [](double t) { return -2.0 * t; }, iv, ConvexClass::convex);

  cat.weights.emplace_back("one", [](double) { return 1.0; }, iv);
  cat.weights.emplace_back(
      "parabola", [a, b](double t) { return (t - a) * (b - t); }, iv);
  cat.weights.emplace_back(
      "vee", [mid](double t) { return std::fabs(t - mid); }, iv);
  {
    const double pi = std::acos(-1.0);
    cat.weights.emplace_back(
        "cos2",
        [mid, len, pi](double t) {
          const double c = std::cos(pi * (t - mid) / len);
          return c * c;
        },
        iv);
  }
  return cat;
}

}  // namespace fracineq::funcspace
