#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracineq/quad.hpp"

namespace fracineq::funcspace {

// s parameter for s-convexity in the second sense; valid range (0, 1].
struct SParam {
  double s;

  explicit SParam(double value);
};

// Conjugate Holder exponents: p, q > 1 with 1/p + 1/q = 1 (checked to
// 1e-12). from_q derives p = q / (q - 1).
struct HolderPair {
  double p;
  double q;

  HolderPair(double p_, double q_);

  static HolderPair from_q(double q);
};

// Structural hypothesis a function is registered under. The tag is what
// the owner *claims*; check_s_convex provides the numeric certificate.
enum class ConvexClass {
  none,                        // no structural claim
  convex,                      // f itself convex
  abs_deriv_s_convex,          // |f'| s-convex (second sense)
  abs_deriv_q_power_s_convex,  // |f'|^q s-convex (second sense)
};

// A differentiable test function on a fixed domain, with its label,
// analytic derivative and structural-class metadata. Construction runs a
// finite-difference sanity gate: the supplied derivative must match a
// central difference (step (b-a)*1e-6) at 64 interior points to relative
// 1e-5, else std::invalid_argument is thrown.
class FunctionSpec {
 public:
  using Fn = std::function<double(double)>;

  FunctionSpec(std::string label, Fn f, Fn fprime, quad::Interval domain,
               ConvexClass cls = ConvexClass::none,
               std::optional<SParam> s = std::nullopt,
               std::optional<HolderPair> holder = std::nullopt);

  // Builds the derivative by central finite difference with the same step
  // the sanity gate uses (for catalog entries lacking a closed form).
  static FunctionSpec with_numeric_derivative(std::string label, Fn f,
                                              quad::Interval domain,
                                              ConvexClass cls = ConvexClass::none,
                                              std::optional<SParam> s = std::nullopt,
                                              std::optional<HolderPair> holder = std::nullopt);

  double value(double t) const { return f_(t); }
  double deriv(double t) const { return fprime_(t); }

  const std::string& label() const { return label_; }
  const quad::Interval& domain() const { return domain_; }
  ConvexClass convex_class() const { return class_; }
  const std::optional<SParam>& s_param() const { return s_; }
  const std::optional<HolderPair>& holder() const { return holder_; }

  const Fn& fn() const { return f_; }
  const Fn& deriv_fn() const { return fprime_; }

 private:
  std::string label_;
  Fn f_;
  Fn fprime_;
  quad::Interval domain_;
  ConvexClass class_;
  std::optional<SParam> s_;
  std::optional<HolderPair> holder_;
};

// A Fejer weight on a fixed domain: construction samples a 1024-point
// grid and rejects (std::invalid_argument) negativity beyond -1e-12 or
// asymmetry |g(a + b - t) - g(t)| beyond 1e-10.
class WeightSpec {
 public:
  using Fn = std::function<double(double)>;

  WeightSpec(std::string label, Fn g, quad::Interval domain);

  double value(double t) const { return g_(t); }
  const std::string& label() const { return label_; }
  const quad::Interval& domain() const { return domain_; }
  const Fn& fn() const { return g_; }

 private:
  std::string label_;
  Fn g_;
  quad::Interval domain_;
};

// Worst observed gap for the s-convexity sampling certificate:
//   gap = f(lambda x + (1 - lambda) y) - lambda^s f(x) - (1 - lambda)^s f(y)
// (positive gap = violation).
struct SConvexWitness {
  double x = 0.0;
  double y = 0.0;
  double lambda = 0.0;
  double gap = 0.0;
};

struct SConvexResult {
  bool certified = false;  // worst gap <= 1e-9 (sampling evidence, not proof)
  SConvexWitness worst;
};

inline constexpr double kSConvexGapTol = 1e-9;

// Samples the s-convexity (second sense) inequality over a full
// grid x grid x grid lattice of (x, y, lambda) triples plus 10 * grid^3
// seeded random triples. Requires domain.a >= 0 (the notion lives on
// [0, infinity)) and grid >= 8.
SConvexResult check_s_convex(const std::function<double(double)>& f,
                             quad::Interval domain, SParam s, int grid = 10,
                             std::uint64_t seed = 0x5eedULL);

// Sup norm of |g| over iv: 4096-point scan refined by golden-section
// polish around the grid argmax.
double sup_norm(const std::function<double(double)>& g, quad::Interval iv);

struct Catalog {
  std::vector<FunctionSpec> functions;
  std::vector<WeightSpec> weights;

  const FunctionSpec* find_function(std::string_view label) const;
  const WeightSpec* find_weight(std::string_view label) const;
};

// Builtin test families on iv with u = (t - a) / (b - a):
//   functions: linear        f = t
//              quadratic     f = t^2
//              exp           f = e^t
//              dpow_s        f' = u^s     (|f'| s-convex)
//              dpow_sq       f' = u^(s/q) (|f'|^q s-convex)
//              pow_s         f = u^s      (canonical s-convex function;
//                                          derivative unbounded at a for s < 1)
//              neg_quadratic f = -t^2     (concave; exercises warnings)
//   weights:   one         g = 1
//              parabola    g = (t - a)(b - t)
//              vee         g = |t - mid|
//              cos2        g = cos^2(pi (t - mid) / (b - a))
// The s / holder arguments instantiate the s- and q-dependent families.
Catalog builtin_catalog(quad::Interval iv, SParam s, HolderPair holder);

}  // namespace fracineq::funcspace
