#include "fracineq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <tuple>
#include <utility>

namespace fracineq::harness {

const char* to_string(CheckKind check) {
  switch (check) {
    case CheckKind::identity: return "identity";
    case CheckKind::sandwiches: return "sandwiches";
    case CheckKind::bounds: return "bounds";
    case CheckKind::reductions: return "reductions";
  }
  return "?";
}

const char* to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Absolute gate for Lemma-identity residual rows.
constexpr double kIdentityGate = 1e-7;
// Relative gate for the exact T7 -> T4 reduction rows.
constexpr double kReductionGate = 1e-12;

std::string fmt17(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& raw, const std::string& context) {
  const std::string v = trim(raw);
  if (v.empty()) {
    throw ConfigError(context + ": empty number");
  }
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || !std::isfinite(x)) {
    throw ConfigError(context + ": not a finite number: '" + v + "'");
  }
  return x;
}

std::vector<double> parse_double_list(const std::string& raw, const std::string& context) {
  std::vector<double> out;
  if (trim(raw).empty()) {
    return out;
  }
  for (const std::string& item : split(raw, ',')) {
    out.push_back(parse_double(item, context));
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& raw) {
  std::vector<std::string> out;
  for (const std::string& item : split(raw, ',')) {
    const std::string v = trim(item);
    if (!v.empty()) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<quad::Interval> parse_intervals(const std::string& raw) {
  std::vector<quad::Interval> out;
  for (const std::string& pair : split(raw, ';')) {
    if (trim(pair).empty()) {
      continue;
    }
    const std::vector<std::string> ends = split(pair, ',');
    if (ends.size() != 2) {
      throw ConfigError("intervals: expected 'lo,hi' pairs separated by ';'");
    }
    const double lo = parse_double(ends[0], "intervals");
    const double hi = parse_double(ends[1], "intervals");
    try {
      out.emplace_back(lo, hi);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("intervals: ") + e.what());
    }
  }
  return out;
}

CheckKind parse_check(const std::string& name) {
  if (name == "identity") return CheckKind::identity;
  if (name == "sandwiches") return CheckKind::sandwiches;
  if (name == "bounds") return CheckKind::bounds;
  if (name == "reductions") return CheckKind::reductions;
  throw ConfigError("checks: unknown check '" + name + "'");
}

}  // namespace

SweepConfig parse_config_text(std::istream& in, const std::string& origin) {
  SweepConfig cfg;
  std::map<std::string, bool> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(where + ": empty key");
    }
    if (seen[key]) {
      throw ConfigError(where + ": duplicate key '" + key + "'");
    }
    seen[key] = true;

    if (key == "intervals") {
      cfg.intervals = parse_intervals(value);
    } else if (key == "alphas") {
      cfg.alphas = parse_double_list(value, "alphas");
    } else if (key == "s_values") {
      cfg.s_values = parse_double_list(value, "s_values");
    } else if (key == "q_values") {
      cfg.q_values = parse_double_list(value, "q_values");
    } else if (key == "function_labels") {
      cfg.function_labels = parse_string_list(value);
    } else if (key == "weight_labels") {
      cfg.weight_labels = parse_string_list(value);
    } else if (key == "checks") {
      cfg.checks.clear();
      for (const std::string& name : parse_string_list(value)) {
        cfg.checks.push_back(parse_check(name));
      }
    } else if (key == "tol") {
      cfg.tol = parse_double(value, "tol");
    } else if (key == "seed") {
      const double s = parse_double(value, "seed");
      if (s < 0 || s != std::floor(s)) {
        throw ConfigError(where + ": seed must be a nonnegative integer");
      }
      cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "format") {
      if (value == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (value == "json") {
        cfg.format = OutputFormat::json;
      } else {
        throw ConfigError(where + ": format must be csv or json");
      }
    } else if (key == "inject_rhs_scale") {
      cfg.inject_rhs_scale = parse_double(value, "inject_rhs_scale");
      if (!(cfg.inject_rhs_scale > 0.0)) {
        throw ConfigError(where + ": inject_rhs_scale must be positive");
      }
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

SweepConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  return parse_config_text(in, path);
}

namespace {

using funcspace::Catalog;
using funcspace::FunctionSpec;
using funcspace::WeightSpec;

const std::vector<std::string> kSDependentLabels = {"dpow_s", "dpow_sq", "pow_s"};

bool is_s_dependent(const std::string& label) {
  return std::find(kSDependentLabels.begin(), kSDependentLabels.end(), label) !=
         kSDependentLabels.end();
}

bool is_q_dependent(const std::string& label) { return label == "dpow_sq"; }

// Catalogs are (interval, s, q)-specific; build each combination once.
class CatalogCache {
 public:
  explicit CatalogCache(const std::vector<quad::Interval>& intervals)
      : intervals_(intervals) {}

  const Catalog& get(std::size_t iv_index, double s, double q) {
    if (std::isnan(s)) s = 1.0;
    if (std::isnan(q)) q = 2.0;
    const auto key = std::make_tuple(iv_index, s, q);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_
               .emplace(key, funcspace::builtin_catalog(intervals_[iv_index],
                                                        funcspace::SParam(s),
                                                        funcspace::HolderPair::from_q(q)))
               .first;
    }
    return it->second;
  }

 private:
  const std::vector<quad::Interval>& intervals_;
  std::map<std::tuple<std::size_t, double, double>, Catalog> cache_;
};

// A catalog function fixed at concrete (s, q) parameters where the label
// needs them; s/q are NaN for parameter-free labels.
struct FInstance {
  const FunctionSpec* spec = nullptr;
  double s = kNaN;
  double q = kNaN;
  std::string id;
};

std::vector<FInstance> instantiate(const std::string& label, std::size_t iv_index,
                                   const std::vector<double>& eff_s,
                                   const std::vector<double>& eff_q,
                                   bool skip_q_dependent_without_q, CatalogCache& cats) {
  auto lookup = [&](double s, double q) -> const FunctionSpec* {
    const FunctionSpec* spec = cats.get(iv_index, s, q).find_function(label);
    if (spec == nullptr) {
      throw ConfigError("unknown function label '" + label + "'");
    }
    return spec;
  };

  std::vector<FInstance> out;
  if (!is_s_dependent(label)) {
    out.push_back(FInstance{lookup(kNaN, kNaN), kNaN, kNaN, label});
    return out;
  }
  if (eff_s.empty()) {
    throw ConfigError("function label '" + label + "' requires s_values");
  }
  if (!is_q_dependent(label)) {
    for (double s : eff_s) {
      out.push_back(FInstance{lookup(s, kNaN), s, kNaN, label + "@s=" + fmt17(s)});
    }
    return out;
  }
  if (eff_q.empty()) {
    if (skip_q_dependent_without_q) {
      return out;
    }
    throw ConfigError("function label '" + label + "' requires q_values");
  }
  for (double s : eff_s) {
    for (double q : eff_q) {
      out.push_back(FInstance{lookup(s, q), s, q,
                              label + "@s=" + fmt17(s) + ",q=" + fmt17(q)});
    }
  }
  return out;
}

void validate(const SweepConfig& cfg) {
  if (cfg.checks.empty()) {
    throw ConfigError("no checks requested");
  }
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
    throw ConfigError("tol must be positive and finite");
  }
  for (double a : cfg.alphas) {
    if (!(a > 0.0)) {
      throw ConfigError("alphas must be positive");
    }
  }
  for (double s : cfg.s_values) {
    if (!(s > 0.0) || !(s <= 1.0)) {
      throw ConfigError("s_values must lie in (0, 1]");
    }
  }
  for (double q : cfg.q_values) {
    if (!(q > 1.0)) {
      throw ConfigError("q_values must exceed 1");
    }
  }

  auto enabled = [&](CheckKind c) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end();
  };
  auto require = [](bool ok, const char* what) {
    if (!ok) {
      throw ConfigError(std::string(what));
    }
  };
  if (enabled(CheckKind::identity)) {
    require(!cfg.intervals.empty(), "identity check requires intervals");
    require(!cfg.alphas.empty(), "identity check requires alphas");
    require(!cfg.function_labels.empty(), "identity check requires function_labels");
    require(!cfg.weight_labels.empty(), "identity check requires weight_labels");
  }
  if (enabled(CheckKind::sandwiches)) {
    require(!cfg.intervals.empty(), "sandwiches check requires intervals");
    require(!cfg.alphas.empty(), "sandwiches check requires alphas");
    require(!cfg.s_values.empty(), "sandwiches check requires s_values");
    require(!cfg.function_labels.empty(), "sandwiches check requires function_labels");
    require(!cfg.weight_labels.empty(), "sandwiches check requires weight_labels");
  }
  if (enabled(CheckKind::bounds)) {
    require(!cfg.intervals.empty(), "bounds check requires intervals");
    require(!cfg.alphas.empty(), "bounds check requires alphas");
    require(!cfg.s_values.empty(), "bounds check requires s_values");
    require(!cfg.q_values.empty(), "bounds check requires q_values");
    require(!cfg.function_labels.empty(), "bounds check requires function_labels");
    require(!cfg.weight_labels.empty(), "bounds check requires weight_labels");
  }
  if (enabled(CheckKind::reductions)) {
    require(!cfg.alphas.empty(), "reductions check requires alphas");
    require(!cfg.q_values.empty(), "reductions check requires q_values");
  }

  // Surface label typos before any evaluation, independent of which other
  // lists are populated.
  const Catalog probe = funcspace::builtin_catalog(
      quad::Interval(0.0, 1.0), funcspace::SParam(0.5), funcspace::HolderPair::from_q(2.0));
  for (const std::string& label : cfg.function_labels) {
    if (probe.find_function(label) == nullptr) {
      throw ConfigError("unknown function label '" + label + "'");
    }
  }
  for (const std::string& label : cfg.weight_labels) {
    if (probe.find_weight(label) == nullptr) {
      throw ConfigError("unknown weight label '" + label + "'");
    }
  }
}

// Everything run_sweep needs to thread through the per-check emitters.
class SweepRunner {
 public:
  SweepRunner(const SweepConfig& cfg, std::vector<ineq::InequalityReport>& rows)
      : cfg_(cfg), rows_(rows), cats_(cfg.intervals) {}

  Summary run() {
    auto enabled = [&](CheckKind c) {
      return std::find(cfg_.checks.begin(), cfg_.checks.end(), c) != cfg_.checks.end();
    };
    if (enabled(CheckKind::identity)) {
      run_identity();
    }
    if (enabled(CheckKind::sandwiches)) {
      run_sandwiches();
    }
    if (enabled(CheckKind::bounds)) {
      run_bounds();
    }
    if (enabled(CheckKind::reductions)) {
      run_reductions();
    }

    std::stable_sort(rows_.begin(), rows_.end(),
                     [](const ineq::InequalityReport& x, const ineq::InequalityReport& y) {
                       return x.case_id < y.case_id;
                     });

    Summary sum;
    for (const ineq::InequalityReport& row : rows_) {
      ++sum.cases;
      if (!row.certified) {
        ++sum.warnings;
      } else if (row.holds) {
        ++sum.passes;
      } else {
        ++sum.failures;
      }
      if (row.certified && std::isfinite(row.ratio)) {
        sum.worst_ratio = std::max(sum.worst_ratio, row.ratio);
      }
      if (row.check == "identity") {
        sum.max_identity_residual = std::max(sum.max_identity_residual, row.lhs);
      }
    }
    return sum;
  }

 private:
  std::string next_case_id() {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "c%05d", counter_++);
    return buf;
  }

  void push_row(const char* check, std::string theorem, ineq::CaseParams params,
                double lhs, double rhs, bool holds, bool certified, double quad_err) {
    ineq::InequalityReport row;
    row.case_id = next_case_id();
    row.check = check;
    row.theorem = std::move(theorem);
    row.params = std::move(params);
    row.lhs = lhs;
    row.rhs = rhs;
    row.slack = rhs - lhs;
    row.ratio = ineq::report_ratio(lhs, rhs);
    row.holds = holds;
    row.certified = certified;
    row.quad_error = quad_err;
    rows_.push_back(std::move(row));
  }

  const WeightSpec& weight(std::size_t iv_index, const std::string& label) {
    const WeightSpec* w = cats_.get(iv_index, kNaN, kNaN).find_weight(label);
    if (w == nullptr) {
      throw ConfigError("unknown weight label '" + label + "'");
    }
    return *w;
  }

  // Midpoint-Fejer LHS is theorem-independent; cache it per
  // (interval, alpha, f-instance, weight).
  std::pair<double, double> cached_lhs(std::size_t iv_index, double alpha,
                                       const FInstance& inst, const WeightSpec& g) {
    const std::string key =
        std::to_string(iv_index) + "|" + fmt17(alpha) + "|" + inst.id + "|" + g.label();
    auto it = lhs_cache_.find(key);
    if (it == lhs_cache_.end()) {
      double err = 0.0;
      const double lhs =
          ineq::fejer_midpoint_lhs(*inst.spec, g, cfg_.intervals[iv_index],
                                   fracint::FracOrder(alpha), cfg_.tol, &err);
      it = lhs_cache_.emplace(key, std::make_pair(lhs, err)).first;
    }
    return it->second;
  }

  enum class Target { function, abs_deriv, abs_deriv_pow_q };

  // Sampling certification with memoization; q is ignored unless the
  // target raises |f'| to the q-th power. Negative domains (where
  // s-convexity is undefined) simply fail certification.
  bool certified(std::size_t iv_index, const FInstance& inst, Target target,
                 double cert_s, double cert_q) {
    const std::string key = std::to_string(iv_index) + "|" + inst.id + "|" +
                            std::to_string(static_cast<int>(target)) + "|" +
                            fmt17(cert_s) + "|" + fmt17(cert_q);
    auto it = cert_cache_.find(key);
    if (it != cert_cache_.end()) {
      return it->second;
    }

    const FunctionSpec& f = *inst.spec;
    std::function<double(double)> fn;
    switch (target) {
      case Target::function:
        fn = f.fn();
        break;
      case Target::abs_deriv:
        fn = [&f](double t) { return std::fabs(f.deriv(t)); };
        break;
      case Target::abs_deriv_pow_q:
        fn = [&f, cert_q](double t) { return std::pow(std::fabs(f.deriv(t)), cert_q); };
        break;
    }

    bool ok = false;
    try {
      ok = funcspace::check_s_convex(fn, cfg_.intervals[iv_index],
                                     funcspace::SParam(cert_s), 10, cfg_.seed)
               .certified;
    } catch (const std::domain_error&) {
      ok = false;
    }
    cert_cache_.emplace(key, ok);
    return ok;
  }

  static ineq::CaseParams params_for(const quad::Interval& iv, double alpha, double s,
                                     double q, const std::string& f_label,
                                     const std::string& g_label) {
    ineq::CaseParams p;
    p.a = iv.a;
    p.b = iv.b;
    p.alpha = alpha;
    p.s = s;
    p.q = q;
    p.f_label = f_label;
    p.g_label = g_label;
    return p;
  }

  void run_identity() {
    for (std::size_t ivi = 0; ivi < cfg_.intervals.size(); ++ivi) {
      for (const std::string& label : cfg_.function_labels) {
        const std::vector<FInstance> insts =
            instantiate(label, ivi, cfg_.s_values, cfg_.q_values, false, cats_);
        for (const FInstance& inst : insts) {
          for (const std::string& glabel : cfg_.weight_labels) {
            const WeightSpec& g = weight(ivi, glabel);
            for (double alpha : cfg_.alphas) {
              double err = 0.0;
              double residual = kNaN;
              try {
                residual = ineq::identity_residual(*inst.spec, g, cfg_.intervals[ivi],
                                                   fracint::FracOrder(alpha), cfg_.tol,
                                                   &err);
              } catch (const quad::NonConvergence&) {
                err = kNaN;
              }
              push_row("identity", "L1",
                       params_for(cfg_.intervals[ivi], alpha, inst.s, inst.q, label,
                                  glabel),
                       residual, kIdentityGate,
                       ineq::report_holds(residual, kIdentityGate), true, err);
            }
          }
        }
      }
    }
  }

  void push_sandwich_rows(const char* kind_tag, const ineq::SandwichTriple& tr,
                          ineq::CaseParams params, bool cert, double quad_err) {
    ineq::CaseParams mr = params;
    push_row("sandwiches", std::string(kind_tag) + "_lm", std::move(params), tr.left,
             tr.middle, ineq::report_holds(tr.left, tr.middle), cert, quad_err);
    push_row("sandwiches", std::string(kind_tag) + "_mr", std::move(mr), tr.middle,
             tr.right, ineq::report_holds(tr.middle, tr.right), cert, quad_err);
  }

  void run_sandwiches() {
    using ineq::SandwichKind;
    for (std::size_t ivi = 0; ivi < cfg_.intervals.size(); ++ivi) {
      const quad::Interval iv = cfg_.intervals[ivi];

      // Plain and weighted classical sandwiches (no alpha, no s).
      for (const std::string& label : cfg_.function_labels) {
        for (const FInstance& inst :
             instantiate(label, ivi, cfg_.s_values, cfg_.q_values, false, cats_)) {
          const bool cert = certified(ivi, inst, Target::function, 1.0, kNaN);
          {
            double err = 0.0;
            const ineq::SandwichTriple tr =
                ineq::sandwich(SandwichKind::HH, *inst.spec, nullptr, iv, std::nullopt,
                               std::nullopt, cfg_.tol, &err);
            push_sandwich_rows("HH", tr,
                               params_for(iv, kNaN, inst.s, inst.q, label, ""), cert,
                               err);
          }
          for (const std::string& glabel : cfg_.weight_labels) {
            const WeightSpec& g = weight(ivi, glabel);
            double err = 0.0;
            const ineq::SandwichTriple tr =
                ineq::sandwich(SandwichKind::FEJER, *inst.spec, &g, iv, std::nullopt,
                               std::nullopt, cfg_.tol, &err);
            push_sandwich_rows("FEJER", tr,
                               params_for(iv, kNaN, inst.s, inst.q, label, glabel),
                               cert, err);
          }
        }
      }

      // s-convex sandwich: s is a check axis.
      for (double s : cfg_.s_values) {
        for (const std::string& label : cfg_.function_labels) {
          for (const FInstance& inst :
               instantiate(label, ivi, {s}, cfg_.q_values, false, cats_)) {
            const bool cert = certified(ivi, inst, Target::function, s, kNaN);
            double err = 0.0;
            const ineq::SandwichTriple tr =
                ineq::sandwich(SandwichKind::S_HH, *inst.spec, nullptr, iv, std::nullopt,
                               funcspace::SParam(s), cfg_.tol, &err);
            push_sandwich_rows("S_HH", tr, params_for(iv, kNaN, s, inst.q, label, ""),
                               cert, err);
          }
        }
      }

      // Fractional sandwiches: alpha is a check axis.
      for (double alpha : cfg_.alphas) {
        const fracint::FracOrder order(alpha);
        for (const std::string& label : cfg_.function_labels) {
          for (const FInstance& inst :
               instantiate(label, ivi, cfg_.s_values, cfg_.q_values, false, cats_)) {
            const bool cert = certified(ivi, inst, Target::function, 1.0, kNaN);
            {
              double err = 0.0;
              const ineq::SandwichTriple tr =
                  ineq::sandwich(SandwichKind::FRAC_HH, *inst.spec, nullptr, iv, order,
                                 std::nullopt, cfg_.tol, &err);
              push_sandwich_rows("FRAC_HH", tr,
                                 params_for(iv, alpha, inst.s, inst.q, label, ""), cert,
                                 err);
            }
            for (const std::string& glabel : cfg_.weight_labels) {
              const WeightSpec& g = weight(ivi, glabel);
              double err = 0.0;
              const ineq::SandwichTriple tr =
                  ineq::sandwich(SandwichKind::FRAC_FEJER, *inst.spec, &g, iv, order,
                                 std::nullopt, cfg_.tol, &err);
              push_sandwich_rows("FRAC_FEJER", tr,
                                 params_for(iv, alpha, inst.s, inst.q, label, glabel),
                                 cert, err);
            }
          }
        }
      }
    }
  }

  void run_bounds() {
    using ineq::BoundTheorem;
    struct Plan {
      BoundTheorem theorem;
      bool s_axis;
      bool q_axis;
    };
    const Plan plans[] = {
        {BoundTheorem::T4, false, false}, {BoundTheorem::T5, false, true},
        {BoundTheorem::T6, false, true},  {BoundTheorem::T7, true, false},
        {BoundTheorem::T8, true, true},   {BoundTheorem::T9, true, true},
    };

    for (const Plan& plan : plans) {
      const std::vector<double> s_axis = plan.s_axis ? cfg_.s_values
                                                     : std::vector<double>{kNaN};
      const std::vector<double> q_axis = plan.q_axis ? cfg_.q_values
                                                     : std::vector<double>{kNaN};
      for (std::size_t ivi = 0; ivi < cfg_.intervals.size(); ++ivi) {
        const quad::Interval iv = cfg_.intervals[ivi];
        for (double alpha : cfg_.alphas) {
          const fracint::FracOrder order(alpha);
          for (double sv : s_axis) {
            for (double qv : q_axis) {
              // Hypotheses pin s-dependent instances to s = 1 for the
              // convex theorems; q-dependent instances only make sense
              // when the theorem carries a q.
              const std::vector<double> eff_s{plan.s_axis ? sv : 1.0};
              const std::vector<double> eff_q =
                  plan.q_axis ? std::vector<double>{qv} : std::vector<double>{};
              for (const std::string& label : cfg_.function_labels) {
                for (const FInstance& inst :
                     instantiate(label, ivi, eff_s, eff_q, true, cats_)) {
                  const double cert_s = plan.s_axis ? sv : 1.0;
                  const Target target = (plan.theorem == BoundTheorem::T4 ||
                                         plan.theorem == BoundTheorem::T7)
                                            ? Target::abs_deriv
                                            : Target::abs_deriv_pow_q;
                  const bool deriv_finite =
                      std::isfinite(inst.spec->deriv(iv.a)) &&
                      std::isfinite(inst.spec->deriv(iv.b));
                  const bool cert =
                      deriv_finite && certified(ivi, inst, target, cert_s, qv);
                  for (const std::string& glabel : cfg_.weight_labels) {
                    const WeightSpec& g = weight(ivi, glabel);
                    const auto [lhs, err] = cached_lhs(ivi, alpha, inst, g);
                    const double rhs =
                        ineq::bound_rhs(
                            plan.theorem, *inst.spec, g, iv, order,
                            plan.s_axis ? std::optional<funcspace::SParam>(
                                              funcspace::SParam(sv))
                                        : std::nullopt,
                            plan.q_axis ? std::optional<funcspace::HolderPair>(
                                              funcspace::HolderPair::from_q(qv))
                                        : std::nullopt,
                            cfg_.tol) *
                        cfg_.inject_rhs_scale;
                    const double row_s = plan.s_axis ? sv : inst.s;
                    const double row_q = plan.q_axis ? qv : inst.q;
                    push_row("bounds", to_string(plan.theorem),
                             params_for(iv, alpha, row_s, row_q, label, glabel), lhs,
                             rhs, ineq::report_holds(lhs, rhs), cert, err);
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  void run_reductions() {
    using ineq::ReductionPair;
    for (ReductionPair pair :
         {ReductionPair::T7_to_T4, ReductionPair::T8_to_T5, ReductionPair::T9_to_T6}) {
      const std::vector<ineq::ReductionRow> audit =
          ineq::reduction_audit(pair, cfg_.alphas, cfg_.q_values);
      for (const ineq::ReductionRow& r : audit) {
        ineq::CaseParams p =
            params_for(quad::Interval(0.0, 1.0), r.alpha, 1.0, r.q, "linear", "one");
        // The T7 pair is an exact coefficient identity; the others assert
        // only that the printed s = 1 bound does not exceed the classical
        // one (the gap itself is the reported finding).
        const bool holds = pair == ReductionPair::T7_to_T4
                               ? r.relative_difference <= kReductionGate
                               : ineq::report_holds(r.new_bound_at_s1, r.classical_bound);
        push_row("reductions", to_string(pair), std::move(p), r.new_bound_at_s1,
                 r.classical_bound, holds, true, 0.0);
      }
    }
  }

  const SweepConfig& cfg_;
  std::vector<ineq::InequalityReport>& rows_;
  CatalogCache cats_;
  int counter_ = 0;
  std::map<std::string, std::pair<double, double>> lhs_cache_;
  std::map<std::string, bool> cert_cache_;
};

}  // namespace

Summary run_sweep(const SweepConfig& config, std::vector<ineq::InequalityReport>& rows) {
  validate(config);
  SweepRunner runner(config, rows);
  return runner.run();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) {
    return "null";
  }
  return fmt17(v);
}

}  // namespace

void emit_report(const std::vector<ineq::InequalityReport>& rows, OutputFormat format,
                 const std::string& path) {
  if (rows.empty()) {
    throw std::invalid_argument("emit_report: no rows to emit");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
  }

  if (format == OutputFormat::csv) {
    out << "case_id,check,theorem,a,b,alpha,s,q,f_label,g_label,lhs,rhs,slack,ratio,"
           "holds,quad_error\n";
    for (const ineq::InequalityReport& r : rows) {
      out << r.case_id << ',' << r.check << ',' << r.theorem << ','
          << fmt17(r.params.a) << ',' << fmt17(r.params.b) << ','
          << fmt17(r.params.alpha) << ',' << fmt17(r.params.s) << ','
          << fmt17(r.params.q) << ',' << r.params.f_label << ',' << r.params.g_label
          << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ',' << fmt17(r.slack) << ','
          << fmt17(r.ratio) << ',' << (r.holds ? "true" : "false") << ','
          << fmt17(r.quad_error) << '\n';
    }
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ineq::InequalityReport& r = rows[i];
      out << "  {\"case_id\":\"" << json_escape(r.case_id) << "\""
          << ",\"check\":\"" << json_escape(r.check) << "\""
          << ",\"theorem\":\"" << json_escape(r.theorem) << "\""
          << ",\"a\":" << json_number(r.params.a) << ",\"b\":" << json_number(r.params.b)
          << ",\"alpha\":" << json_number(r.params.alpha)
          << ",\"s\":" << json_number(r.params.s) << ",\"q\":" << json_number(r.params.q)
          << ",\"f_label\":\"" << json_escape(r.params.f_label) << "\""
          << ",\"g_label\":\"" << json_escape(r.params.g_label) << "\""
          << ",\"lhs\":" << json_number(r.lhs) << ",\"rhs\":" << json_number(r.rhs)
          << ",\"slack\":" << json_number(r.slack) << ",\"ratio\":" << json_number(r.ratio)
          << ",\"holds\":" << (r.holds ? "true" : "false")
          << ",\"quad_error\":" << json_number(r.quad_error) << "}"
          << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("emit_report: write to '" + path + "' failed");
  }
}

void print_summary(std::ostream& out, const Summary& summary) {
  out << "cases:                 " << summary.cases << "\n"
      << "passes:                " << summary.passes << "\n"
      << "failures:              " << summary.failures << "\n"
      << "warnings (uncertified):" << " " << summary.warnings << "\n"
      << "worst ratio:           " << fmt17(summary.worst_ratio) << "\n"
      << "max identity residual: " << fmt17(summary.max_identity_residual) << "\n";
}

}  // namespace fracineq::harness
