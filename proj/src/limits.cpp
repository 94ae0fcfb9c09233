#include "gcrit/limits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gcrit/error.hpp"
#include "gcrit/optimize.hpp"

namespace gcrit {

namespace {

constexpr double kGgmtPMax = 50.0;
constexpr double kCalogeroGMin = 1e-6;
constexpr double kCalogeroGMax = 1e6;
constexpr int kBisectionMaxIter = 200;
constexpr double kBisectionRelWidth = 1e-12;

constexpr std::array kMethodNames = {
    std::pair{Method::BargmannSchwinger, "bargmann_schwinger"},
    std::pair{Method::SecondOrder, "second_order"},
    std::pair{Method::ThirdOrder, "third_order"},
    std::pair{Method::GGMT, "ggmt"},
    std::pair{Method::CalogeroI, "calogero_1"},
    std::pair{Method::CalogeroII, "calogero_2"},
    std::pair{Method::Variational, "variational"},
    std::pair{Method::VariationalClosedForm, "variational_closed_form"},
};

Domain potential_domain(const Potential& pot, std::vector<double> extra = {}) {
  Domain d;
  if (auto cut = pot.compact_support()) d.upper = *cut;
  d.breakpoints = pot.breakpoints();
  d.breakpoints.insert(d.breakpoints.end(), extra.begin(), extra.end());
  return d;
}

IntegralResult integrate_over(const Integrand& f, const Domain& d, const QuadratureConfig& cfg) {
  return integrate(f, d.lower, d.upper, cfg, d.breakpoints);
}

void require_finite_positive(double x, const char* what, const Potential& pot) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DegeneratePotentialError(std::string(what) + " is zero or not finite for " + pot.describe());
  }
}

// Largest sampled value of r^2 v(r); used to keep the power-law integrands near unit size.
double peak_r2v(const Potential& pot) {
  double best = 0.0;
  auto probe = [&](double r) {
    if (r > 0.0) best = std::max(best, r * r * pot.evaluate(r));
  };
  const double R = pot.scale();
  for (int k = -160; k <= 160; ++k) probe(R * std::exp2(k / 8.0));
  for (double b : pot.breakpoints()) {
    probe(b);
    probe(b * (1.0 - 1e-12));
  }
  if (auto cut = pot.compact_support()) probe(*cut);
  if (!(best > 0.0)) throw DegeneratePotentialError("potential vanishes everywhere: " + pot.describe());
  return best;
}

// exp(a ln x + b ln(x^2 v / s) + c ln v), zero where v vanishes.
double log_power(double x, double v, double s, double a, double b, double c) {
  if (v <= 0.0) return 0.0;
  const double lx = std::log(x), lv = std::log(v);
  return std::exp(a * lx + b * (2.0 * lx + lv - std::log(s)) + c * lv);
}

BoundResult make(Method m, double value, std::optional<double> param, AngularMomentum ell, double rel_err) {
  return BoundResult{m, side_of(m), value, param, ell, std::abs(value) * rel_err, false};
}

// \int (dr/r) (r^2 v / s)^p
IntegralResult ggmt_integral(const Potential& pot, double p, double s, const QuadratureConfig& cfg) {
  auto f = [&](double r) { return log_power(r, pot.evaluate(r), s, -1.0, p, 0.0); };
  return integrate_over(f, potential_domain(pot), cfg);
}

double ggmt_log_prefactor(double p, double ell) {
  const double pm1 = p - 1.0;
  const double first = pm1 > 0.0 ? pm1 * std::log(pm1) : 0.0;  // (p-1)^(p-1) -> 1 at p = 1
  return first + std::lgamma(2.0 * p) - (2.0 * p - 1.0) * std::log(2.0 * ell + 1.0) - p * std::log(p) -
         2.0 * std::lgamma(p);
}

struct VariationalParts {
  IntegralResult numerator;    // \int F^(2p-1)
  IntegralResult denominator;  // nested F^(p) x^-L, F^(p) y^L
};

// F^(q; x) = (x^2 v / s)^(q/2) v^(1/2) = s^(-q/2) x^q v^((q+1)/2)
VariationalParts variational_parts(const Potential& pot, AngularMomentum ell, double p, double s,
                                   const QuadratureConfig& cfg) {
  const double L = ell.half_integer();
  const Domain d = potential_domain(pot);
  auto num = [&](double x) { return log_power(x, pot.evaluate(x), s, 0.0, p - 0.5, 0.5); };
  auto out = [&](double x) { return log_power(x, pot.evaluate(x), s, -L, 0.5 * p, 0.5); };
  auto in = [&](double y) { return log_power(y, pot.evaluate(y), s, L, 0.5 * p, 0.5); };
  return {integrate_over(num, d, cfg), nested_double(out, in, cfg, d)};
}

double rel_err(const IntegralResult& r) { return r.value != 0.0 ? r.error_estimate / std::abs(r.value) : 0.0; }

}  // namespace

std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

std::string_view to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

Method parse_method(std::string_view name) {
  for (const auto& [method, n] : kMethodNames) {
    if (n == name) return method;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'", "methods");
}

Side side_of(Method m) {
  switch (m) {
    case Method::BargmannSchwinger:
    case Method::SecondOrder:
    case Method::ThirdOrder:
    case Method::GGMT:
      return Side::Lower;
    default:
      return Side::Upper;
  }
}

bool has_free_parameter(Method m) {
  return m == Method::GGMT || m == Method::CalogeroI || m == Method::CalogeroII || m == Method::Variational;
}

BoundResult lower_bargmann_schwinger(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  auto r = integrate_over([&](double x) { return x * pot.evaluate(x); }, potential_domain(pot), cfg);
  require_finite_positive(r.value, "first moment of v", pot);
  return make(Method::BargmannSchwinger, ell.multiplicity() / r.value, std::nullopt, ell, rel_err(r));
}

BoundResult lower_second_order(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  const double l2 = 2.0 * ell.ell();
  auto out = [&](double x) { return std::pow(x, -l2) * pot.evaluate(x); };
  auto in = [&](double y) { return std::pow(y, l2 + 2.0) * pot.evaluate(y); };
  auto r = nested_double(out, in, cfg, potential_domain(pot));
  require_finite_positive(r.value, "second-order nested integral", pot);
  const double m = ell.multiplicity();
  const double value = 1.0 / std::sqrt(2.0 * r.value / (m * m));
  return make(Method::SecondOrder, value, std::nullopt, ell, 0.5 * rel_err(r));
}

BoundResult lower_third_order(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  const double l2 = 2.0 * ell.ell();
  auto w1 = [&](double x) { return std::pow(x, -l2) * pot.evaluate(x); };
  auto w2 = [&](double y) { return y * pot.evaluate(y); };
  auto w3 = [&](double z) { return std::pow(z, l2 + 2.0) * pot.evaluate(z); };
  auto r = nested_triple(w1, w2, w3, cfg, potential_domain(pot));
  require_finite_positive(r.value, "third-order nested integral", pot);
  const double m = ell.multiplicity();
  const double value = std::cbrt(m * m * m / (6.0 * r.value));
  return make(Method::ThirdOrder, value, std::nullopt, ell, rel_err(r) / 3.0);
}

BoundResult lower_ggmt_at(const Potential& pot, AngularMomentum ell, double p, const QuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw DomainError("GGMT exponent p must be >= 1");
  const double s = peak_r2v(pot);
  auto r = ggmt_integral(pot, p, s, cfg);
  require_finite_positive(r.value, "GGMT integral", pot);
  const double log_integral = p * std::log(s) + std::log(r.value);
  const double value = std::exp(-(ggmt_log_prefactor(p, ell.ell()) + log_integral) / p);
  return make(Method::GGMT, value, p, ell, rel_err(r) / p);
}

BoundResult lower_ggmt(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  LogAxisSearch opts;
  opts.lo = opts.floor = 1.0;
  opts.hi = opts.ceiling = kGgmtPMax;
  auto best = minimize_log_axis([&](double p) { return -lower_ggmt_at(pot, ell, p, cfg).value; }, opts);
  auto out = lower_ggmt_at(pot, ell, best.argmin, cfg);
  out.param_at_limit = best.argmin > 1.0 && best.at_limit;
  return out;
}

BoundResult upper_calogero_I_at(const Potential& pot, AngularMomentum ell, double a, const QuadratureConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("Calogero radius a must be positive");
  const double k = ell.multiplicity();
  auto f = [&](double r) {
    const double ratio = r < a ? r / a : a / r;
    return r * pot.evaluate(r) * std::pow(ratio, k);
  };
  auto r = integrate_over(f, potential_domain(pot, {a}), cfg);
  require_finite_positive(r.value, "Calogero integral", pot);
  return make(Method::CalogeroI, k / r.value, a, ell, rel_err(r));
}

BoundResult upper_calogero_I(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  LogAxisSearch opts;
  opts.lo = 1e-2 * pot.scale();
  opts.hi = 1e2 * pot.scale();
  auto best = minimize_log_axis([&](double a) { return upper_calogero_I_at(pot, ell, a, cfg).value; }, opts);
  return upper_calogero_I_at(pot, ell, best.argmin, cfg);
}

double calogero_II_lhs(const Potential& pot, AngularMomentum ell, double a, double g, const QuadratureConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("Calogero radius a must be positive");
  if (!(g > 0.0)) throw DomainError("coupling g must be positive");
  const double l2 = 2.0 * ell.ell();
  auto f = [&](double r) {
    const double V = g * pot.evaluate(r);
    if (V == 0.0) return 0.0;
    const double q = std::pow(r / a, l2);
    return V / (q + a * a * V / q);
  };
  return a * integrate_over(f, potential_domain(pot), cfg).value;
}

namespace {

// Smallest g in [lo_limit, hi_limit] with lhs(g) >= 1, for lhs increasing in g.
double threshold_coupling(const std::function<double(double)>& lhs, double g_start, const char* what) {
  double lo = g_start, hi = g_start;
  while (lhs(lo) >= 1.0) {
    hi = lo;
    lo *= 0.5;
    if (lo < kCalogeroGMin) throw RangeError(std::string(what) + ": condition holds down to g = 1e-6");
  }
  while (lhs(hi) < 1.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > kCalogeroGMax) throw RangeError(std::string(what) + ": condition never holds up to g = 1e6");
  }
  for (int it = 0; it < kBisectionMaxIter && hi / lo - 1.0 > kBisectionRelWidth; ++it) {
    const double mid = std::sqrt(lo * hi);
    (lhs(mid) >= 1.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

BoundResult upper_calogero_II_at(const Potential& pot, AngularMomentum ell, double a, double g_trial,
                                 const QuadratureConfig& cfg) {
  if (!(g_trial > 0.0)) g_trial = 1.0;
  g_trial = std::clamp(g_trial, kCalogeroGMin, kCalogeroGMax);
  const double g = threshold_coupling([&](double gg) { return calogero_II_lhs(pot, ell, a, gg, cfg); },
                                      g_trial, "calogero_2");
  return make(Method::CalogeroII, g, a, ell, kBisectionRelWidth);
}

BoundResult upper_calogero_II(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  double a_best = pot.scale();
  auto max_lhs = [&](double g) {
    LogAxisSearch opts;
    opts.lo = 1e-2 * pot.scale();
    opts.hi = 1e2 * pot.scale();
    auto best = minimize_log_axis([&](double a) { return -calogero_II_lhs(pot, ell, a, g, cfg); }, opts);
    a_best = best.argmin;
    return -best.value;
  };
  // Seed from the Bargmann-Schwinger scale, which is at or below every upper limit.
  const double seed = lower_bargmann_schwinger(pot, ell, cfg).value;
  const double g = threshold_coupling(max_lhs, seed, "calogero_2");
  max_lhs(g);
  return make(Method::CalogeroII, g, a_best, ell, kBisectionRelWidth);
}

BoundResult upper_variational_at(const Potential& pot, AngularMomentum ell, double p, const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw DomainError("trial exponent p must be positive");
  const double s = peak_r2v(pot);
  auto parts = variational_parts(pot, ell, p, s, cfg);
  require_finite_positive(parts.numerator.value, "trial-function norm integral", pot);
  require_finite_positive(parts.denominator.value, "trial-function kernel integral", pot);
  const double value = ell.half_integer() * parts.numerator.value / (std::sqrt(s) * parts.denominator.value);
  return make(Method::Variational, value, p, ell, rel_err(parts.numerator) + rel_err(parts.denominator));
}

BoundResult upper_variational(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  LogAxisSearch opts;
  auto best = minimize_log_axis([&](double p) { return upper_variational_at(pot, ell, p, cfg).value; }, opts);
  return upper_variational_at(pot, ell, best.argmin, cfg);
}

BoundResult upper_variational_square_well(AngularMomentum ell) {
  const double L = ell.half_integer();
  const double root = std::sqrt(L + 1.0);
  return make(Method::VariationalClosedForm, L * (root + 1.0) * (root + 1.0), root, ell, 0.0);
}

double sufficient_condition_lhs(const Potential& pot, AngularMomentum ell, double g, double p,
                                const QuadratureConfig& cfg) {
  if (!(g > 0.0)) throw DomainError("coupling g must be positive");
  if (!(p > 0.0)) throw DomainError("trial exponent p must be positive");
  const double L = ell.half_integer();
  const Domain d = potential_domain(pot);
  // F~(q; x) = x^q |V|^((q+1)/2), |V| = g v
  auto tilde = [&](double q, double x) {
    const double V = g * pot.evaluate(x);
    if (V <= 0.0) return 0.0;
    return std::exp(q * std::log(x) + 0.5 * (q + 1.0) * std::log(V));
  };
  auto out = [&](double x) { return tilde(p, x) * std::pow(x, -L); };
  auto in = [&](double y) { return tilde(p, y) * std::pow(y, L); };
  const double nested = nested_double(out, in, cfg, d).value;
  const double norm = L * integrate_over([&](double x) { return tilde(2.0 * p - 1.0, x); }, d, cfg).value;
  if (!(norm > 0.0) || !std::isfinite(nested)) return 0.0;
  return nested / norm;
}

bool sufficient_condition_holds(const Potential& pot, AngularMomentum ell, double g, double p,
                                const QuadratureConfig& cfg) {
  return sufficient_condition_lhs(pot, ell, g, p, cfg) >= 1.0;
}

}  // namespace gcrit
