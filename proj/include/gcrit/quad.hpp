#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace gcrit {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Radius cap when locating the effective support of a decaying potential.
  double max_radius = 1e4;

  /// Throws ConfigError on non-positive tolerances or budget.
  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// [lower, upper] with interior points where the integrand is not smooth.
/// `upper` may be +infinity.
struct Domain {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  std::vector<double> breakpoints;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; thread-safe.
const GaussRule& gauss_legendre(int order);

/// Adaptive 7/15-point Gauss-Kronrod integration of f over [a, b]. `b` may be
/// +infinity. Nodes never touch the interval ends, so integrable endpoint
/// singularities are allowed. Throws AccuracyError (carrying the best
/// estimate) when the subdivision budget runs out.
IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                         std::span<const double> breakpoints = {});

/// Integral over [a, inf) through x = a + t / (1 - t).
IntegralResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureConfig& cfg,
                                       std::span<const double> breakpoints = {});

/// \int dx w_out(x) \int_lower^x dy w_in(y)
IntegralResult nested_double(const Integrand& w_out, const Integrand& w_in,
                             const QuadratureConfig& cfg, const Domain& domain = {});

/// \int dx w1(x) \int_lower^x dy w2(y) \int_lower^y dz w3(z)
IntegralResult nested_triple(const Integrand& w1, const Integrand& w2, const Integrand& w3,
                             const QuadratureConfig& cfg, const Domain& domain = {});

/// Ordered iterated integral of any depth; weights[0] is the outermost.
///
/// All levels share one adaptive partition. On each panel the local iterated
/// moments are cached, so the inner antiderivative at an outer node is a prefix
/// sum over earlier panels plus a short Gauss-Legendre partial integral inside
/// the current panel. Refinement is driven by the Kronrod error of every level,
/// each measured against its own total.
IntegralResult nested_chain(std::span<const Integrand> weights, const QuadratureConfig& cfg,
                            const Domain& domain = {});

}  // namespace gcrit
