#pragma once

#include <optional>
#include <string_view>

#include "gcrit/potential.hpp"
#include "gcrit/quad.hpp"

namespace gcrit {

enum class Method {
  BargmannSchwinger,
  SecondOrder,
  ThirdOrder,
  GGMT,
  CalogeroI,
  CalogeroII,
  Variational,
  VariationalClosedForm,
};

enum class Side { Lower, Upper };

std::string_view to_string(Method m);
std::string_view to_string(Side s);
/// Accepts the snake_case names used on the command line ("bargmann_schwinger", "ggmt", ...).
Method parse_method(std::string_view name);
Side side_of(Method m);
bool has_free_parameter(Method m);

/// One bound on the critical coupling g_c of a partial wave.
struct BoundResult {
  Method method;
  Side side;
  double value;
  /// p for GGMT and Variational, a for the Calogero bounds.
  std::optional<double> optimal_param;
  AngularMomentum ell;
  double error_estimate = 0.0;
  /// The optimizer stopped on a hard parameter limit (GGMT p cap).
  bool param_at_limit = false;
};

// Lower limits (necessary conditions for binding).

/// (2l+1) / \int x v
BoundResult lower_bargmann_schwinger(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);
/// Two-fold nested necessary condition.
BoundResult lower_second_order(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);
/// Three-fold nested necessary condition.
BoundResult lower_third_order(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);
/// Glaser-Grosse-Martin-Thirring bound at fixed p >= 1.
BoundResult lower_ggmt_at(const Potential& pot, AngularMomentum ell, double p, const QuadratureConfig& cfg);
/// GGMT maximized over p in [1, 50].
BoundResult lower_ggmt(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);

// Upper limits (sufficient conditions for binding).

BoundResult upper_calogero_I_at(const Potential& pot, AngularMomentum ell, double a, const QuadratureConfig& cfg);
/// Minimized over the matching radius a > 0.
BoundResult upper_calogero_I(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);

/// Left side of Calogero's second condition at radius a and strength g.
double calogero_II_lhs(const Potential& pot, AngularMomentum ell, double a, double g, const QuadratureConfig& cfg);
/// Smallest g whose left side reaches 1 at this fixed a. `g_trial` seeds the bracket.
BoundResult upper_calogero_II_at(const Potential& pot, AngularMomentum ell, double a, double g_trial,
                                 const QuadratureConfig& cfg);
/// Smallest g for which some a > 0 satisfies the condition: bisection on g
/// with an inner maximization over a.
BoundResult upper_calogero_II(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);

/// Birman-Schwinger variational bound with the power-law trial function of exponent p > 0.
BoundResult upper_variational_at(const Potential& pot, AngularMomentum ell, double p, const QuadratureConfig& cfg);
/// Minimized over p > 0.
BoundResult upper_variational(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);
/// Closed-form optimum for the square well: L (sqrt(L+1) + 1)^2, L = l + 1/2.
BoundResult upper_variational_square_well(AngularMomentum ell);

/// Left side of the sufficient condition evaluated with |V| = g v.
double sufficient_condition_lhs(const Potential& pot, AngularMomentum ell, double g, double p,
                                const QuadratureConfig& cfg);
/// True iff the potential g v is guaranteed to bind an ell-wave state.
bool sufficient_condition_holds(const Potential& pot, AngularMomentum ell, double g, double p,
                                const QuadratureConfig& cfg);

}  // namespace gcrit
