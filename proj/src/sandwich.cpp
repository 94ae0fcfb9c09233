#include "gcrit/sandwich.hpp"

#include <algorithm>

#include "gcrit/exact.hpp"

namespace gcrit {

double SandwichReport::max_lower() const {
  return std::max({bargmann_schwinger.value, second_order.value, third_order.value, ggmt.value});
}

double SandwichReport::min_upper() const {
  double best = std::min({calogero_1.value, calogero_2.value, variational.value});
  if (closed_form) best = std::min(best, closed_form->value);
  return best;
}

SandwichReport sandwich(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg,
                        const SandwichOptions& opts) {
  SandwichReport r{
      .potential = pot.describe(),
      .ell = ell.ell(),
      .bargmann_schwinger = lower_bargmann_schwinger(pot, ell, cfg),
      .second_order = lower_second_order(pot, ell, cfg),
      .third_order = lower_third_order(pot, ell, cfg),
      .ggmt = lower_ggmt(pot, ell, cfg),
      .g_shooting = critical_coupling_shooting(pot, ell, cfg),
      .g_nystrom = critical_coupling_nystrom(pot, ell, opts.nystrom_nodes, cfg),
      .calogero_1 = upper_calogero_I(pot, ell, cfg),
      .calogero_2 = upper_calogero_II(pot, ell, cfg),
      .variational = upper_variational(pot, ell, cfg),
  };
  if (pot.kind() == PotentialKind::SquareWell) r.closed_form = upper_variational_square_well(ell);

  const double g = r.g_shooting;
  r.lower_margin = (g - r.max_lower()) / g;
  r.upper_margin = (r.min_upper() - g) / g;
  r.ordered = r.lower_margin >= -opts.tolerance && r.upper_margin >= -opts.tolerance;

  const double slack = 1.0 + opts.tolerance;
  r.monotone_lower = r.bargmann_schwinger.value <= r.second_order.value * slack &&
                     r.second_order.value <= r.third_order.value * slack;
  return r;
}

}  // namespace gcrit
