#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gcrit/limits.hpp"
#include "gcrit/potential.hpp"
#include "gcrit/quad.hpp"

namespace gcrit {

struct SandwichOptions {
  /// Node count of the Nystrom oracle.
  std::size_t nystrom_nodes = 400;
  /// Relative slack allowed in the ordering checks.
  double tolerance = 1e-6;
};

/// Every lower limit, both exact oracles and every upper limit for one partial wave.
struct SandwichReport {
  std::string potential;
  int ell = 0;

  BoundResult bargmann_schwinger;
  BoundResult second_order;
  BoundResult third_order;
  BoundResult ggmt;

  double g_shooting = 0.0;
  double g_nystrom = 0.0;

  BoundResult calogero_1;
  BoundResult calogero_2;
  BoundResult variational;
  /// Present for the square well only.
  std::optional<BoundResult> closed_form = std::nullopt;

  /// (g_exact - max lower) / g_exact, with g_exact from shooting.
  double lower_margin = 0.0;
  /// (min upper - g_exact) / g_exact
  double upper_margin = 0.0;
  /// Both margins above -tolerance.
  bool ordered = false;
  /// g_BS <= g_eq2 <= g_eq3 within tolerance.
  bool monotone_lower = false;

  double max_lower() const;
  double min_upper() const;
};

/// Computes the full report. Ordering violations are recorded in the report
/// flags rather than thrown, so that a caller can print a diagnostic.
SandwichReport sandwich(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg,
                        const SandwichOptions& opts = {});

}  // namespace gcrit
