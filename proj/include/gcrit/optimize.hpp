#pragma once

#include <functional>
#include <limits>

namespace gcrit {

struct LogAxisSearch {
  /// Initial bracket, in the parameter itself (not its logarithm).
  double lo = 1e-2;
  double hi = 1e2;
  /// Hard limits the bracket may never cross when it is expanded.
  double floor = 0.0;
  double ceiling = std::numeric_limits<double>::infinity();
  /// Stop when the bracket's relative width drops below this.
  double rel_width = 1e-6;
  /// Log-spaced samples taken before golden-section refinement.
  int prescan_points = 17;
  /// Each expansion widens the offending edge by a factor of 100.
  int max_expansions = 6;
};

struct ScalarMinimum {
  double argmin = 0.0;
  double value = 0.0;
  /// Minimum pinned against a hard limit (floor or ceiling).
  bool at_limit = false;
  int evaluations = 0;
};

/// Minimizes f over a positive parameter. A coarse log-spaced pre-scan picks
/// the best sample; if it sits on an edge the bracket grows outward (never past
/// floor/ceiling); golden-section search on ln(x) then refines the bracket
/// around it. Evaluations that throw gcrit::AccuracyError or return a non-finite
/// value count as +inf during the pre-scan. Throws AccuracyError when no
/// pre-scan sample is finite.
ScalarMinimum minimize_log_axis(const std::function<double(double)>& f, const LogAxisSearch& opts);

/// Plain golden-section search for a minimum of f on [a, b].
ScalarMinimum golden_section(const std::function<double(double)>& f, double a, double b, double abs_width);

}  // namespace gcrit
