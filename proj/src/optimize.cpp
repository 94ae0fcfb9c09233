#include "gcrit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gcrit/error.hpp"

namespace gcrit {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

double safe_eval(const std::function<double(double)>& f, double x) {
  try {
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  } catch (const AccuracyError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

ScalarMinimum golden_section(const std::function<double(double)>& f, double a, double b,
                             double abs_width) {
  ScalarMinimum out;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  out.evaluations = 2;
  while (std::abs(b - a) > abs_width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++out.evaluations;
  }
  if (fc < fd) {
    out.argmin = c;
    out.value = fc;
  } else {
    out.argmin = d;
    out.value = fd;
  }
  return out;
}

ScalarMinimum minimize_log_axis(const std::function<double(double)>& f, const LogAxisSearch& opts) {
  double lo = std::max(opts.lo, opts.floor);
  double hi = std::min(opts.hi, opts.ceiling);
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("log-axis search needs 0 < lo < hi");

  const int n = std::max(opts.prescan_points, 3);
  std::vector<double> u(n), fu(n);
  int evaluations = 0;
  int best = 0;
  for (int expansion = 0;; ++expansion) {
    const double ulo = std::log(lo), uhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
      u[i] = ulo + (uhi - ulo) * i / (n - 1);
      fu[i] = safe_eval(f, std::exp(u[i]));
    }
    evaluations += n;
    best = static_cast<int>(std::min_element(fu.begin(), fu.end()) - fu.begin());
    if (!std::isfinite(fu[best])) {
      throw AccuracyError("optimizer found no finite objective value in its bracket", fu[best]);
    }
    if (expansion >= opts.max_expansions) break;
    if (best == 0 && lo > opts.floor && lo > std::numeric_limits<double>::min()) {
      lo = std::max(lo * 1e-2, opts.floor);
      if (lo == 0.0) lo = std::exp(u[0]) * 1e-2;
      continue;
    }
    if (best == n - 1 && hi < opts.ceiling) {
      hi = std::min(hi * 1e2, opts.ceiling);
      continue;
    }
    break;
  }

  const double a = u[std::max(best - 1, 0)];
  const double b = u[std::min(best + 1, n - 1)];
  auto in_log = [&](double s) { return f(std::exp(s)); };
  ScalarMinimum refined = golden_section(in_log, a, b, opts.rel_width);
  ScalarMinimum out;
  out.evaluations = evaluations + refined.evaluations;
  if (refined.value <= fu[best]) {
    out.argmin = std::exp(refined.argmin);
    out.value = refined.value;
  } else {
    out.argmin = std::exp(u[best]);
    out.value = fu[best];
  }
  const double edge_tol = 4.0 * opts.rel_width;
  out.at_limit = (opts.floor > 0.0 && std::log(out.argmin / opts.floor) < edge_tol) ||
                 (std::isfinite(opts.ceiling) && std::log(opts.ceiling / out.argmin) < edge_tol);
  return out;
}

}  // namespace gcrit
