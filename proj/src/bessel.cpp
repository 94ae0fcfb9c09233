#include <cmath>

#include "gcrit/error.hpp"
#include "gcrit/exact.hpp"

namespace gcrit {

namespace {

// Sum of the power series of J_nu and of its derivative.
struct SeriesValue {
  double j;
  double dj;
};

SeriesValue bessel_series(double nu, double x) {
  const double half = 0.5 * x;
  const double q = half * half;
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  double sum = 0.0, dsum = 0.0;
  for (int k = 0; k < 500; ++k) {
    if (k > 0) term *= -q / (k * (k + nu));
    sum += term;
    dsum += term * (2.0 * k + nu) / x;
    if (k > x && std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return {sum, dsum};
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_j requires x > 0");
  if (nu < -1.0) throw DomainError("bessel_j requires nu > -1");
  return bessel_series(nu, x).j;
}

double bessel_first_zero(double nu) {
  if (nu < -0.5) throw DomainError("bessel_first_zero requires nu >= -1/2");
  // McMahon: j ~ beta - (4 nu^2 - 1) / (8 beta), beta = (3/4 + nu/2) pi.
  const double beta = (0.75 + 0.5 * nu) * M_PI;
  double x = beta - (4.0 * nu * nu - 1.0) / (8.0 * beta);

  for (int it = 0; it < 60; ++it) {
    const auto s = bessel_series(nu, x);
    const double dx = s.j / s.dj;
    x -= dx;
    if (std::abs(dx) < 1e-15 * x) break;
  }

  // J_nu > 0 on (0, j_1) for nu > -1: make sure Newton did not land on a later zero.
  const double step = 0.05;
  double lo = 1e-3, flo = bessel_series(nu, lo).j;
  for (double r = lo + step; r < x - 1e-9; r += step) {
    const double fr = bessel_series(nu, r).j;
    if ((flo > 0.0) != (fr > 0.0)) {
      double hi = r;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_series(nu, mid).j;
        ((fm > 0.0) == (flo > 0.0) ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    lo = r;
    flo = fr;
  }
  return x;
}

double square_well_exact(AngularMomentum ell) {
  const double j = bessel_first_zero(ell.ell() - 0.5);
  return j * j;
}

double exponential_exact_swave() {
  const double j = bessel_first_zero(0.0);
  return 0.25 * j * j;
}

double stis_exact_swave(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("STIS alpha must be positive");
  const double log1a = std::log1p(alpha);
  auto f = [&](double lambda) { return lambda * log1a + 2.0 * std::atan(lambda) - 2.0 * M_PI; };
  double lo = 0.0, hi = 1.0;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 300 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double lambda = 0.5 * (lo + hi);
  return 0.25 * (lambda * lambda + 1.0);
}

}  // namespace gcrit
