#include <cmath>

#include "doctest.h"
#include "gcrit/error.hpp"
#include "gcrit/optimize.hpp"

using namespace gcrit;

TEST_CASE("golden_section: parabola") {
  auto m = golden_section([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, -1.0, 2.0, 1e-9);
  CHECK(m.argmin == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("minimize_log_axis: interior minimum") {
  // Square-well variational objective L (p + L + 1)(p + 1) / p, L = 1/2: minimum at sqrt(1.5).
  auto f = [](double p) { return 0.5 * (p + 1.5) * (p + 1.0) / p; };
  auto m = minimize_log_axis(f, {});
  CHECK(m.argmin == doctest::Approx(std::sqrt(1.5)).epsilon(1e-5));
  CHECK(m.value == doctest::Approx(0.5 * std::pow(std::sqrt(1.5) + 1.0, 2)).epsilon(1e-12));
  CHECK_FALSE(m.at_limit);
}

TEST_CASE("minimize_log_axis: minimum beyond the initial bracket") {
  auto m = minimize_log_axis([](double x) { return std::pow(std::log(x / 5e4), 2); }, {});
  CHECK(m.argmin == doctest::Approx(5e4).epsilon(1e-5));
}

TEST_CASE("minimize_log_axis: hard limits") {
  LogAxisSearch opts;
  opts.lo = 1.0;
  opts.hi = 50.0;
  opts.floor = 1.0;
  opts.ceiling = 50.0;
  auto m = minimize_log_axis([](double x) { return -x; }, opts);
  CHECK(m.at_limit);
  CHECK(m.argmin == doctest::Approx(50.0).epsilon(1e-5));
}

TEST_CASE("minimize_log_axis: multimodal objective picks the deeper well") {
  // Shallow well at 0.05, deep one at 20; a bracket-only search from the middle could stall in either.
  auto f = [](double x) {
    const double t = std::log(x);
    return -0.5 * std::exp(-std::pow(t - std::log(0.05), 2)) - std::exp(-std::pow(t - std::log(20.0), 2));
  };
  CHECK(minimize_log_axis(f, {}).argmin == doctest::Approx(20.0).epsilon(1e-4));
}

TEST_CASE("minimize_log_axis: failing evaluations") {
  auto partial = [](double x) {
    if (x < 0.1) throw AccuracyError("no", 0.0);
    return (x - 2.0) * (x - 2.0);
  };
  CHECK(minimize_log_axis(partial, {}).argmin == doctest::Approx(2.0).epsilon(1e-5));
  CHECK_THROWS_AS(minimize_log_axis([](double) { return NAN; }, {}), AccuracyError);
}
