#include <cmath>
#include <random>

#include "doctest.h"
#include "gcrit/error.hpp"
#include "gcrit/exact.hpp"

using namespace gcrit;

namespace {

const QuadratureConfig cfg{};
const AngularMomentum s_wave(0);

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("greens_function") {
  CHECK(greens_function(AngularMomentum(0), 1, 2) == 1.0);
  CHECK(greens_function(AngularMomentum(1), 2, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    const AngularMomentum ell(i % 6);
    CHECK(greens_function(ell, a, b) == greens_function(ell, b, a));
  }
}

TEST_CASE("bessel_first_zero") {
  CHECK(bessel_first_zero(-0.5) == doctest::Approx(M_PI / 2).epsilon(1e-14));
  CHECK(bessel_first_zero(0.5) == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(bessel_first_zero(0.0) == doctest::Approx(2.404825557695773).epsilon(1e-14));
  // First zero of the spherical Bessel j_1: tan x = x.
  CHECK(bessel_first_zero(1.5) == doctest::Approx(4.493409457909064).epsilon(1e-14));
  CHECK(std::abs(bessel_j(2.5, bessel_first_zero(2.5))) < 1e-13);
  CHECK_THROWS_AS(bessel_first_zero(-0.7), DomainError);
}

TEST_CASE("analytic thresholds") {
  CHECK(square_well_exact(AngularMomentum(0)) == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-14));
  CHECK(square_well_exact(AngularMomentum(1)) == doctest::Approx(M_PI * M_PI).epsilon(1e-14));
  CHECK(rel(square_well_exact(AngularMomentum(2)), 20.191) < 2e-4);
  CHECK(rel(exponential_exact_swave(), 1.4458) < 2e-4);
  CHECK(rel(stis_exact_swave(1), 6.7319) < 2e-4);
  CHECK(rel(stis_exact_swave(0.1), 282.26) < 2e-4);
  CHECK(rel(stis_exact_swave(50), 0.58684) < 2e-4);
  CHECK_THROWS_AS(stis_exact_swave(0), DomainError);
}

TEST_CASE("shoot_zero_energy: sign of the growing mode") {
  const auto sw = Potential::square_well(1);
  CHECK(shoot_zero_energy(sw, s_wave, 1.0, cfg) > 0.0);
  // Exact threshold: A vanishes to the level of the integrator tolerance.
  CHECK(std::abs(shoot_zero_energy(sw, s_wave, M_PI * M_PI / 4, cfg)) < 1e-9);
  // Past the first threshold A < 0, past the second it is positive again.
  CHECK(shoot_zero_energy(sw, s_wave, 10.0, cfg) < 0.0);
  CHECK(shoot_zero_energy(sw, s_wave, 25.0, cfg) > 0.0);

  const auto ex = Potential::exponential(1);
  const double g0 = exponential_exact_swave();
  CHECK(std::abs(shoot_zero_energy(ex, s_wave, g0, cfg)) < 1e-8);
  CHECK(shoot_zero_energy(ex, s_wave, 0.99 * g0, cfg) > 0.0);
  CHECK(shoot_zero_energy(ex, s_wave, 1.01 * g0, cfg) < 0.0);
  CHECK_THROWS_AS(shoot_zero_energy(ex, s_wave, -1.0, cfg), DomainError);
}

TEST_CASE("critical_coupling_shooting") {
  CHECK(rel(critical_coupling_shooting(Potential::square_well(1), AngularMomentum(3), cfg), 33.217) < 2e-4);
  CHECK(rel(critical_coupling_shooting(Potential::yukawa(1), s_wave, cfg), 1.6798) < 2e-4);
  CHECK(rel(critical_coupling_shooting(Potential::stis(1, 5), s_wave, cfg), 1.4875) < 2e-4);
  CHECK(rel(critical_coupling_shooting(Potential::exponential(1), s_wave, cfg), exponential_exact_swave()) < 1e-6);
  for (int l = 0; l <= 5; ++l) {
    const AngularMomentum ell(l);
    CHECK(rel(critical_coupling_shooting(Potential::square_well(1), ell, cfg), square_well_exact(ell)) < 1e-6);
  }
}

TEST_CASE("Nystrom discretization") {
  const auto K = discretize_kernel(Potential::exponential(1), AngularMomentum(2), 120, cfg);
  REQUIRE(K.size() == 120);
  for (std::size_t i = 0; i < K.size(); ++i) {
    CHECK(K.nodes[i] > 0.0);
    CHECK(K.weights[i] > 0.0);
    CHECK(K(i, i) >= 0.0);
    for (std::size_t j = 0; j < i; ++j) CHECK(K(i, j) == K(j, i));
  }
  CHECK_THROWS_AS(discretize_kernel(Potential::exponential(1), s_wave, 4, cfg), DomainError);
}

TEST_CASE("critical_coupling_nystrom") {
  CHECK(std::abs(critical_coupling_nystrom(Potential::square_well(1), s_wave, 200, cfg) - 2.4674) < 1e-4);
  CHECK(std::abs(critical_coupling_nystrom(Potential::exponential(1), AngularMomentum(4), 200, cfg) - 45.893) < 1e-2);
  CHECK(rel(critical_coupling_nystrom(Potential::exponential(1), s_wave, 400, cfg), exponential_exact_swave()) < 1e-5);

  // Error at the final resolution is the one that matters; coarser grids must not be better.
  const double exact = square_well_exact(AngularMomentum(2));
  const double e50 = rel(critical_coupling_nystrom(Potential::square_well(1), AngularMomentum(2), 50, cfg), exact);
  const double e400 = rel(critical_coupling_nystrom(Potential::square_well(1), AngularMomentum(2), 400, cfg), exact);
  CHECK(e400 < 1e-8);
  CHECK(e400 <= e50 + 1e-12);
}

TEST_CASE("power_iteration") {
  // diag(3, 1) rotated by 30 degrees.
  const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
  const std::vector<double> m{3 * c * c + s * s, 2 * c * s, 2 * c * s, 3 * s * s + c * c};
  const auto e = power_iteration(m, 2);
  CHECK(e.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(std::abs(e.vector[0]) - c) < 1e-6);
  CHECK_THROWS_AS(power_iteration({0, 0, 0, 0}, 2), AccuracyError);
}
