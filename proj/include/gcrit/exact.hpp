#pragma once

#include <cstddef>
#include <vector>

#include "gcrit/potential.hpp"
#include "gcrit/quad.hpp"

namespace gcrit {

/// Zero-energy free Green's function (2l+1)^-1 r_<^(l+1) r_>^-l.
double greens_function(AngularMomentum ell, double r, double rp);

// ---------------------------------------------------------------------------
// Shooting oracle

/// Reduced radial wavefunction u and its derivative at radius r.
struct ShootingState {
  double r;
  double u;
  double du;
};

/// Integrates u'' = [l(l+1)/r^2 - g v(r)] u outward from the regular series
/// start u = r^(l+1) to `r_end` with an adaptive Dormand-Prince 5(4) stepper,
/// restarting at every breakpoint of v.
ShootingState integrate_zero_energy(const Potential& pot, AngularMomentum ell, double g, double r_end,
                                    const QuadratureConfig& cfg);

/// Radius where the interior solution is matched to A r^(l+1) + B r^-l.
double matching_radius(const Potential& pot, const QuadratureConfig& cfg);

/// Coefficient A of the growing solution r^(l+1) outside the potential. A > 0
/// below the first threshold; A = 0 exactly at a critical coupling.
double shoot_zero_energy(const Potential& pot, AngularMomentum ell, double g, const QuadratureConfig& cfg);

/// Smallest g with A(g) = 0: geometric scan upward from the Bargmann-Schwinger
/// bound, then bisection to relative width 1e-10. Throws RangeError if no sign
/// change appears below g = 1e8.
double critical_coupling_shooting(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg);

// ---------------------------------------------------------------------------
// Nystrom oracle

/// Symmetric discretization of the Birman-Schwinger kernel
/// K(r, r') = v(r)^1/2 g_l(r, r') v(r')^1/2 on [0, R_eff].
struct KernelDiscretization {
  std::vector<double> nodes;
  std::vector<double> weights;
  /// Row-major n x n, entries ~ sqrt(w_i w_j) K(x_i, x_j).
  std::vector<double> matrix;

  std::size_t size() const noexcept { return nodes.size(); }
  double operator()(std::size_t i, std::size_t j) const { return matrix[i * nodes.size() + j]; }
};

/// Upper end of the Nystrom domain: the support edge, or the radius beyond
/// which the first moment of v has a tail below 1e-12.
double nystrom_cutoff(const Potential& pot, const QuadratureConfig& cfg);

/// Composite Gauss-Legendre discretization with n nodes (n >= 8). Off-panel
/// entries are plain sqrt(w_i w_j) K_ij. Within a panel the kink of g_l on the
/// diagonal is integrated exactly by splitting the panel at each node and
/// interpolating v^1/2 phi over the panel nodes; the resulting block is
/// symmetrized.
KernelDiscretization discretize_kernel(const Potential& pot, AngularMomentum ell, std::size_t n,
                                       const QuadratureConfig& cfg);

struct DominantEigenpair {
  double value;
  std::vector<double> vector;
  int iterations;
};

/// Power iteration on a symmetric matrix. Stops when the Rayleigh quotient
/// changes by less than rel_tol; throws AccuracyError after max_iter.
DominantEigenpair power_iteration(const std::vector<double>& matrix, std::size_t n, double rel_tol = 1e-12,
                                  int max_iter = 20000);

/// 1 / (largest eigenvalue of the discretized kernel). The eigenvector must be
/// sign-definite (ground state); otherwise AccuracyError.
double critical_coupling_nystrom(const Potential& pot, AngularMomentum ell, std::size_t n,
                                 const QuadratureConfig& cfg);

// ---------------------------------------------------------------------------
// Analytic thresholds

/// J_nu(x) by its power series; accurate for moderate x (x < ~25).
double bessel_j(double nu, double x);
/// First positive zero of J_nu, nu >= -1/2.
double bessel_first_zero(double nu);

/// Square well: j_{l-1/2, 1}^2.
double square_well_exact(AngularMomentum ell);
/// Exponential s-wave: (j_{0,1} / 2)^2.
double exponential_exact_swave();
/// STIS s-wave: solves lambda ln(1 + alpha) + 2 atan(lambda) = 2 pi with lambda = sqrt(4 g - 1).
double stis_exact_swave(double alpha);

}  // namespace gcrit
