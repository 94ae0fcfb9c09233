#include "gcrit/exact.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numeric>

#include "gcrit/error.hpp"
#include "gcrit/limits.hpp"

namespace gcrit {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kOdeRelTol = 1e-11;
constexpr double kShootingRelWidth = 1e-10;
constexpr double kShootingGMax = 1e8;
constexpr double kTailMoment = 1e-12;
constexpr std::size_t kPanelOrder = 10;

using OdeState = std::array<double, 2>;

}  // namespace

double greens_function(AngularMomentum ell, double r, double rp) {
  const double lo = std::min(r, rp), hi = std::max(r, rp);
  const int l = ell.ell();
  return std::pow(lo, l + 1) * std::pow(hi, -l) / ell.multiplicity();
}

double matching_radius(const Potential& pot, const QuadratureConfig& cfg) {
  if (auto cut = pot.compact_support()) return *cut;
  return 1.5 * support_radius(pot, 1e-12, cfg.max_radius);
}

ShootingState integrate_zero_energy(const Potential& pot, AngularMomentum ell, double g, double r_end,
                                    const QuadratureConfig& cfg) {
  (void)cfg;
  if (!(g > 0.0)) throw DomainError("coupling g must be positive");
  const double l = ell.ell();
  const double centrifugal = l * (l + 1.0);
  const double r0 = (pot.singular_at_origin() ? 1e-8 : 1e-6) * pot.scale();
  if (!(r_end > r0)) throw DomainError("shooting end radius must exceed the series start");

  OdeState y{std::pow(r0, l + 1.0), (l + 1.0) * std::pow(r0, l)};
  auto rhs = [&](const OdeState& s, OdeState& ds, double r) {
    ds[0] = s[1];
    ds[1] = (centrifugal / (r * r) - g * pot.evaluate(r)) * s[0];
  };

  std::vector<double> stops;
  for (double b : pot.breakpoints()) {
    if (b > r0 && b < r_end) stops.push_back(b);
  }
  std::sort(stops.begin(), stops.end());
  stops.push_back(r_end);

  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<OdeState>>(0.0, kOdeRelTol);
  double r = r0;
  try {
    for (double stop : stops) {
      const double dt = std::min(0.1 * r, 0.5 * (stop - r));
      odeint::integrate_adaptive(stepper, rhs, y, r, stop, dt);
      r = stop;
    }
  } catch (const std::exception& e) {
    throw IntegrationError(std::string("zero-energy integration failed: ") + e.what());
  }
  if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
    throw IntegrationError("zero-energy integration produced a non-finite state");
  }
  return {r, y[0], y[1]};
}

double shoot_zero_energy(const Potential& pot, AngularMomentum ell, double g, const QuadratureConfig& cfg) {
  const double R = matching_radius(pot, cfg);
  const auto s = integrate_zero_energy(pot, ell, g, R, cfg);
  const double l = ell.ell();
  return (s.r * s.du + l * s.u) / (ell.multiplicity() * std::pow(s.r, l + 1.0));
}

double critical_coupling_shooting(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  auto A = [&](double g) { return shoot_zero_energy(pot, ell, g, cfg); };
  double lo = lower_bargmann_schwinger(pot, ell, cfg).value;
  for (int guard = 0; A(lo) <= 0.0; ++guard) {
    if (guard > 60) throw RangeError("shooting: no sub-critical coupling found");
    lo *= 0.5;
  }
  double hi = lo;
  for (;;) {
    hi *= 1.25;
    if (hi > kShootingGMax) throw RangeError("shooting: no bound state appears below g = 1e8");
    if (A(hi) <= 0.0) break;
    lo = hi;
  }
  while ((hi - lo) > kShootingRelWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    (A(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double nystrom_cutoff(const Potential& pot, const QuadratureConfig& cfg) {
  if (auto cut = pot.compact_support()) return *cut;
  double X = support_radius(pot, 1e-13, cfg.max_radius);
  auto moment = [&](double x) { return x * pot.evaluate(x); };
  while (integrate_semi_infinite(moment, X, cfg).value > kTailMoment) {
    X *= 1.2;
    if (X > cfg.max_radius) throw TruncationError("Nystrom cutoff exceeds max_radius for " + pot.describe());
  }
  return X;
}

namespace {

struct PanelLayout {
  std::vector<double> edges;
  std::vector<std::size_t> orders;
};

PanelLayout layout_panels(const Potential& pot, double cutoff, std::size_t n) {
  const std::size_t panels = std::max<std::size_t>(1, n / kPanelOrder);

  std::vector<double> seg{0.0};
  for (double b : pot.breakpoints()) {
    if (b > 0.0 && b < cutoff) seg.push_back(b);
  }
  seg.push_back(cutoff);
  std::sort(seg.begin(), seg.end());
  seg.erase(std::unique(seg.begin(), seg.end()), seg.end());
  // Too many kinks to align with: use uniform panels and let interpolation absorb them.
  if (seg.size() - 1 > panels / 2) seg = {0.0, cutoff};

  const std::size_t nseg = seg.size() - 1;
  std::vector<std::size_t> count(nseg, 1);
  std::size_t assigned = nseg;
  while (assigned < panels) {
    // Give the next panel to the segment with the widest panels.
    std::size_t best = 0;
    double widest = 0.0;
    for (std::size_t s = 0; s < nseg; ++s) {
      const double w = (seg[s + 1] - seg[s]) / count[s];
      if (w > widest) widest = w, best = s;
    }
    ++count[best];
    ++assigned;
  }

  PanelLayout out;
  out.edges.push_back(0.0);
  for (std::size_t s = 0; s < nseg; ++s) {
    for (std::size_t k = 1; k <= count[s]; ++k) {
      out.edges.push_back(seg[s] + (seg[s + 1] - seg[s]) * k / count[s]);
    }
  }
  const std::size_t np = out.edges.size() - 1;
  out.orders.assign(np, n / np);
  for (std::size_t i = 0; i < n % np; ++i) ++out.orders[i];
  return out;
}

// L_j(y) for Lagrange basis on `nodes`, barycentric form.
void lagrange_basis(const std::vector<double>& nodes, const std::vector<double>& bary, double y,
                    std::vector<double>& out) {
  const std::size_t m = nodes.size();
  out.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    if (y == nodes[j]) {
      out[j] = 1.0;
      return;
    }
  }
  double denom = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = bary[j] / (y - nodes[j]);
    denom += out[j];
  }
  for (auto& v : out) v /= denom;
}

}  // namespace

KernelDiscretization discretize_kernel(const Potential& pot, AngularMomentum ell, std::size_t n,
                                       const QuadratureConfig& cfg) {
  if (n < 8) throw DomainError("Nystrom discretization needs at least 8 nodes");
  const double cutoff = nystrom_cutoff(pot, cfg);
  const auto layout = layout_panels(pot, cutoff, n);
  const std::size_t np = layout.orders.size();

  KernelDiscretization K;
  K.nodes.reserve(n);
  K.weights.reserve(n);
  std::vector<std::size_t> first(np + 1, 0);
  for (std::size_t p = 0; p < np; ++p) {
    const auto& gl = gauss_legendre(static_cast<int>(layout.orders[p]));
    const double a = layout.edges[p], b = layout.edges[p + 1];
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    for (std::size_t q = 0; q < layout.orders[p]; ++q) {
      K.nodes.push_back(c + h * gl.nodes[q]);
      K.weights.push_back(h * gl.weights[q]);
    }
    first[p + 1] = K.nodes.size();
  }

  std::vector<double> sqrt_v(n), sqrt_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    sqrt_v[i] = std::sqrt(pot.evaluate(K.nodes[i]));
    sqrt_w[i] = std::sqrt(K.weights[i]);
  }

  // G[i][j] approximates \int g(x_i, y) [v^1/2 phi](y) dy as sum_j G_ij [v^1/2 phi](x_j).
  std::vector<double> G(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) G[i * n + j] = greens_function(ell, K.nodes[i], K.nodes[j]) * K.weights[j];
  }

  std::vector<double> basis;
  for (std::size_t p = 0; p < np; ++p) {
    const std::size_t lo = first[p], hi = first[p + 1], m = hi - lo;
    const std::vector<double> local(K.nodes.begin() + lo, K.nodes.begin() + hi);
    std::vector<double> bary(m, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (k != j) bary[j] /= (local[j] - local[k]);
      }
    }
    const auto& gl = gauss_legendre(static_cast<int>(m));
    const double a = layout.edges[p], b = layout.edges[p + 1];
    for (std::size_t i = lo; i < hi; ++i) {
      const double xi = K.nodes[i];
      for (std::size_t j = lo; j < hi; ++j) G[i * n + j] = 0.0;
      for (auto [s, t] : {std::pair{a, xi}, std::pair{xi, b}}) {
        const double h = 0.5 * (t - s), c = 0.5 * (t + s);
        for (std::size_t q = 0; q < m; ++q) {
          const double y = c + h * gl.nodes[q];
          const double wg = h * gl.weights[q] * greens_function(ell, xi, y);
          lagrange_basis(local, bary, y, basis);
          for (std::size_t j = 0; j < m; ++j) G[i * n + lo + j] += wg * basis[j];
        }
      }
    }
  }

  // Similarity transform by W^1/2 makes the off-panel part exactly symmetric.
  K.matrix.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      K.matrix[i * n + j] = sqrt_v[i] * sqrt_v[j] * sqrt_w[i] / sqrt_w[j] * G[i * n + j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (K.matrix[i * n + j] + K.matrix[j * n + i]);
      K.matrix[i * n + j] = K.matrix[j * n + i] = avg;
    }
  }
  return K;
}

DominantEigenpair power_iteration(const std::vector<double>& matrix, std::size_t n, double rel_tol, int max_iter) {
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double lambda = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = &matrix[i * n];
      y[i] = std::inner_product(row, row + n, x.begin(), 0.0);
    }
    const double rq = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (!(norm > 0.0)) throw AccuracyError("power iteration: matrix annihilates the iterate", 0.0);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (it > 1 && std::abs(rq - lambda) <= rel_tol * std::abs(rq)) return {rq, x, it};
    lambda = rq;
  }
  throw AccuracyError("power iteration stagnated", lambda);
}

double critical_coupling_nystrom(const Potential& pot, AngularMomentum ell, std::size_t n,
                                 const QuadratureConfig& cfg) {
  const auto K = discretize_kernel(pot, ell, n, cfg);
  const auto eig = power_iteration(K.matrix, n);
  if (!(eig.value > 0.0)) throw AccuracyError("kernel has no positive eigenvalue", eig.value);

  // The ground state of a positive kernel has no nodes. Tail components below the
  // eigenvector's convergence error may flip sign, so test the mass of the minority sign.
  double pos = 0.0, neg = 0.0;
  for (double c : eig.vector) (c > 0.0 ? pos : neg) += c * c;
  if (std::min(pos, neg) > 1e-8 * (pos + neg)) {
    throw AccuracyError("power iteration converged to an excited state", 1.0 / eig.value);
  }
  return 1.0 / eig.value;
}

}  // namespace gcrit
