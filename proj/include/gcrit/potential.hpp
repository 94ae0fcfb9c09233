#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcrit {

enum class PotentialKind { SquareWell, Exponential, Yukawa, Stis, Shell, Tabulated };

std::string_view to_string(PotentialKind kind);
/// Accepts the snake_case names used in config files ("square_well", "stis", ...).
PotentialKind parse_potential_kind(std::string_view name);

/// Orbital angular momentum of a partial wave.
class AngularMomentum {
 public:
  explicit AngularMomentum(int ell);
  int ell() const noexcept { return ell_; }
  /// ell + 1/2
  double half_integer() const noexcept { return ell_ + 0.5; }
  /// 2 ell + 1
  double multiplicity() const noexcept { return 2.0 * ell_ + 1.0; }
  friend bool operator==(AngularMomentum, AngularMomentum) = default;

 private:
  int ell_;
};

struct GridPoint {
  double radius;
  double value;
};

/// Nonnegative radial shape v(r) of an attractive potential V(r) = -g v(r).
///
/// Built-in shapes carry the R-scaling that makes g dimensionless:
///   square well  R^-2 theta(R - r)
///   exponential  R^-2 exp(-r/R)
///   yukawa       (r R)^-1 exp(-r/R)
///   stis         (R + r)^-2 on [0, alpha R], zero beyond
///   shell        1/(w R) on [R, R + w], a finite-width stand-in for delta(r - R)
/// Tabulated shapes interpolate linearly between grid points, hold the first
/// value below the first radius and vanish beyond the last one.
///
/// Instances are immutable.
class Potential {
 public:
  static Potential square_well(double R);
  static Potential exponential(double R);
  static Potential yukawa(double R);
  static Potential stis(double R, double alpha);
  static Potential shell(double R, double width);
  static Potential tabulated(std::vector<GridPoint> grid);

  PotentialKind kind() const noexcept { return kind_; }
  double scale() const noexcept { return R_; }
  double alpha() const noexcept { return alpha_; }
  double shell_width() const noexcept { return width_; }
  const std::vector<GridPoint>& grid() const noexcept { return grid_; }

  /// v(r); throws DomainError for r <= 0.
  double evaluate(double r) const;
  double operator()(double r) const { return evaluate(r); }

  /// End of the support for compactly supported shapes.
  std::optional<double> compact_support() const;
  /// Radii where v or its derivative is not smooth (support edges, grid knots).
  std::vector<double> breakpoints() const;
  /// True when v(r) diverges like 1/r at the origin.
  bool singular_at_origin() const noexcept { return kind_ == PotentialKind::Yukawa; }

  /// Same shape with every length multiplied by `factor`. Tabulated grids are
  /// rescaled so that g stays dimensionless (radii * f, values / f^2).
  Potential rescaled(double factor) const;

  std::string describe() const;

 private:
  Potential(PotentialKind kind, double R, double alpha, double width, std::vector<GridPoint> grid);

  PotentialKind kind_;
  double R_;
  double alpha_;
  double width_;
  std::vector<GridPoint> grid_;
};

struct RegularityDiagnostics {
  bool origin_ok = false;
  bool infinity_ok = false;
  /// r^{2-eps} v(r) at r = 2^-k, k = 0..40
  std::vector<double> origin_samples;
  /// r^{2+eps} v(r) at r = 2^k, k = 0..40
  std::vector<double> infinity_samples;
  std::string message;

  bool passed() const noexcept { return origin_ok && infinity_ok; }
};

/// Numerical proxy for lim_{r->0} r^{2-eps} v = 0 and lim_{r->inf} r^{2+eps} v = 0.
/// Samples a geometric ladder of radii (relative to the potential scale) and
/// requires the last three samples on each side to be non-increasing and
/// either zero or strictly below the third-to-last. Never throws on a failing
/// potential.
RegularityDiagnostics validate_regularity(const Potential& pot, double eps);

/// Radius beyond which r v(r) < tail_tol on every sampled radius. Compact
/// shapes return their exact cutoff. Throws TruncationError when the tail is
/// still above tail_tol at `max_radius`.
double support_radius(const Potential& pot, double tail_tol, double max_radius = 1e4);

/// Reads a two-column CSV (radius, value). A non-numeric first line is
/// treated as a header.
std::vector<GridPoint> load_grid_csv(const std::string& path);

}  // namespace gcrit
