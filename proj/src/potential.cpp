#include "gcrit/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gcrit/error.hpp"

namespace gcrit {

namespace {

void require_positive(double x, const char* field) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ConfigError(std::string(field) + " must be a positive finite number", field);
  }
}

constexpr int kLadderSteps = 40;

bool ladder_decays(const std::vector<double>& s) {
  const std::size_t n = s.size();
  const double a = s[n - 3], b = s[n - 2], c = s[n - 1];
  if (!(a >= b && b >= c)) return false;
  return c == 0.0 || c < a;
}

}  // namespace

std::string_view to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::SquareWell: return "square_well";
    case PotentialKind::Exponential: return "exponential";
    case PotentialKind::Yukawa: return "yukawa";
    case PotentialKind::Stis: return "stis";
    case PotentialKind::Shell: return "shell";
    case PotentialKind::Tabulated: return "tabulated";
  }
  return "unknown";
}

PotentialKind parse_potential_kind(std::string_view name) {
  for (auto k : {PotentialKind::SquareWell, PotentialKind::Exponential, PotentialKind::Yukawa,
                 PotentialKind::Stis, PotentialKind::Shell, PotentialKind::Tabulated}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown potential kind '" + std::string(name) + "'", "kind");
}

AngularMomentum::AngularMomentum(int ell) : ell_(ell) {
  if (ell < 0) throw DomainError("angular momentum must be nonnegative");
}

Potential::Potential(PotentialKind kind, double R, double alpha, double width,
                     std::vector<GridPoint> grid)
    : kind_(kind), R_(R), alpha_(alpha), width_(width), grid_(std::move(grid)) {}

Potential Potential::square_well(double R) {
  require_positive(R, "R");
  return {PotentialKind::SquareWell, R, 0.0, 0.0, {}};
}

Potential Potential::exponential(double R) {
  require_positive(R, "R");
  return {PotentialKind::Exponential, R, 0.0, 0.0, {}};
}

Potential Potential::yukawa(double R) {
  require_positive(R, "R");
  return {PotentialKind::Yukawa, R, 0.0, 0.0, {}};
}

Potential Potential::stis(double R, double alpha) {
  require_positive(R, "R");
  require_positive(alpha, "alpha");
  return {PotentialKind::Stis, R, alpha, 0.0, {}};
}

Potential Potential::shell(double R, double width) {
  require_positive(R, "R");
  require_positive(width, "shell_width");
  return {PotentialKind::Shell, R, 0.0, width, {}};
}

Potential Potential::tabulated(std::vector<GridPoint> grid) {
  if (grid.empty()) throw ConfigError("tabulated potential needs a non-empty grid", "grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& p = grid[i];
    if (!std::isfinite(p.radius) || p.radius < 0.0) {
      throw ConfigError("grid radii must be finite and nonnegative", "grid");
    }
    if (!std::isfinite(p.value) || p.value < 0.0) {
      throw ConfigError("grid values must be finite and nonnegative", "grid");
    }
    if (i > 0 && !(p.radius > grid[i - 1].radius)) {
      throw ConfigError("grid radii must be strictly increasing", "grid");
    }
  }
  const double R = grid.back().radius;
  if (!(R > 0.0)) throw ConfigError("grid must extend to a positive radius", "grid");
  return {PotentialKind::Tabulated, R, 0.0, 0.0, std::move(grid)};
}

double Potential::evaluate(double r) const {
  if (!(r > 0.0)) throw DomainError("potential evaluated at non-positive radius");
  switch (kind_) {
    case PotentialKind::SquareWell:
      return r <= R_ ? 1.0 / (R_ * R_) : 0.0;
    case PotentialKind::Exponential:
      return std::exp(-r / R_) / (R_ * R_);
    case PotentialKind::Yukawa:
      return std::exp(-r / R_) / (r * R_);
    case PotentialKind::Stis:
      return r <= alpha_ * R_ ? 1.0 / ((R_ + r) * (R_ + r)) : 0.0;
    case PotentialKind::Shell:
      return (r >= R_ && r <= R_ + width_) ? 1.0 / (width_ * R_) : 0.0;
    case PotentialKind::Tabulated: {
      if (r <= grid_.front().radius) return grid_.front().value;
      if (r > grid_.back().radius) return 0.0;
      auto hi = std::lower_bound(grid_.begin(), grid_.end(), r,
                                 [](const GridPoint& p, double x) { return p.radius < x; });
      if (hi->radius == r) return hi->value;
      auto lo = hi - 1;
      const double t = (r - lo->radius) / (hi->radius - lo->radius);
      return lo->value + t * (hi->value - lo->value);
    }
  }
  return 0.0;
}

std::optional<double> Potential::compact_support() const {
  switch (kind_) {
    case PotentialKind::SquareWell: return R_;
    case PotentialKind::Stis: return alpha_ * R_;
    case PotentialKind::Shell: return R_ + width_;
    case PotentialKind::Tabulated: return grid_.back().radius;
    default: return std::nullopt;
  }
}

std::vector<double> Potential::breakpoints() const {
  switch (kind_) {
    case PotentialKind::SquareWell: return {R_};
    case PotentialKind::Stis: return {alpha_ * R_};
    case PotentialKind::Shell: return {R_, R_ + width_};
    case PotentialKind::Tabulated: {
      std::vector<double> out;
      out.reserve(grid_.size());
      for (const auto& p : grid_) {
        if (p.radius > 0.0) out.push_back(p.radius);
      }
      return out;
    }
    default: return {};
  }
}

Potential Potential::rescaled(double factor) const {
  require_positive(factor, "factor");
  if (kind_ == PotentialKind::Tabulated) {
    auto g = grid_;
    for (auto& p : g) {
      p.radius *= factor;
      p.value /= factor * factor;
    }
    return tabulated(std::move(g));
  }
  // The shell normalization 1/(wR) makes g carry dimension 1/length, so its
  // width scales with R but the coupling does not stay invariant.
  return {kind_, R_ * factor, alpha_, width_ * factor, {}};
}

std::string Potential::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (kind_ == PotentialKind::Tabulated) {
    os << "(" << grid_.size() << " points, r <= " << grid_.back().radius << ")";
    return os.str();
  }
  os << "(R=" << R_;
  if (kind_ == PotentialKind::Stis) os << ", alpha=" << alpha_;
  if (kind_ == PotentialKind::Shell) os << ", width=" << width_;
  os << ")";
  return os.str();
}

RegularityDiagnostics validate_regularity(const Potential& pot, double eps) {
  RegularityDiagnostics d;
  if (!(eps > 0.0 && eps < 1.0)) {
    d.message = "eps must lie in (0, 1)";
    return d;
  }
  const double R = pot.scale();
  for (int k = 0; k <= kLadderSteps; ++k) {
    const double r0 = R * std::ldexp(1.0, -k);
    const double r1 = R * std::ldexp(1.0, k);
    d.origin_samples.push_back(std::pow(r0, 2.0 - eps) * pot.evaluate(r0));
    d.infinity_samples.push_back(std::pow(r1, 2.0 + eps) * pot.evaluate(r1));
  }
  d.origin_ok = ladder_decays(d.origin_samples);
  d.infinity_ok = ladder_decays(d.infinity_samples);
  if (!d.origin_ok) d.message += "r^(2-eps) v(r) does not vanish as r -> 0 (more singular than 1/r^2); ";
  if (!d.infinity_ok) d.message += "r^(2+eps) v(r) does not vanish as r -> infinity (tail slower than 1/r^2); ";
  if (d.passed()) d.message = "ok";
  return d;
}

double support_radius(const Potential& pot, double tail_tol, double max_radius) {
  if (!(tail_tol > 0.0)) throw DomainError("tail_tol must be positive");
  if (auto cut = pot.compact_support()) return *cut;

  const auto tail = [&](double r) { return r * pot.evaluate(r); };
  const double R = pot.scale();

  // Find hi with tail(hi) < tol and staying below over the next octaves.
  double hi = R;
  for (;;) {
    if (hi > max_radius) {
      throw TruncationError("potential tail exceeds tolerance up to max_radius for " + pot.describe());
    }
    if (tail(hi) < tail_tol) {
      bool stays = true;
      for (int k = 1; k <= 8 && stays; ++k) {
        stays = tail(hi * std::exp2(0.25 * k)) < tail_tol;
      }
      if (stays) break;
    }
    hi *= 2.0;
  }
  double lo = hi * 0.5;
  int guard = 0;
  while (tail(lo) < tail_tol) {
    lo *= 0.5;
    if (++guard > kLadderSteps) return lo;
  }
  while ((hi - lo) > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    (tail(mid) < tail_tol ? hi : lo) = mid;
  }
  return hi;
}

std::vector<GridPoint> load_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open grid file '" + path + "'", "grid");
  std::vector<GridPoint> grid;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    row.imbue(std::locale::classic());
    GridPoint p{};
    if (!(row >> p.radius >> p.value)) {
      if (grid.empty() && lineno == 1) continue;  // header
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'radius,value'", "grid");
    }
    grid.push_back(p);
  }
  return grid;
}

}  // namespace gcrit
