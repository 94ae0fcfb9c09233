#include "gcrit/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "gcrit/error.hpp"

namespace gcrit {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw ConfigError("rel_tol must be positive", "rel_tol");
  if (!(abs_tol > 0.0)) throw ConfigError("abs_tol must be positive", "abs_tol");
  if (max_subdivisions < 1) throw ConfigError("max_subdivisions must be >= 1", "max_subdivisions");
  if (!(max_radius > 0.0)) throw ConfigError("max_radius must be positive", "max_radius");
}

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  if (order < 1) throw DomainError("Gauss-Legendre order must be >= 1");

  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double n = order;
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

namespace {

// 7-point Gauss / 15-point Kronrod abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kNodes = 15;
constexpr int kPartialOrder = 15;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Kronrod15 {
  std::array<double, kNodes> x{};   // on [-1, 1]
  std::array<double, kNodes> wk{};
  std::array<double, kNodes> wg{};  // zero on Kronrod-only nodes
  Kronrod15() {
    int q = 0;
    for (int j = 0; j < 7; ++j) {
      x[q] = -kXgk[j];
      wk[q] = kWgk[j];
      wg[q] = (j % 2 == 1) ? kWg[j / 2] : 0.0;
      ++q;
    }
    x[q] = 0.0;
    wk[q] = kWgk[7];
    wg[q] = kWg[3];
    ++q;
    for (int j = 6; j >= 0; --j) {
      x[q] = kXgk[j];
      wk[q] = kWgk[j];
      wg[q] = (j % 2 == 1) ? kWg[j / 2] : 0.0;
      ++q;
    }
  }
};

const Kronrod15& kronrod() {
  static const Kronrod15 rule;
  return rule;
}

// Kronrod value and QUADPACK-style error of samples f on a panel of half-width h.
std::pair<double, double> kronrod_estimate(const std::array<double, kNodes>& f, double h) {
  const auto& r = kronrod();
  double resk = 0.0, resg = 0.0, resabs = 0.0;
  for (int q = 0; q < kNodes; ++q) {
    resk += r.wk[q] * f[q];
    resg += r.wg[q] * f[q];
    resabs += r.wk[q] * std::abs(f[q]);
  }
  const double mean = 0.5 * resk;
  double resasc = 0.0;
  for (int q = 0; q < kNodes; ++q) resasc += r.wk[q] * std::abs(f[q] - mean);
  resk *= h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg * h));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {resk, err};
}

// Identity on finite domains, x = lower + t/(1-t) on [lower, inf).
struct Mapping {
  bool semi_infinite;
  double lower;

  double x(double t) const { return semi_infinite ? lower + t / (1.0 - t) : t; }
  double jacobian(double t) const {
    if (!semi_infinite) return 1.0;
    const double d = 1.0 - t;
    return 1.0 / (d * d);
  }
  double to_t(double x) const {
    if (!semi_infinite) return x;
    const double s = x - lower;
    return s / (1.0 + s);
  }
};

struct Panel {
  double a;
  double b;
  // Local iterated moments M[k*K + m] = \int_panel W_k lam(k+1, m), m >= k,
  // where lam(s, m)(t) = \int_a^t W_s lam(s+1, m) and lam(m+1, m) = 1.
  std::vector<double> moment;
  std::vector<double> error;
};

class ChainEngine {
 public:
  ChainEngine(std::span<const Integrand> weights, const QuadratureConfig& cfg, Mapping map)
      : w_(weights), depth_(static_cast<int>(weights.size())), cfg_(cfg), map_(map) {}

  IntegralResult run(std::vector<double> edges) {
    std::vector<Panel> panels;
    for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
      const double mid = 0.5 * (edges[s] + edges[s + 1]);
      panels.push_back(make_panel(edges[s], mid));
      panels.push_back(make_panel(mid, edges[s + 1]));
    }

    const int K = depth_;
    std::vector<std::vector<double>> prefix(K + 1);
    std::vector<double> totals(K), score, level_err(K);

    for (;;) {
      const std::size_t n = panels.size();
      for (auto& p : prefix) p.assign(n, 0.0);
      prefix[K].assign(n, 1.0);
      std::vector<std::vector<double>> panel_err(K, std::vector<double>(n, 0.0));

      for (int k = K - 1; k >= 0; --k) {
        double running = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double value = 0.0, err = 0.0;
          for (int m = k; m < K; ++m) {
            const double coef = prefix[m + 1][i];
            if (coef == 0.0) continue;
            value += coef * panels[i].moment[k * K + m];
            err += std::abs(coef) * panels[i].error[k * K + m];
          }
          prefix[k][i] = running;
          running += value;
          panel_err[k][i] = err;
        }
        totals[k] = running;
      }

      score.assign(n, 0.0);
      double total_score = 0.0;
      for (int k = 0; k < K; ++k) {
        const double allowed = std::max(cfg_.abs_tol, cfg_.rel_tol * std::abs(totals[k]));
        level_err[k] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          level_err[k] += panel_err[k][i];
          score[i] += panel_err[k][i] / allowed;
        }
      }
      for (double s : score) total_score += s;

      IntegralResult result;
      result.value = totals[0];
      result.error_estimate = level_err[0];
      for (int k = 1; k < K; ++k) {
        if (totals[k] != 0.0) result.error_estimate += std::abs(totals[0]) * level_err[k] / std::abs(totals[k]);
      }
      result.evaluations = evaluations_;

      if (!std::isfinite(result.value)) {
        throw AccuracyError("integrand produced non-finite values", result.value);
      }
      if (total_score <= 1.0) return result;

      // Split the largest contributors until the remainder is below half the budget.
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](auto l, auto r) { return score[l] > score[r]; });
      std::vector<bool> split(n, false);
      double remaining = total_score;
      std::size_t n_split = 0;
      for (auto i : order) {
        if (remaining <= 0.5) break;
        if (!splittable(panels[i])) continue;
        split[i] = true;
        remaining -= score[i];
        ++n_split;
      }
      if (n_split == 0) {
        throw AccuracyError("quadrature limited by round-off before reaching tolerance", result.value);
      }
      if (n + n_split > static_cast<std::size_t>(cfg_.max_subdivisions)) {
        throw AccuracyError("quadrature subdivision budget exhausted", result.value);
      }

      std::vector<Panel> next;
      next.reserve(n + n_split);
      for (std::size_t i = 0; i < n; ++i) {
        if (!split[i]) {
          next.push_back(std::move(panels[i]));
          continue;
        }
        const double mid = 0.5 * (panels[i].a + panels[i].b);
        next.push_back(make_panel(panels[i].a, mid));
        next.push_back(make_panel(mid, panels[i].b));
      }
      panels = std::move(next);
    }
  }

 private:
  static bool splittable(const Panel& p) {
    const double width = p.b - p.a;
    // Halves must keep every Kronrod node strictly inside after rounding.
    return width > 1024.0 * kEps * std::max(std::abs(p.a), std::abs(p.b)) &&
           width > 1e3 * std::numeric_limits<double>::min();
  }

  double weight(int k, double t) {
    ++evaluations_;
    const double v = w_[k](map_.x(t));
    if (v == 0.0) return 0.0;
    return v * map_.jacobian(t);
  }

  // lam(s, m)(t) for s_min <= s <= m < K, stored at out[s*K + m].
  void partials(int s_min, double a, double t, std::vector<double>& out) {
    const int K = depth_;
    out.assign(static_cast<std::size_t>(K) * K, 0.0);
    if (s_min >= K) return;
    const auto& gl = gauss_legendre(kPartialOrder);
    const double h = 0.5 * (t - a), c = 0.5 * (t + a);
    std::vector<double> inner;
    std::vector<double> wv(K);
    for (int i = 0; i < kPartialOrder; ++i) {
      const double u = c + h * gl.nodes[i];
      const double wq = h * gl.weights[i];
      for (int s = s_min; s < K; ++s) wv[s] = weight(s, u);
      if (s_min + 1 < K) partials(s_min + 1, a, u, inner);
      for (int s = s_min; s < K; ++s) {
        if (wv[s] == 0.0) continue;
        for (int m = s; m < K; ++m) {
          const double lam_next = (m == s) ? 1.0 : inner[(s + 1) * K + m];
          out[s * K + m] += wq * wv[s] * lam_next;
        }
      }
    }
  }

  Panel make_panel(double a, double b) {
    const int K = depth_;
    const auto& r = kronrod();
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    // samples[k*K + m][q]
    std::vector<std::array<double, kNodes>> samples(static_cast<std::size_t>(K) * K);
    std::vector<double> lam;
    for (int q = 0; q < kNodes; ++q) {
      const double t = c + h * r.x[q];
      if (K > 1) partials(1, a, t, lam);
      for (int k = 0; k < K; ++k) {
        const double wk = weight(k, t);
        for (int m = k; m < K; ++m) {
          double f = 0.0;
          if (wk != 0.0) f = wk * ((m == k) ? 1.0 : lam[(k + 1) * K + m]);
          samples[k * K + m][q] = f;
        }
      }
    }
    Panel p{a, b, std::vector<double>(K * K, 0.0), std::vector<double>(K * K, 0.0)};
    for (int k = 0; k < K; ++k) {
      for (int m = k; m < K; ++m) {
        auto [value, err] = kronrod_estimate(samples[k * K + m], h);
        p.moment[k * K + m] = value;
        p.error[k * K + m] = err;
      }
    }
    return p;
  }

  std::span<const Integrand> w_;
  int depth_;
  const QuadratureConfig& cfg_;
  Mapping map_;
  std::size_t evaluations_ = 0;
};

IntegralResult run_chain(std::span<const Integrand> weights, const QuadratureConfig& cfg,
                         const Domain& domain) {
  cfg.validate();
  if (weights.empty()) throw DomainError("nested integral needs at least one weight");
  if (!(domain.lower < domain.upper)) throw DomainError("integration requires lower < upper");
  if (!std::isfinite(domain.lower)) throw DomainError("lower integration limit must be finite");

  const Mapping map{!std::isfinite(domain.upper), domain.lower};
  std::vector<double> edges{map.to_t(domain.lower)};
  std::vector<double> bps;
  for (double x : domain.breakpoints) {
    if (x > domain.lower && x < domain.upper) bps.push_back(map.to_t(x));
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  edges.insert(edges.end(), bps.begin(), bps.end());
  edges.push_back(map.semi_infinite ? 1.0 : domain.upper);

  ChainEngine engine(weights, cfg, map);
  return engine.run(std::move(edges));
}

}  // namespace

IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                         std::span<const double> breakpoints) {
  Domain d{a, b, {breakpoints.begin(), breakpoints.end()}};
  const Integrand chain[] = {f};
  return run_chain(chain, cfg, d);
}

IntegralResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureConfig& cfg,
                                       std::span<const double> breakpoints) {
  return integrate(f, a, std::numeric_limits<double>::infinity(), cfg, breakpoints);
}

IntegralResult nested_double(const Integrand& w_out, const Integrand& w_in,
                             const QuadratureConfig& cfg, const Domain& domain) {
  const Integrand chain[] = {w_out, w_in};
  return run_chain(chain, cfg, domain);
}

IntegralResult nested_triple(const Integrand& w1, const Integrand& w2, const Integrand& w3,
                             const QuadratureConfig& cfg, const Domain& domain) {
  const Integrand chain[] = {w1, w2, w3};
  return run_chain(chain, cfg, domain);
}

IntegralResult nested_chain(std::span<const Integrand> weights, const QuadratureConfig& cfg,
                            const Domain& domain) {
  return run_chain(weights, cfg, domain);
}

}  // namespace gcrit
