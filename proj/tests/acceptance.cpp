// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gcrit/error.hpp"
#include "gcrit/exact.hpp"
#include "gcrit/format.hpp"
#include "gcrit/limits.hpp"
#include "gcrit/quad.hpp"
#include "gcrit/sandwich.hpp"
#include "gcrit/tables.hpp"

using namespace gcrit;

namespace {

const QuadratureConfig cfg{};

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string num(double x, int digits = 3) { return format_number(x, digits); }

std::vector<Potential> builtins(double R = 1.0) {
  return {Potential::square_well(R), Potential::exponential(R), Potential::yukawa(R), Potential::stis(R, 1.0)};
}

// Smooth bump on [0, Rc] with a random wobble, sampled on a uniform grid.
Potential random_tabulated(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double Rc = 0.5 + 2.0 * u(rng);
  const double amp = 0.5 + 4.0 * u(rng);
  const double wobble = 0.6 * u(rng);
  const double freq = 1.0 + 5.0 * u(rng);
  const double phase = 6.28 * u(rng);
  const int n = 40 + static_cast<int>(40 * u(rng));
  std::vector<GridPoint> grid;
  for (int i = 1; i <= n; ++i) {
    const double r = Rc * i / n;
    const double x = r / Rc;
    const double v = amp * (1 - x * x) * (1 - x * x) * (1 + wobble * std::sin(freq * x + phase));
    grid.push_back({r, std::max(v, 0.0)});
  }
  return Potential::tabulated(std::move(grid));
}

Verdict table_criterion(int id) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = reproduce_table(id, cfg);
  const double elapsed = seconds_since(t0);
  double worst_g = 0.0, worst_p = 0.0;
  std::string where;
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const auto& cell = row.cells[c];
      double& worst = table.columns[c] == "p" ? worst_p : worst_g;
      if (cell.deviation > worst) worst = cell.deviation;
      if (!cell.pass()) where += " " + table.columns[c] + "@" + row.label;
    }
  }
  std::string detail = "max dev g " + num(worst_g);
  if (id > 1) detail += ", p " + num(worst_p);
  detail += ", " + num(elapsed) + " s";
  if (!where.empty()) detail += ", failing:" + where;
  bool pass = table.pass;
  if (id == 1 && elapsed >= 30.0) {
    pass = false;
    detail += " (budget 30 s)";
  }
  if (id == 4) {
    double worst_exact = 0.0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const double alpha = std::stod(table.rows[i].label);
      worst_exact = std::max(worst_exact, rel(table.rows[i].cells[3].computed, stis_exact_swave(alpha)));
    }
    pass = pass && worst_exact <= 1e-9;
    detail += ", g_c vs transcendental root " + num(worst_exact);
  }
  return {pass, detail};
}

Verdict closed_form_criterion() {
  const auto sw = Potential::square_well(1);
  double worst_g = 0.0, worst_p = 0.0;
  for (int l = 0; l <= 5; ++l) {
    const AngularMomentum ell(l);
    const auto v = upper_variational(sw, ell, cfg);
    const double L = ell.half_integer();
    worst_g = std::max(worst_g, rel(v.value, L * std::pow(std::sqrt(L + 1) + 1, 2)));
    worst_p = std::max(worst_p, std::abs(*v.optimal_param - std::sqrt(L + 1)));
  }
  return {worst_g <= 1e-7 && worst_p <= 1e-3, "max rel dev g " + num(worst_g) + ", max |p - p*| " + num(worst_p)};
}

Verdict cross_oracle_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string where;
  for (const auto& pot : builtins()) {
    for (int l = 0; l <= 5; ++l) {
      const AngularMomentum ell(l);
      const double s = critical_coupling_shooting(pot, ell, cfg);
      const double n = critical_coupling_nystrom(pot, ell, 400, cfg);
      const double d = rel(n, s);
      if (d > worst) worst = d, where = pot.describe() + " l=" + std::to_string(l);
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-5 && elapsed < 120.0,
          "24 cases, max rel gap " + num(worst) + " (" + where + "), " + num(elapsed) + " s"};
}

struct Case {
  Potential pot;
  int ell;
};

std::vector<Case> sandwich_cases() {
  std::vector<Case> cases;
  for (const auto& pot : builtins()) {
    for (int l = 0; l <= 5; ++l) cases.push_back({pot, l});
  }
  std::mt19937 rng(20240601);
  for (int i = 0; i < 10; ++i) cases.push_back({random_tabulated(rng), i % 4});
  return cases;
}

Verdict sandwich_criterion(const std::vector<SandwichReport>& reports) {
  double worst = INFINITY;
  std::string where;
  for (const auto& r : reports) {
    const double m = std::min(r.lower_margin, r.upper_margin);
    if (m < worst) worst = m, where = r.potential + " l=" + std::to_string(r.ell);
  }
  return {worst >= -1e-6, std::to_string(reports.size()) + " cases, smallest margin " + num(worst) + " (" + where + ")"};
}

Verdict monotone_criterion(const std::vector<SandwichReport>& reports) {
  double worst = INFINITY;
  std::string where;
  for (const auto& r : reports) {
    const double a = (r.second_order.value - r.bargmann_schwinger.value) / r.second_order.value;
    const double b = (r.third_order.value - r.second_order.value) / r.third_order.value;
    if (std::min(a, b) < worst) worst = std::min(a, b), where = r.potential + " l=" + std::to_string(r.ell);
  }
  return {worst >= -1e-12, "smallest relative step " + num(worst) + " (" + where + ")"};
}

Verdict scale_criterion() {
  using Bound = std::function<BoundResult(const Potential&, AngularMomentum)>;
  const std::vector<std::pair<const char*, Bound>> bounds = {
      {"bs", [](const Potential& p, AngularMomentum l) { return lower_bargmann_schwinger(p, l, cfg); }},
      {"eq2", [](const Potential& p, AngularMomentum l) { return lower_second_order(p, l, cfg); }},
      {"eq3", [](const Potential& p, AngularMomentum l) { return lower_third_order(p, l, cfg); }},
      {"ggmt", [](const Potential& p, AngularMomentum l) { return lower_ggmt(p, l, cfg); }},
      {"c1", [](const Potential& p, AngularMomentum l) { return upper_calogero_I(p, l, cfg); }},
      {"c2", [](const Potential& p, AngularMomentum l) { return upper_calogero_II(p, l, cfg); }},
      {"new", [](const Potential& p, AngularMomentum l) { return upper_variational(p, l, cfg); }},
  };
  double worst = 0.0;
  std::string where;
  const auto base = builtins(1.0);
  for (std::size_t k = 0; k < base.size(); ++k) {
    for (int l : {0, 3}) {
      const AngularMomentum ell(l);
      for (const auto& [name, bound] : bounds) {
        const double ref = bound(base[k], ell).value;
        for (double R : {0.5, 2.0}) {
          const double d = rel(bound(builtins(R)[k], ell).value, ref);
          if (d > worst) worst = d, where = std::string(name) + " " + base[k].describe() + " l=" + std::to_string(l);
        }
      }
    }
  }
  return {worst <= 1e-8, "max rel change " + num(worst) + (where.empty() ? "" : " (" + where + ")")};
}

Verdict delta_criterion() {
  const auto shell = Potential::shell(1.0, 1e-3);
  const AngularMomentum s_wave(0);
  const double bound = upper_variational_at(shell, s_wave, 1.0, cfg).value;
  const double exact = critical_coupling_shooting(shell, s_wave, cfg);
  const double ratio = bound / exact;
  return {ratio >= 1.0 && ratio <= 1.01, "ratio - 1 = " + num(ratio - 1.0)};
}

Verdict quadrature_criterion() {
  const Domain unit{0.0, 1.0, {}};
  auto one = [](double) { return 1.0; };
  auto w = [](double x) { return x * std::exp(-x) * (1.0 + 0.3 * std::sin(x)); };
  const double I = integrate_semi_infinite(w, 0.0, cfg).value;
  const double simplex = nested_triple(one, one, one, cfg, unit).value;
  const double dbl = nested_double(w, w, cfg).value;
  const double tri = nested_triple(w, w, w, cfg).value;
  const double e1 = rel(simplex, 1.0 / 6.0), e2 = rel(dbl, 0.5 * I * I), e3 = rel(tri, I * I * I / 6.0);
  const double worst = std::max({e1, e2, e3});
  return {worst <= 1e-9, "simplex " + num(e1) + ", double exchange " + num(e2) + ", triple exchange " + num(e3)};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Verdict()>& criterion) {
    Verdict v;
    try {
      v = criterion();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str());
    failures += v.pass ? 0 : 1;
  };

  report(1, "Table 1 (square well)", [] { return table_criterion(1); });
  report(2, "Table 2 (exponential)", [] { return table_criterion(2); });
  report(3, "Table 3 (yukawa)", [] { return table_criterion(3); });
  report(4, "Table 4 (stis)", [] { return table_criterion(4); });
  report(5, "square-well closed form", closed_form_criterion);
  report(6, "cross-oracle agreement", cross_oracle_criterion);

  std::vector<SandwichReport> reports;
  std::string sandwich_error;
  try {
    for (const auto& c : sandwich_cases()) reports.push_back(sandwich(c.pot, AngularMomentum(c.ell), cfg));
  } catch (const std::exception& e) {
    sandwich_error = e.what();
  }
  auto guarded = [&](Verdict (*f)(const std::vector<SandwichReport>&)) {
    return [&, f] {
      if (!sandwich_error.empty()) return Verdict{false, "sandwich failed: " + sandwich_error};
      return f(reports);
    };
  };
  report(7, "sandwich ordering", guarded(sandwich_criterion));
  report(8, "monotone lower sequence", guarded(monotone_criterion));
  report(9, "scale invariance", scale_criterion);
  report(10, "delta-shell saturation", delta_criterion);
  report(11, "nested quadrature identities", quadrature_criterion);

  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
