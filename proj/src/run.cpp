#include "gcrit/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>

#include "gcrit/error.hpp"
#include "gcrit/exact.hpp"
#include "gcrit/format.hpp"

namespace gcrit {

namespace {

constexpr double kOracleAgreement = 1e-5;
constexpr double kClosedFormAgreement = 1e-7;
constexpr double kRegularityEps = 0.5;
// Sufficiency is probed this far on either side of the variational bound.
constexpr double kSufficiencyProbe = 1e-3;

BoundResult evaluate_method(Method m, const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  switch (m) {
    case Method::BargmannSchwinger: return lower_bargmann_schwinger(pot, ell, cfg);
    case Method::SecondOrder: return lower_second_order(pot, ell, cfg);
    case Method::ThirdOrder: return lower_third_order(pot, ell, cfg);
    case Method::GGMT: return lower_ggmt(pot, ell, cfg);
    case Method::CalogeroI: return upper_calogero_I(pot, ell, cfg);
    case Method::CalogeroII: return upper_calogero_II(pot, ell, cfg);
    case Method::Variational: return upper_variational(pot, ell, cfg);
    case Method::VariationalClosedForm:
      if (pot.kind() != PotentialKind::SquareWell) {
        throw ConfigError("variational_closed_form applies to the square well only", "methods");
      }
      return upper_variational_square_well(ell);
  }
  throw ConfigError("unknown method", "methods");
}

std::string optional_number(const std::optional<double>& x, int digits) {
  return x ? format_number(*x, digits) : std::string();
}

std::string case_name(const std::string& pot, int ell) { return pot + " l=" + std::to_string(ell); }

std::string rel(double x) { return format_number(x, 3); }

std::vector<InvariantOutcome> check_case(const Potential& pot, AngularMomentum ell, const QuadratureConfig& cfg) {
  const std::string name = case_name(pot.describe(), ell.ell());
  std::vector<InvariantOutcome> out;
  std::optional<SandwichReport> report;
  try {
    report = sandwich(pot, ell, cfg);
  } catch (const Error& e) {
    out.push_back({"sandwich " + name, false, e.what()});
    return out;
  }
  const SandwichReport& s = *report;

  out.push_back({"sandwich " + name, s.ordered,
                 "max lower " + format_number(s.max_lower()) + " <= g_c " + format_number(s.g_shooting) +
                     " <= min upper " + format_number(s.min_upper()) + " (margins " + rel(s.lower_margin) + ", " +
                     rel(s.upper_margin) + ")"});
  out.push_back({"monotone_lower " + name, s.monotone_lower,
                 format_number(s.bargmann_schwinger.value) + " <= " + format_number(s.second_order.value) +
                     " <= " + format_number(s.third_order.value)});
  out.push_back({"ggmt_ge_bs " + name, s.ggmt.value >= s.bargmann_schwinger.value * (1.0 - 1e-9),
                 format_number(s.ggmt.value) + " >= " + format_number(s.bargmann_schwinger.value)});

  const double gap = std::abs(s.g_shooting - s.g_nystrom) / s.g_shooting;
  out.push_back({"cross_oracle " + name, gap <= kOracleAgreement,
                 "shooting " + format_number(s.g_shooting, 10) + ", nystrom " + format_number(s.g_nystrom, 10) +
                     ", rel " + rel(gap)});

  const double g_new = s.variational.value, p = *s.variational.optimal_param;
  try {
    const bool above = sufficient_condition_holds(pot, ell, g_new * (1.0 + kSufficiencyProbe), p, cfg);
    const bool below = sufficient_condition_holds(pot, ell, g_new * (1.0 - kSufficiencyProbe), p, cfg);
    out.push_back({"sufficiency " + name, above && !below,
                   "holds just above g_New: " + std::string(above ? "yes" : "no") +
                       ", just below: " + std::string(below ? "yes" : "no")});
  } catch (const Error& e) {
    out.push_back({"sufficiency " + name, false, e.what()});
  }

  if (s.closed_form) {
    const double dev = std::abs(s.variational.value - s.closed_form->value) / s.closed_form->value;
    out.push_back({"closed_form " + name, dev <= kClosedFormAgreement, "rel " + rel(dev)});
  }
  return out;
}

}  // namespace

std::string format_number(double x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
  return buf;
}

std::vector<RunRecord> run(const RunConfig& config, const std::function<void(const RunRecord&)>& sink) {
  config.validate();
  const Potential pot = config.potential.build();
  std::vector<RunRecord> records;
  for (int l : config.ells) {
    const AngularMomentum ell(l);
    for (Method m : config.methods) {
      const auto t0 = std::chrono::steady_clock::now();
      RunRecord rec{evaluate_method(m, pot, ell, config.quadrature), 0.0};
      rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (sink) sink(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_records(std::ostream& os, const std::vector<RunRecord>& records, OutputFormat format, int digits) {
  const bool md = format == OutputFormat::Markdown;
  if (md) {
    os << "| ell | method | side | value | optimal_param | error_estimate | wall_time |\n"
       << "|---|---|---|---|---|---|---|\n";
  } else {
    os << "ell,method,side,value,optimal_param,error_estimate,wall_time\n";
  }
  const char* sep = md ? " | " : ",";
  for (const auto& rec : records) {
    const auto& r = rec.result;
    if (md) os << "| ";
    os << r.ell.ell() << sep << to_string(r.method) << sep << to_string(r.side) << sep
       << format_number(r.value, digits) << sep << optional_number(r.optimal_param, digits) << sep
       << format_number(r.error_estimate, 3) << sep << format_number(rec.wall_time, 3);
    os << (md ? " |\n" : "\n");
  }
}

void write_sandwich(std::ostream& os, const std::vector<SandwichReport>& reports, OutputFormat format, int digits) {
  static const char* kHeader[] = {"ell",    "g_BS",  "g_eq2", "g_B",  "g_GGMT", "g_c_shoot",
                                  "g_c_nystrom", "g_New", "p*",    "g_C1", "g_C2"};
  const bool md = format == OutputFormat::Markdown;
  const char* sep = md ? " | " : ",";
  if (md) os << "| ";
  for (std::size_t i = 0; i < std::size(kHeader); ++i) os << (i ? sep : "") << kHeader[i];
  os << (md ? " |\n" : "\n");
  if (md) {
    for (std::size_t i = 0; i < std::size(kHeader); ++i) os << "|---";
    os << "|\n";
  }
  for (const auto& r : reports) {
    const double cells[] = {r.bargmann_schwinger.value,
                            r.second_order.value,
                            r.third_order.value,
                            r.ggmt.value,
                            r.g_shooting,
                            r.g_nystrom,
                            r.variational.value,
                            r.variational.optimal_param.value_or(NAN),
                            r.calogero_1.value,
                            r.calogero_2.value};
    if (md) os << "| ";
    os << r.ell;
    for (double c : cells) os << sep << format_number(c, digits);
    os << (md ? " |\n" : "\n");
  }
}

std::vector<PotentialSpec> builtin_specs() {
  std::vector<PotentialSpec> out;
  for (auto kind : {PotentialKind::SquareWell, PotentialKind::Exponential, PotentialKind::Yukawa, PotentialKind::Stis}) {
    PotentialSpec s;
    s.kind = kind;
    out.push_back(s);
  }
  return out;
}

std::vector<InvariantOutcome> check_invariants(const std::vector<PotentialSpec>& potentials,
                                               const std::vector<int>& ells, const QuadratureConfig& cfg) {
  std::vector<InvariantOutcome> out;
  std::vector<std::future<std::vector<InvariantOutcome>>> jobs;
  for (const auto& spec : potentials) {
    const Potential pot = spec.build();
    const auto reg = validate_regularity(pot, kRegularityEps);
    out.push_back({"regularity " + pot.describe(), reg.passed(), reg.message});
    if (!reg.passed()) continue;
    for (int l : ells) {
      jobs.push_back(std::async(std::launch::async, [pot, l, &cfg] { return check_case(pot, AngularMomentum(l), cfg); }));
    }
  }
  for (auto& job : jobs) {
    for (auto& o : job.get()) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace gcrit
