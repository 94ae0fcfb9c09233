#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcrit/config.hpp"
#include "gcrit/limits.hpp"
#include "gcrit/sandwich.hpp"

namespace gcrit {

/// One (l, method) result of a run.
struct RunRecord {
  BoundResult result;
  double wall_time = 0.0;  // seconds
};

/// Evaluates every (l, method) pair in config order. `sink`, when set, sees
/// each record as soon as it is ready.
std::vector<RunRecord> run(const RunConfig& config, const std::function<void(const RunRecord&)>& sink = {});

/// Long format: ell, method, side, value, optimal_param, error_estimate, wall_time.
void write_records(std::ostream& os, const std::vector<RunRecord>& records, OutputFormat format, int digits);

/// Wide format, one row per l:
/// ell, g_BS, g_eq2, g_B, g_GGMT, g_c_shoot, g_c_nystrom, g_New, p*, g_C1, g_C2.
void write_sandwich(std::ostream& os, const std::vector<SandwichReport>& reports, OutputFormat format, int digits);

struct InvariantOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Regularity, sandwich ordering, monotone lower sequence, GGMT >= BS,
/// cross-oracle agreement and sufficiency consistency for every (potential, l).
/// Cases run concurrently; outcomes come back in input order.
std::vector<InvariantOutcome> check_invariants(const std::vector<PotentialSpec>& potentials,
                                               const std::vector<int>& ells, const QuadratureConfig& cfg);

/// The four built-in test potentials at R = 1 (STIS with alpha = 1).
std::vector<PotentialSpec> builtin_specs();

}  // namespace gcrit
