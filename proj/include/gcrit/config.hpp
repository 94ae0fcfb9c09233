#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcrit/limits.hpp"
#include "gcrit/potential.hpp"
#include "gcrit/quad.hpp"

namespace gcrit {

/// Kind name plus named parameters, as written in a config file.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::SquareWell;
  double R = 1.0;
  double alpha = 1.0;
  double width = 1e-3;
  /// Two-column CSV for tabulated potentials.
  std::string grid_path;
  /// Inline grid; takes precedence over grid_path.
  std::vector<GridPoint> grid;

  /// Throws ConfigError naming the offending field.
  Potential build() const;
};

enum class OutputFormat { Csv, Markdown };

OutputFormat parse_output_format(std::string_view name);

struct RunConfig {
  PotentialSpec potential;
  std::vector<int> ells{0};
  std::vector<Method> methods;
  OutputFormat format = OutputFormat::Csv;
  int digits = 6;
  QuadratureConfig quadrature;

  /// Throws ConfigError when a list is empty or a value is out of range.
  void validate() const;
};

/// Every method that applies to `kind` (the closed form only for square wells).
std::vector<Method> all_methods(PotentialKind kind);

/// Comma-separated method names or "all".
std::vector<Method> parse_methods(std::string_view list, PotentialKind kind);
/// Comma-separated ells; "a-b" ranges are expanded.
std::vector<int> parse_ells(std::string_view list);

/// Reads an INI file:
///
///   [potential]
///   kind = stis
///   R = 1
///   alpha = 5
///
///   [run]
///   ell = 0-5
///   methods = all
///   format = csv
///   digits = 6
///
///   [quadrature]
///   rel_tol = 1e-10
///
/// Relative grid paths are resolved against the config file's directory.
RunConfig load_run_config(const std::string& path);

}  // namespace gcrit
