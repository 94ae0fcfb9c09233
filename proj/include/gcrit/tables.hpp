#pragma once

#include <string>
#include <vector>

#include "gcrit/quad.hpp"

namespace gcrit {

/// Relative tolerances used to compare against the printed 5-digit values.
inline constexpr double kCouplingTolerance = 2e-4;
inline constexpr double kParameterTolerance = 1e-3;

struct TableCell {
  double computed = 0.0;
  double printed = 0.0;
  /// |computed - printed| / |printed|
  double deviation = 0.0;
  double tolerance = 0.0;

  bool pass() const noexcept { return deviation <= tolerance; }
};

struct TableRow {
  /// l for Tables 1-3, alpha for Table 4, as printed.
  std::string label;
  std::vector<TableCell> cells;
};

/// A recomputed table with per-cell deviations from the published values.
struct TableArtifact {
  int id = 0;
  std::string title;
  std::string row_header;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  bool pass = false;
};

/// Published values of one table, row-major in `columns` order.
struct PrintedTable {
  int id;
  std::string title;
  std::string row_header;
  std::vector<std::string> columns;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
};

/// Throws RangeError for ids outside 1..4.
const PrintedTable& printed_table(int id);

/// Recomputes every cell of Table `id` (rows concurrently) and compares with
/// the printed values.
TableArtifact reproduce_table(int id, const QuadratureConfig& cfg = {});

std::string render_csv(const TableArtifact& table, int digits = 6);
std::string render_markdown(const TableArtifact& table, int digits = 6);

}  // namespace gcrit
