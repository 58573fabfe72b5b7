#pragma once

// Tabular output: CSV (comma, '.', 17 significant digits, header row, LF)
// and JSON. Data files carry no timestamps.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace ncstat::cli {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest text that round-trips a double at 17 significant digits.
std::string format_real(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t, const nlohmann::json& meta);

enum class FigureId { f1_free_energy, f2_mean_energy, f3_entropy, f4_specific_heat, f5_one_d_panel };

std::string_view to_string(FigureId id);
std::optional<FigureId> figure_from_string(std::string_view s);

/// Columns of a figure dataset; nullopt means the full sweep table
/// (alpha_bar, Z, F_bar, U_bar, S_bar, C_bar).
std::vector<std::string> figure_columns(std::optional<FigureId> id);

/// Numeric dataset sorted by alpha_bar (first column).
struct FigureDataset {
  std::optional<FigureId> figure;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws UsageError when the columns do not match the figure or rows are unsorted.
  void validate() const;
  Table to_table() const;
  bool operator==(const FigureDataset&) const = default;
};

/// Parses a numeric CSV as produced by write_csv. The figure id is inferred
/// from the column set (ambiguous single-quantity tables carry none).
FigureDataset parse_csv(std::string_view text, std::optional<FigureId> figure = std::nullopt);

}  // namespace ncstat::cli
