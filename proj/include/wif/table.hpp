#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wif {

/// One table cell: a value, or an absent marker with the reason.
struct Cell {
  std::optional<double> value;
  std::string note;

  static Cell absent(std::string reason) { return {std::nullopt, std::move(reason)}; }
  bool present() const { return value.has_value(); }
};

/// Journal x indicator matrix with optional per-column ranks.
///
/// Ranks, when present, are a permutation of 1..k over the non-absent cells
/// of each column.
class IndicatorTable {
public:
  IndicatorTable() = default;
  IndicatorTable(std::vector<std::string> journals,
                 std::vector<std::string> indicators);

  std::size_t rows() const { return journals_.size(); }
  std::size_t cols() const { return indicators_.size(); }

  const std::vector<std::string> &journals() const { return journals_; }
  const std::vector<std::string> &indicators() const { return indicators_; }

  /// Display names, parallel to journals(); defaults to the ids.
  const std::vector<std::string> &names() const { return names_; }
  void set_names(std::vector<std::string> names);

  std::optional<std::size_t> row_of(std::string_view journal) const;
  std::optional<std::size_t> column_of(std::string_view indicator) const;

  const Cell &at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Cell cell);

  /// Present cells of a column as (journal id, value), in row order.
  std::vector<std::pair<std::string, double>> column(std::size_t col) const;

  bool has_ranks() const { return !ranks_.empty(); }
  std::optional<int> rank(std::size_t row, std::size_t col) const;
  /// Installs explicit ranks (rows x cols, row-major). Throws SchemaError when
  /// a column is not a permutation over its present cells.
  void set_ranks(std::vector<std::optional<int>> ranks);
  /// Ranks every column from its values (descending, ties by journal id).
  void compute_ranks();
  void clear_ranks() { ranks_.clear(); }

private:
  std::vector<std::string> journals_;
  std::vector<std::string> names_;
  std::vector<std::string> indicators_;
  std::vector<Cell> cells_;
  std::vector<std::optional<int>> ranks_;
};

} // namespace wif
