#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wif/table.hpp"

namespace wif {

struct RankedJournal {
  std::string journal;
  int rank = 0;
};

struct RankResult {
  /// Ranks in input order.
  std::vector<RankedJournal> ranks;
  /// Groups of journals sharing a value, each sorted by id.
  std::vector<std::vector<std::string>> ties;
};

/// Descending ranks, 1 = largest. Equal values take consecutive ranks in
/// ascending journal-id order and are reported as a tie group.
RankResult rank_column(std::span<const std::pair<std::string, double>> values);

/// Product-moment correlation with two-pass mean subtraction.
double pearson(std::span<const double> x, std::span<const double> y);

enum class CorrelationBasis {
  values,
  /// Correlate rank columns: the table's own ranks when it carries them,
  /// otherwise ranks recomputed from the values.
  ranks,
};

struct CorrelationMatrix {
  std::vector<std::string> indicators;
  std::vector<double> coefficients; ///< row-major, n x n
  std::vector<std::size_t> shared;  ///< journals present in both columns

  std::size_t size() const { return indicators.size(); }
  double at(std::size_t i, std::size_t j) const {
    return coefficients[i * size() + j];
  }
  std::size_t shared_at(std::size_t i, std::size_t j) const {
    return shared[i * size() + j];
  }
};

/// Pairwise-complete Pearson matrix over all columns of `table`.
/// Throws DegenerateError naming the first pair with fewer than two shared
/// journals or zero variance.
CorrelationMatrix pearson_matrix(const IndicatorTable &table,
                                 CorrelationBasis basis = CorrelationBasis::values);

struct ScatterPoint {
  std::string journal;
  double x = 0;
  double y = 0;
};

/// Rows where both cells are present, in table order.
std::vector<ScatterPoint> scatter_export(const IndicatorTable &table,
                                         std::string_view x,
                                         std::string_view y);

/// `journal,x,y` with shortest round-trip decimals.
void write_scatter_csv(std::ostream &out, std::span<const ScatterPoint> points);

/// Standalone 640x480 SVG: linear axes with ticks, one circle per point.
void write_scatter_svg(std::ostream &out, std::span<const ScatterPoint> points,
                       std::string_view x_label, std::string_view y_label);

} // namespace wif
