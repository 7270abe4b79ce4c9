#pragma once

#include <string>
#include <string_view>

#include "wif/analysis.hpp"
#include "wif/corpus.hpp"
#include "wif/table.hpp"

namespace wif {

enum class OutputFormat { csv, json, markdown };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct TableStyle {
  /// Shortest round-trip decimals instead of 4 significant digits.
  bool full_precision = false;
  /// Append " [rank]" to values when the table carries ranks.
  bool ranks = true;
};

/// CSV: header `journal,<indicator>...`; absent cells render as an em dash.
/// Markdown adds the journal name column. JSON lists rows with value, rank
/// and note per cell.
std::string render_table(const IndicatorTable &table, OutputFormat format,
                         const TableStyle &style = {});

/// Reads a CSV table as written by render_table. Cells are `value`,
/// `value [rank]`, or absent (empty, `-` or em dash). Ranks must be given
/// for all present cells or none.
IndicatorTable read_table_csv(std::string_view text);

/// Square matrix to 4 decimals.
std::string render_correlation(const CorrelationMatrix &m, OutputFormat format);

/// Human-readable text (csv/markdown) or a JSON document.
std::string render_report(const ConsistencyReport &report,
                          OutputFormat format);

} // namespace wif
