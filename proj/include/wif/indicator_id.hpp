#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wif {

/// Registered indicators, in the column order of the journal table.
enum class Indicator {
  jcr_if,
  nif,
  mif,
  mifcj,
  buela_casal_wif,
  hy_wif,
  proposed_wif,
  citing_mean_2y,
  citing_median_2y,
  citing_mean_5y,
  citing_median_5y,
};

/// Which impact-factor history of the citing journals an indicator reads.
enum class IfField { two_year, five_year };

std::string_view to_string(Indicator ind);
std::string_view to_string(IfField field);

/// Column label as printed in comparison tables, e.g. "Proposed WIF".
std::string_view display_name(Indicator ind);
/// display_name() for registered names, the name itself otherwise.
std::string display_name(std::string_view name);

std::optional<Indicator> parse_indicator(std::string_view name);

/// Parses a comma-separated list; throws UnknownIndicatorError.
std::vector<Indicator> parse_indicator_list(std::string_view csv);

std::span<const Indicator> all_indicators();

/// Columns of the published comparison table, in its order.
std::span<const Indicator> comparison_indicators();

struct IndicatorNeeds {
  std::optional<IfField> citing_field;
  bool own_previous_if = false;
};

IndicatorNeeds needs_of(Indicator ind);

} // namespace wif
