#include "wif/indicator_id.hpp"

#include <array>
#include <utility>

#include "wif/error.hpp"

namespace wif {

namespace {

constexpr std::array<std::pair<Indicator, std::string_view>, 11> kNames{{
    {Indicator::jcr_if, "jcr_if"},
    {Indicator::nif, "nif"},
    {Indicator::mif, "mif"},
    {Indicator::mifcj, "mifcj"},
    {Indicator::buela_casal_wif, "buela_casal_wif"},
    {Indicator::hy_wif, "hy_wif"},
    {Indicator::proposed_wif, "proposed_wif"},
    {Indicator::citing_mean_2y, "citing_mean_2y"},
    {Indicator::citing_median_2y, "citing_median_2y"},
    {Indicator::citing_mean_5y, "citing_mean_5y"},
    {Indicator::citing_median_5y, "citing_median_5y"},
}};

constexpr std::array<Indicator, 11> kAll{
    Indicator::jcr_if,           Indicator::nif,
    Indicator::mif,              Indicator::mifcj,
    Indicator::buela_casal_wif,  Indicator::hy_wif,
    Indicator::proposed_wif,     Indicator::citing_mean_2y,
    Indicator::citing_median_2y, Indicator::citing_mean_5y,
    Indicator::citing_median_5y,
};

constexpr std::array<Indicator, 8> kComparison{
    Indicator::jcr_if,           Indicator::hy_wif,
    Indicator::buela_casal_wif,  Indicator::proposed_wif,
    Indicator::citing_mean_2y,   Indicator::citing_median_2y,
    Indicator::citing_mean_5y,   Indicator::citing_median_5y,
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

} // namespace

std::string_view to_string(Indicator ind) {
  for (const auto &[i, name] : kNames)
    if (i == ind)
      return name;
  return "?";
}

std::string_view display_name(Indicator ind) {
  switch (ind) {
  case Indicator::jcr_if: return "JCR IF";
  case Indicator::nif: return "NIF";
  case Indicator::mif: return "MIF";
  case Indicator::mifcj: return "MIFCJ";
  case Indicator::buela_casal_wif: return "WIF by Buela-Casal";
  case Indicator::hy_wif: return "WIF by H&Y";
  case Indicator::proposed_wif: return "Proposed WIF";
  case Indicator::citing_mean_2y: return "Average WIF";
  case Indicator::citing_median_2y: return "Median WIF";
  case Indicator::citing_mean_5y: return "Average 5WIF";
  case Indicator::citing_median_5y: return "Median 5WIF";
  }
  return "?";
}

std::string display_name(std::string_view name) {
  if (auto ind = parse_indicator(name))
    return std::string(display_name(*ind));
  return std::string(name);
}

std::string_view to_string(IfField field) {
  return field == IfField::two_year ? "two_year" : "five_year";
}

std::optional<Indicator> parse_indicator(std::string_view name) {
  for (const auto &[i, n] : kNames)
    if (n == name)
      return i;
  return std::nullopt;
}

std::vector<Indicator> parse_indicator_list(std::string_view csv) {
  std::vector<Indicator> out;
  while (true) {
    const auto comma = csv.find(',');
    const auto item = trim(csv.substr(0, comma));
    if (!item.empty()) {
      const auto ind = parse_indicator(item);
      if (!ind)
        throw UnknownIndicatorError("unknown indicator '" + std::string(item) +
                                    "'");
      out.push_back(*ind);
    }
    if (comma == std::string_view::npos)
      break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

std::span<const Indicator> all_indicators() { return kAll; }

std::span<const Indicator> comparison_indicators() { return kComparison; }

IndicatorNeeds needs_of(Indicator ind) {
  switch (ind) {
  case Indicator::jcr_if:
  case Indicator::nif:
  case Indicator::mif:
    return {};
  case Indicator::mifcj:
  case Indicator::citing_mean_2y:
  case Indicator::citing_median_2y:
    return {IfField::two_year, false};
  case Indicator::buela_casal_wif:
  case Indicator::hy_wif:
    return {IfField::two_year, true};
  case Indicator::proposed_wif:
  case Indicator::citing_mean_5y:
  case Indicator::citing_median_5y:
    return {IfField::five_year, false};
  }
  return {};
}

} // namespace wif
