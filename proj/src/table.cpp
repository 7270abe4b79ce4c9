#include "wif/table.hpp"

#include <algorithm>

#include "wif/analysis.hpp"
#include "wif/error.hpp"

namespace wif {

IndicatorTable::IndicatorTable(std::vector<std::string> journals,
                               std::vector<std::string> indicators)
    : journals_(std::move(journals)), names_(journals_),
      indicators_(std::move(indicators)),
      cells_(journals_.size() * indicators_.size(),
             Cell::absent("not computed")) {}

void IndicatorTable::set_names(std::vector<std::string> names) {
  if (names.size() != journals_.size())
    throw SchemaError("table: name list does not match journal list");
  names_ = std::move(names);
}

std::optional<std::size_t>
IndicatorTable::row_of(std::string_view journal) const {
  auto it = std::find(journals_.begin(), journals_.end(), journal);
  if (it == journals_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - journals_.begin());
}

std::optional<std::size_t>
IndicatorTable::column_of(std::string_view indicator) const {
  auto it = std::find(indicators_.begin(), indicators_.end(), indicator);
  if (it == indicators_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - indicators_.begin());
}

const Cell &IndicatorTable::at(std::size_t row, std::size_t col) const {
  return cells_.at(row * cols() + col);
}

void IndicatorTable::set(std::size_t row, std::size_t col, Cell cell) {
  cells_.at(row * cols() + col) = std::move(cell);
  ranks_.clear();
}

std::vector<std::pair<std::string, double>>
IndicatorTable::column(std::size_t col) const {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t r = 0; r < rows(); ++r)
    if (const auto &c = at(r, col); c.present())
      out.emplace_back(journals_[r], *c.value);
  return out;
}

std::optional<int> IndicatorTable::rank(std::size_t row,
                                        std::size_t col) const {
  if (ranks_.empty())
    return std::nullopt;
  return ranks_.at(row * cols() + col);
}

void IndicatorTable::set_ranks(std::vector<std::optional<int>> ranks) {
  if (ranks.size() != cells_.size())
    throw SchemaError("table: rank matrix has the wrong shape");
  for (std::size_t c = 0; c < cols(); ++c) {
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows(); ++r) {
      const auto &rk = ranks[r * cols() + c];
      if (rk.has_value() != at(r, c).present())
        throw SchemaError("table: column '" + indicators_[c] + "' row '" +
                          journals_[r] +
                          "': rank must be given exactly for present cells");
      if (rk)
        seen.push_back(*rk);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (seen[k] != static_cast<int>(k + 1))
        throw SchemaError("table: ranks of column '" + indicators_[c] +
                          "' are not a permutation of 1.." +
                          std::to_string(seen.size()));
  }
  ranks_ = std::move(ranks);
}

void IndicatorTable::compute_ranks() {
  std::vector<std::optional<int>> ranks(cells_.size());
  for (std::size_t c = 0; c < cols(); ++c) {
    const auto values = column(c);
    if (values.empty())
      continue;
    for (const auto &[journal, rank] : rank_column(values).ranks)
      ranks[*row_of(journal) * cols() + c] = rank;
  }
  ranks_ = std::move(ranks);
}

} // namespace wif
