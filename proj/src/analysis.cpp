#include "wif/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "csv.hpp"
#include "numfmt.hpp"
#include "wif/error.hpp"

namespace wif {

RankResult
rank_column(std::span<const std::pair<std::string, double>> values) {
  if (values.empty())
    throw EmptyInputError("rank_column: no values");
  for (const auto &[id, v] : values)
    if (!std::isfinite(v))
      throw DomainError("rank_column: value of '" + id + "' is not finite");

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a].second != values[b].second)
      return values[a].second > values[b].second;
    return values[a].first < values[b].first;
  });

  RankResult out;
  out.ranks.resize(values.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto i = order[k];
    out.ranks[i] = {values[i].first, static_cast<int>(k + 1)};
  }
  for (std::size_t k = 0; k < order.size();) {
    std::size_t end = k + 1;
    while (end < order.size() &&
           values[order[end]].second == values[order[k]].second)
      ++end;
    if (end - k > 1) {
      std::vector<std::string> group;
      for (std::size_t m = k; m < end; ++m)
        group.push_back(values[order[m]].first);
      out.ties.push_back(std::move(group));
    }
    k = end;
  }
  return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw LengthMismatchError("pearson: lengths differ (" +
                              std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()) + ")");
  if (x.size() < 2)
    throw DegenerateError("pearson: need at least two observations");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw DegenerateError("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationMatrix pearson_matrix(const IndicatorTable &table,
                                 CorrelationBasis basis) {
  const std::size_t n = table.cols();
  if (n < 2)
    throw DegenerateError("pearson_matrix: need at least two indicators");

  IndicatorTable ranked = table;
  if (basis == CorrelationBasis::ranks && !ranked.has_ranks())
    ranked.compute_ranks();

  auto observation = [&](std::size_t r, std::size_t c) -> std::optional<double> {
    if (basis == CorrelationBasis::ranks) {
      if (auto rk = ranked.rank(r, c))
        return static_cast<double>(*rk);
      return std::nullopt;
    }
    return table.at(r, c).value;
  };

  CorrelationMatrix m;
  m.indicators = table.indicators();
  m.coefficients.assign(n * n, 1.0);
  m.shared.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::vector<double> x, y;
      for (std::size_t r = 0; r < table.rows(); ++r) {
        auto a = observation(r, i);
        auto b = observation(r, j);
        if (a && b) {
          x.push_back(*a);
          y.push_back(*b);
        }
      }
      m.shared[i * n + j] = m.shared[j * n + i] = x.size();
      const std::string pair =
          "(" + table.indicators()[i] + ", " + table.indicators()[j] + ")";
      if (x.size() < 2)
        throw DegenerateError("pearson_matrix: pair " + pair + " shares " +
                              std::to_string(x.size()) + " journal(s)");
      double r = 1.0;
      try {
        r = pearson(x, y);
      } catch (const DegenerateError &) {
        throw DegenerateError("pearson_matrix: pair " + pair +
                              " has a constant column");
      }
      if (i != j)
        m.coefficients[i * n + j] = m.coefficients[j * n + i] = r;
    }
  }
  return m;
}

std::vector<ScatterPoint> scatter_export(const IndicatorTable &table,
                                         std::string_view x,
                                         std::string_view y) {
  const auto cx = table.column_of(x);
  const auto cy = table.column_of(y);
  if (!cx)
    throw UnknownIndicatorError("scatter: no column '" + std::string(x) + "'");
  if (!cy)
    throw UnknownIndicatorError("scatter: no column '" + std::string(y) + "'");
  std::vector<ScatterPoint> points;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const auto &a = table.at(r, *cx);
    const auto &b = table.at(r, *cy);
    if (a.present() && b.present())
      points.push_back({table.journals()[r], *a.value, *b.value});
  }
  return points;
}

void write_scatter_csv(std::ostream &out,
                       std::span<const ScatterPoint> points) {
  out << "journal,x,y\n";
  for (const auto &p : points)
    out << csv::escape(p.journal) << ',' << numfmt::shortest(p.x) << ','
        << numfmt::shortest(p.y) << '\n';
}

} // namespace wif
