#include "wif/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace wif {

namespace {

std::int64_t checked_window(const Dataset &ds, std::string_view journal,
                            int span = 2) {
  const auto a = ds.window_articles(journal, span);
  if (a <= 0) {
    const int t = ds.evaluation_year();
    throw ZeroDenominatorError("journal '" + std::string(journal) +
                               "': no articles in " + std::to_string(t - span) +
                               "-" + std::to_string(t - 1));
  }
  return a;
}

IndicatorValue make_value(std::string_view journal, Indicator ind) {
  IndicatorValue v;
  v.journal = std::string(journal);
  v.indicator = ind;
  return v;
}

double own_previous_if(const Dataset &ds, std::string_view journal) {
  const int prev = ds.evaluation_year() - 1;
  const auto own = ds.journal(journal).impact_factor(IfField::two_year, prev);
  if (!own)
    throw DomainError("journal '" + std::string(journal) +
                      "' has no two-year IF for " + std::to_string(prev));
  return *own;
}

/// Indexed citing batches carrying `field`, as (IF, count).
std::vector<std::pair<double, std::int64_t>>
eligible_citing(const Dataset &ds, std::string_view journal, IfField field) {
  const int prev = ds.evaluation_year() - 1;
  std::vector<std::pair<double, std::int64_t>> out;
  for (const auto &b : ds.incoming(journal))
    if (auto f = ds.citing_impact_factor(b.citing, field, prev))
      out.emplace_back(*f, b.count);
  if (out.empty())
    throw NoEligibleCitationsError(
        "journal '" + std::string(journal) + "': no citing journal with a " +
        std::string(to_string(field)) + " IF for " + std::to_string(prev));
  return out;
}

double scale_to_total(const Dataset &ds, std::string_view journal,
                      IndicatorValue &v) {
  const auto c = ds.effective_total(journal);
  const auto a = checked_window(ds, journal);
  if (!ds.declared_total(journal))
    v.notes.push_back("total citations taken from listed batches");
  return static_cast<double>(c) / static_cast<double>(a);
}

} // namespace

IndicatorValue classic_if(const Dataset &ds, std::string_view journal,
                          WindowSpec window) {
  if (window.evaluation_year != ds.evaluation_year())
    throw DomainError("dataset is evaluated for " +
                      std::to_string(ds.evaluation_year()) + ", not " +
                      std::to_string(window.evaluation_year));
  auto v = make_value(journal, Indicator::jcr_if);
  const auto a = checked_window(ds, journal, window.span);
  if (window.span != 2)
    v.notes.push_back(std::to_string(window.span) + "-year article window");
  v.value = static_cast<double>(ds.effective_total(journal)) /
            static_cast<double>(a);
  return v;
}

IndicatorValue classic_if(const Dataset &ds, std::string_view journal) {
  return classic_if(ds, journal, {ds.evaluation_year(), 2});
}

double nif(const FieldAggregates &f) {
  if (!(f.field_articles > 0.0))
    throw DomainError("nif: field article count must be positive");
  if (!(f.discipline_citations > 0.0))
    throw DomainError("nif: discipline citation count must be positive");
  return (f.field_citations * f.discipline_journal_count) /
         (f.field_articles * f.discipline_citations);
}

std::vector<std::pair<std::string, double>>
mif_reference_point(std::span<const std::pair<std::string, double>> group) {
  if (group.empty())
    throw EmptyInputError("mif: empty group");
  double top = 0.0;
  for (const auto &[id, x] : group) {
    if (!std::isfinite(x) || x < 0.0)
      throw DomainError("mif: impact factor of '" + id +
                        "' must be finite and non-negative");
    top = std::max(top, x);
  }
  if (top <= 0.0)
    throw DomainError("mif: every impact factor in the group is zero");
  std::vector<std::pair<std::string, double>> out;
  out.reserve(group.size());
  for (const auto &[id, x] : group)
    out.emplace_back(id, x == top ? 100.0 : 100.0 * x / top);
  return out;
}

IndicatorValue mifcj(const Dataset &ds, std::string_view journal) {
  auto v = make_value(journal, Indicator::mifcj);
  const auto a = checked_window(ds, journal);
  const int prev = ds.evaluation_year() - 1;
  double sum = 0.0;
  for (const auto &b : ds.incoming(journal)) {
    if (auto f = ds.citing_impact_factor(b.citing, IfField::two_year, prev))
      sum += *f * static_cast<double>(b.count);
    else
      v.skipped.push_back(b.citing);
  }
  v.value = sum / static_cast<double>(a);
  return v;
}

double buela_casal_wif(double mifcj_value, double own_previous_if) {
  return (mifcj_value + own_previous_if) / 2.0;
}

double hy_quotient(double citing_previous_if, double cited_previous_if) {
  if (!(cited_previous_if > 0.0))
    throw DomainError("hy_quotient: cited journal's previous-year IF must be "
                      "positive");
  return citing_previous_if / cited_previous_if;
}

double hy_weight(double q) {
  if (!std::isfinite(q) || q < 0.0)
    throw DomainError("hy_weight: q must be finite and non-negative");
  const double e = std::exp(-q);
  return 10.0 * (1.0 - 0.828 * e) / (1.0 + 16.183 * e);
}

IndicatorValue hy_wif(const Dataset &ds, std::string_view journal) {
  auto v = make_value(journal, Indicator::hy_wif);
  const auto a = checked_window(ds, journal);
  const double own = own_previous_if(ds, journal);
  if (!(own > 0.0))
    throw DomainError("journal '" + std::string(journal) +
                      "': previous-year IF must be positive for hy_wif");
  const int prev = ds.evaluation_year() - 1;
  double sum = 0.0;
  for (const auto &b : ds.incoming(journal)) {
    auto f = ds.citing_impact_factor(b.citing, IfField::two_year, prev);
    if (!f)
      v.skipped.push_back(b.citing);
    sum += hy_weight(hy_quotient(f.value_or(0.0), own)) *
           static_cast<double>(b.count);
  }
  v.value = sum / static_cast<double>(a);
  return v;
}

IndicatorValue proposed_wif(const Dataset &ds, std::string_view journal) {
  auto v = make_value(journal, Indicator::proposed_wif);
  const auto a = checked_window(ds, journal);
  const int prev = ds.evaluation_year() - 1;
  double weighted = 0.0;
  for (const auto &b : ds.incoming(journal)) {
    if (auto f = ds.citing_impact_factor(b.citing, IfField::five_year, prev))
      weighted += *f * static_cast<double>(b.count);
    else
      v.skipped.push_back(b.citing);
  }
  const auto c = ds.effective_total(journal);
  v.value = (weighted + static_cast<double>(c)) / static_cast<double>(a);
  return v;
}

IndicatorValue citing_if_mean(const Dataset &ds, std::string_view journal,
                              IfField field) {
  auto v = make_value(journal, field == IfField::two_year
                                   ? Indicator::citing_mean_2y
                                   : Indicator::citing_mean_5y);
  const auto eligible = eligible_citing(ds, journal, field);
  double weighted = 0.0;
  std::int64_t n = 0;
  for (const auto &[f, c] : eligible) {
    weighted += f * static_cast<double>(c);
    n += c;
  }
  v.value = weighted / static_cast<double>(n) * scale_to_total(ds, journal, v);
  return v;
}

IndicatorValue citing_if_median(const Dataset &ds, std::string_view journal,
                                IfField field) {
  auto v = make_value(journal, field == IfField::two_year
                                   ? Indicator::citing_median_2y
                                   : Indicator::citing_median_5y);
  auto eligible = eligible_citing(ds, journal, field);
  std::sort(eligible.begin(), eligible.end());
  std::int64_t n = 0;
  for (const auto &e : eligible)
    n += e.second;

  // k-th smallest (0-based) of the expanded list, without expanding it.
  auto nth = [&](std::int64_t k) {
    for (const auto &[f, c] : eligible) {
      if (k < c)
        return f;
      k -= c;
    }
    return eligible.back().first;
  };
  const double median =
      n % 2 == 1 ? nth(n / 2) : 0.5 * (nth(n / 2 - 1) + nth(n / 2));
  v.value = median * scale_to_total(ds, journal, v);
  return v;
}

IndicatorValue evaluate(const Dataset &ds, std::string_view journal,
                        Indicator ind) {
  switch (ind) {
  case Indicator::jcr_if:
    return classic_if(ds, journal);
  case Indicator::mifcj:
    return mifcj(ds, journal);
  case Indicator::buela_casal_wif: {
    auto v = mifcj(ds, journal);
    v.indicator = ind;
    v.value = buela_casal_wif(v.value, own_previous_if(ds, journal));
    return v;
  }
  case Indicator::hy_wif:
    return hy_wif(ds, journal);
  case Indicator::proposed_wif:
    return proposed_wif(ds, journal);
  case Indicator::citing_mean_2y:
    return citing_if_mean(ds, journal, IfField::two_year);
  case Indicator::citing_median_2y:
    return citing_if_median(ds, journal, IfField::two_year);
  case Indicator::citing_mean_5y:
    return citing_if_mean(ds, journal, IfField::five_year);
  case Indicator::citing_median_5y:
    return citing_if_median(ds, journal, IfField::five_year);
  case Indicator::nif:
  case Indicator::mif:
    break;
  }
  throw DomainError(std::string(to_string(ind)) +
                    " needs discipline context; use compute_table");
}

// ---- table ------------------------------------------------------------------

namespace {

std::string discipline_of(const Dataset &ds, const std::string &id) {
  return ds.journal(id).discipline.value_or("");
}

/// Reason string when every indexed citing journal lacks `field`.
std::optional<std::string> field_unavailable(const Dataset &ds,
                                             std::string_view journal,
                                             IfField field) {
  const int prev = ds.evaluation_year() - 1;
  bool indexed = false;
  for (const auto &b : ds.incoming(journal)) {
    if (b.unindexed())
      continue;
    indexed = true;
    if (ds.citing_impact_factor(b.citing, field, prev))
      return std::nullopt;
  }
  if (!indexed)
    return std::nullopt;
  return "no citing journal carries a " + std::string(to_string(field)) +
         " IF for " + std::to_string(prev);
}

std::string provenance(const IndicatorValue &v) {
  std::string out;
  if (!v.skipped.empty())
    out = std::to_string(v.skipped.size()) + " citing batch(es) without IF";
  for (const auto &n : v.notes)
    out += (out.empty() ? "" : "; ") + n;
  return out;
}

/// Classic IF of every evaluated journal, absent where undefined.
std::vector<std::optional<double>>
classic_column(const Dataset &ds, const std::vector<std::string> &ids) {
  std::vector<std::optional<double>> out;
  for (const auto &id : ids) {
    try {
      out.push_back(classic_if(ds, id).value);
    } catch (const Error &) {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

void fill_nif(const Dataset &ds, const std::vector<std::string> &ids,
              IndicatorTable &table, std::size_t col) {
  FieldAggregates field;
  std::map<std::string, std::pair<double, double>> by_discipline; // Ĉ, J
  for (const auto &id : ids) {
    const auto a = ds.window_articles(id);
    const auto c = static_cast<double>(ds.effective_total(id));
    field.field_citations += c;
    field.field_articles += static_cast<double>(a);
    auto &d = by_discipline[discipline_of(ds, id)];
    d.first += c;
    if (a > 0)
      d.second += 1.0;
  }
  const auto ifs = classic_column(ds, ids);
  for (std::size_t r = 0; r < ids.size(); ++r) {
    if (!ifs[r]) {
      table.set(r, col, Cell::absent("zero denominator"));
      continue;
    }
    FieldAggregates f = field;
    std::tie(f.discipline_citations, f.discipline_journal_count) =
        by_discipline[discipline_of(ds, ids[r])];
    try {
      table.set(r, col, {*ifs[r] * nif(f), {}});
    } catch (const Error &e) {
      table.set(r, col, Cell::absent(e.what()));
    }
  }
}

void fill_mif(const Dataset &ds, const std::vector<std::string> &ids,
              IndicatorTable &table, std::size_t col) {
  const auto ifs = classic_column(ds, ids);
  std::map<std::string, std::vector<std::pair<std::string, double>>> groups;
  for (std::size_t r = 0; r < ids.size(); ++r)
    if (ifs[r])
      groups[discipline_of(ds, ids[r])].emplace_back(ids[r], *ifs[r]);

  for (std::size_t r = 0; r < ids.size(); ++r)
    table.set(r, col, Cell::absent("zero denominator"));
  for (const auto &[discipline, group] : groups) {
    try {
      for (const auto &[id, scaled] : mif_reference_point(group))
        table.set(*table.row_of(id), col, {scaled, {}});
    } catch (const Error &e) {
      for (const auto &[id, _] : group)
        table.set(*table.row_of(id), col, Cell::absent(e.what()));
    }
  }
}

} // namespace

IndicatorTable compute_table(const Dataset &ds,
                             std::span<const Indicator> indicators) {
  const auto ids = ds.evaluated_journals();
  std::vector<std::string> names;
  std::vector<std::string> display;
  for (Indicator ind : indicators)
    names.emplace_back(to_string(ind));
  for (const auto &id : ids)
    display.push_back(ds.journal(id).name);

  IndicatorTable table(ids, names);
  table.set_names(std::move(display));

  for (std::size_t col = 0; col < indicators.size(); ++col) {
    const Indicator ind = indicators[col];
    if (ind == Indicator::nif) {
      fill_nif(ds, ids, table, col);
      continue;
    }
    if (ind == Indicator::mif) {
      fill_mif(ds, ids, table, col);
      continue;
    }
    const auto needs = needs_of(ind);
    for (std::size_t r = 0; r < ids.size(); ++r) {
      if (needs.citing_field)
        if (auto reason = field_unavailable(ds, ids[r], *needs.citing_field)) {
          table.set(r, col, Cell::absent(*reason));
          continue;
        }
      try {
        const auto v = evaluate(ds, ids[r], ind);
        table.set(r, col, {v.value, provenance(v)});
      } catch (const Error &e) {
        table.set(r, col, Cell::absent(e.what()));
      }
    }
  }
  return table;
}

} // namespace wif
