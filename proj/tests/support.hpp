#pragma once

// Random small datasets and naive-loop oracles for every indicator.
//
// The oracles read the raw generated records (before Dataset merges or sorts
// anything) and recompute each formula with plain loops, so they share no
// code path with src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wif/corpus.hpp"
#include "wif/indicator_id.hpp"

namespace wif::testing {

struct RawDataset {
  int year = 2013;
  std::vector<Journal> journals;
  std::vector<CitationBatch> batches; // may repeat a triple
  std::map<std::string, std::int64_t> declared;

  Dataset build() const {
    return Dataset(year, journals, batches, declared, LoadMode::lenient);
  }
};

struct GenOptions {
  int max_journals = 5;
  int max_batches = 10;
  bool declared_totals = true;
  bool zero_windows = true;
};

inline RawDataset random_dataset(std::mt19937_64 &rng, GenOptions opt = {}) {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto real = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  auto chance = [&](double p) { return real(0.0, 1.0) < p; };

  RawDataset raw;
  const int t = raw.year;
  const int n = uniform(1, opt.max_journals);
  for (int i = 0; i < n; ++i) {
    Journal j;
    j.id = "J" + std::to_string(i);
    j.name = "Journal " + std::to_string(i);
    if (chance(0.5))
      j.discipline = chance(0.5) ? "A" : "B";
    j.articles_by_year[t - 1] = uniform(opt.zero_windows ? 0 : 1, 30);
    j.articles_by_year[t - 2] = uniform(0, 30);
    j.articles_by_year[t - 3] = uniform(0, 30); // outside the 2-year window
    if (chance(0.85))
      j.two_year_if[t - 1] = chance(0.05) ? 0.0 : real(0.05, 8.0);
    if (chance(0.85))
      j.five_year_if[t - 1] = chance(0.1) ? 0.0 : real(0.0, 12.0);
    if (chance(0.3))
      j.two_year_if[t - 2] = real(0.05, 8.0);
    raw.journals.push_back(std::move(j));
  }

  const int m = uniform(0, opt.max_batches);
  for (int k = 0; k < m; ++k) {
    CitationBatch b;
    const int pick = uniform(0, n + 1);
    b.citing = pick < n    ? "J" + std::to_string(pick)
               : pick == n ? std::string(kUnindexed)
                           : std::string("ghost");
    b.cited = "J" + std::to_string(uniform(0, n - 1));
    b.year = chance(0.85) ? t : t - 1;
    b.count = uniform(1, 25);
    raw.batches.push_back(std::move(b));
  }

  if (opt.declared_totals)
    for (const auto &j : raw.journals)
      if (chance(0.3))
        raw.declared[j.id] = uniform(0, 80);
  return raw;
}

// ---- oracles ----------------------------------------------------------------

struct Oracle {
  const RawDataset &raw;

  const Journal *journal(const std::string &id) const {
    for (const auto &j : raw.journals)
      if (j.id == id)
        return &j;
    return nullptr;
  }

  std::optional<double> citing_if(const std::string &citing,
                                  bool five_year) const {
    if (citing == kUnindexed)
      return std::nullopt;
    const Journal *j = journal(citing);
    if (!j)
      return std::nullopt;
    const auto &h = five_year ? j->five_year_if : j->two_year_if;
    for (const auto &[y, v] : h)
      if (y == raw.year - 1)
        return v;
    return std::nullopt;
  }

  std::vector<CitationBatch> incoming(const std::string &id) const {
    std::vector<CitationBatch> out;
    for (const auto &b : raw.batches)
      if (b.cited == id && b.year == raw.year)
        out.push_back(b);
    return out;
  }

  double articles(const std::string &id) const {
    double a = 0;
    for (const auto &[y, n] : journal(id)->articles_by_year)
      if (y == raw.year - 1 || y == raw.year - 2)
        a += static_cast<double>(n);
    return a;
  }

  double total(const std::string &id) const {
    for (const auto &[k, v] : raw.declared)
      if (k == id)
        return static_cast<double>(v);
    double c = 0;
    for (const auto &b : incoming(id))
      c += static_cast<double>(b.count);
    return c;
  }

  static double weight(double q) {
    return 10.0 * (1.0 - 0.828 / std::exp(q)) / (1.0 + 16.183 / std::exp(q));
  }

  std::optional<double> own_if(const std::string &id) const {
    for (const auto &[y, v] : journal(id)->two_year_if)
      if (y == raw.year - 1)
        return v;
    return std::nullopt;
  }

  /// Indexed citing batches exist and none carries the field.
  bool field_missing(const std::string &id, bool five_year) const {
    bool indexed = false;
    for (const auto &b : incoming(id)) {
      if (b.citing == kUnindexed)
        continue;
      indexed = true;
      if (citing_if(b.citing, five_year))
        return false;
    }
    return indexed;
  }

  std::optional<double> classic(const std::string &id) const {
    const double a = articles(id);
    if (a == 0)
      return std::nullopt;
    return total(id) / a;
  }

  std::optional<double> mifcj(const std::string &id) const {
    const double a = articles(id);
    if (a == 0)
      return std::nullopt;
    double s = 0;
    for (const auto &b : incoming(id))
      s += citing_if(b.citing, false).value_or(0.0) * static_cast<double>(b.count);
    return s / a;
  }

  std::optional<double> buela_casal(const std::string &id) const {
    const auto m = mifcj(id);
    const auto own = own_if(id);
    if (!m || !own)
      return std::nullopt;
    return (*m + *own) / 2.0;
  }

  std::optional<double> hy(const std::string &id) const {
    const double a = articles(id);
    const auto own = own_if(id);
    if (a == 0 || !own || *own <= 0)
      return std::nullopt;
    double s = 0;
    for (const auto &b : incoming(id))
      s += weight(citing_if(b.citing, false).value_or(0.0) / *own) *
           static_cast<double>(b.count);
    return s / a;
  }

  std::optional<double> proposed(const std::string &id) const {
    const double a = articles(id);
    if (a == 0)
      return std::nullopt;
    double s = total(id);
    for (const auto &b : incoming(id))
      s += citing_if(b.citing, true).value_or(0.0) * static_cast<double>(b.count);
    return s / a;
  }

  std::vector<double> expanded(const std::string &id, bool five_year) const {
    std::vector<double> xs;
    for (const auto &b : incoming(id))
      if (auto f = citing_if(b.citing, five_year))
        for (std::int64_t k = 0; k < b.count; ++k)
          xs.push_back(*f);
    return xs;
  }

  std::optional<double> mean(const std::string &id, bool five_year) const {
    const auto xs = expanded(id, five_year);
    const double a = articles(id);
    if (xs.empty() || a == 0)
      return std::nullopt;
    double s = 0;
    for (double x : xs)
      s += x;
    return s / static_cast<double>(xs.size()) * total(id) / a;
  }

  std::optional<double> median(const std::string &id, bool five_year) const {
    auto xs = expanded(id, five_year);
    const double a = articles(id);
    if (xs.empty() || a == 0)
      return std::nullopt;
    std::sort(xs.begin(), xs.end());
    const auto n = xs.size();
    const double med =
        n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
    return med * total(id) / a;
  }

  std::string discipline(const std::string &id) const {
    return journal(id)->discipline.value_or("");
  }

  std::optional<double> nif(const std::string &id) const {
    const auto c = classic(id);
    if (!c)
      return std::nullopt;
    double field_c = 0, field_a = 0, disc_c = 0, disc_j = 0;
    for (const auto &j : raw.journals) {
      field_c += total(j.id);
      field_a += articles(j.id);
      if (discipline(j.id) == discipline(id)) {
        disc_c += total(j.id);
        if (articles(j.id) > 0)
          disc_j += 1;
      }
    }
    if (field_a <= 0 || disc_c <= 0)
      return std::nullopt;
    return *c * (field_c * disc_j) / (field_a * disc_c);
  }

  std::optional<double> mif(const std::string &id) const {
    const auto c = classic(id);
    if (!c)
      return std::nullopt;
    double top = 0;
    for (const auto &j : raw.journals)
      if (discipline(j.id) == discipline(id))
        if (auto o = classic(j.id))
          top = std::max(top, *o);
    if (top <= 0)
      return std::nullopt;
    return 100.0 * *c / top;
  }

  /// Expected compute_table cell for `ind`.
  std::optional<double> cell(const std::string &id, Indicator ind) const {
    switch (ind) {
    case Indicator::jcr_if: return classic(id);
    case Indicator::nif: return nif(id);
    case Indicator::mif: return mif(id);
    case Indicator::mifcj:
      return field_missing(id, false) ? std::nullopt : mifcj(id);
    case Indicator::buela_casal_wif:
      return field_missing(id, false) ? std::nullopt : buela_casal(id);
    case Indicator::hy_wif:
      return field_missing(id, false) ? std::nullopt : hy(id);
    case Indicator::proposed_wif:
      return field_missing(id, true) ? std::nullopt : proposed(id);
    case Indicator::citing_mean_2y: return mean(id, false);
    case Indicator::citing_median_2y: return median(id, false);
    case Indicator::citing_mean_5y: return mean(id, true);
    case Indicator::citing_median_5y: return median(id, true);
    }
    return std::nullopt;
  }
};

inline bool close_rel(double a, double b, double rel = 1e-12) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= rel * scale || std::abs(a - b) < 1e-300;
}

} // namespace wif::testing
