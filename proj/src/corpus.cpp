#include "wif/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace wif {

namespace {

bool batch_less(const CitationBatch &a, const CitationBatch &b) {
  return std::tie(a.cited, a.year, a.citing) <
         std::tie(b.cited, b.year, b.citing);
}

bool same_triple(const CitationBatch &a, const CitationBatch &b) {
  return a.cited == b.cited && a.year == b.year && a.citing == b.citing;
}

void check_if_history(const Journal &j, const std::map<int, double> &h,
                      std::string_view what) {
  for (const auto &[year, value] : h)
    if (!std::isfinite(value) || value < 0.0)
      throw SchemaError("journal '" + j.id + "': " + std::string(what) +
                        " for " + std::to_string(year) +
                        " must be a finite non-negative number");
}

} // namespace

std::optional<double> Journal::impact_factor(IfField field, int year) const {
  const auto &h = field == IfField::two_year ? two_year_if : five_year_if;
  if (auto it = h.find(year); it != h.end())
    return it->second;
  return std::nullopt;
}

Dataset::Dataset(int evaluation_year, std::vector<Journal> journals,
                 std::vector<CitationBatch> citations,
                 std::map<std::string, std::int64_t> declared_totals,
                 LoadMode mode)
    : year_(evaluation_year), journals_(std::move(journals)),
      declared_(std::move(declared_totals)) {
  for (std::size_t i = 0; i < journals_.size(); ++i) {
    const Journal &j = journals_[i];
    if (j.id.empty())
      throw SchemaError("journal id must not be empty");
    if (j.id == kUnindexed)
      throw SchemaError("journal id '" + j.id + "' is reserved");
    if (!index_.emplace(j.id, i).second)
      throw DuplicateError("duplicate journal id '" + j.id + "'");
    for (const auto &[year, n] : j.articles_by_year)
      if (n < 0)
        throw SchemaError("journal '" + j.id + "': article count for " +
                          std::to_string(year) + " is negative");
    check_if_history(j, j.two_year_if, "two-year IF");
    check_if_history(j, j.five_year_if, "five-year IF");
  }

  for (const auto &b : citations) {
    if (b.count < 1)
      throw SchemaError("citation " + b.citing + " -> " + b.cited +
                        ": count must be at least 1");
    if (b.citing.empty())
      throw SchemaError("citation to '" + b.cited + "' has empty citing id");
    if (!index_.contains(b.cited))
      throw IntegrityError("citation from '" + b.citing +
                           "' references unknown journal '" + b.cited + "'");
  }
  std::stable_sort(citations.begin(), citations.end(), batch_less);
  for (auto &b : citations) {
    if (!citations_.empty() && same_triple(citations_.back(), b)) {
      if (mode == LoadMode::strict)
        throw DuplicateError("duplicate citation batch " + b.citing + " -> " +
                             b.cited + " in " + std::to_string(b.year));
      citations_.back().count += b.count;
      continue;
    }
    citations_.push_back(std::move(b));
  }

  for (const auto &[id, total] : declared_) {
    if (!index_.contains(id))
      throw IntegrityError("declared total for unknown journal '" + id + "'");
    if (total < 0)
      throw SchemaError("declared total of '" + id + "' is negative");
  }
}

const Journal *Dataset::find(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end())
    return &journals_[it->second];
  return nullptr;
}

const Journal &Dataset::journal(std::string_view id) const {
  if (const Journal *j = find(id))
    return *j;
  throw IntegrityError("unknown journal '" + std::string(id) + "'");
}

std::span<const CitationBatch> Dataset::incoming(std::string_view id) const {
  auto key = [](const CitationBatch &b) {
    return std::tuple<std::string_view, int>(b.cited, b.year);
  };
  const std::tuple<std::string_view, int> probe(id, year_);
  auto lo = std::partition_point(
      citations_.begin(), citations_.end(),
      [&](const CitationBatch &b) { return key(b) < probe; });
  auto hi = std::partition_point(
      lo, citations_.end(),
      [&](const CitationBatch &b) { return key(b) == probe; });
  return {lo, hi};
}

std::vector<std::string> Dataset::evaluated_journals() const {
  std::set<std::string_view> cited;
  for (const auto &b : citations_)
    if (b.year == year_)
      cited.insert(b.cited);
  std::vector<std::string> out;
  for (const auto &j : journals_)
    if (!j.articles_by_year.empty() || cited.contains(j.id))
      out.push_back(j.id);
  return out;
}

std::optional<std::int64_t>
Dataset::declared_total(std::string_view id) const {
  if (auto it = declared_.find(std::string(id)); it != declared_.end())
    return it->second;
  return std::nullopt;
}

std::int64_t Dataset::listed_total(std::string_view id) const {
  std::int64_t sum = 0;
  for (const auto &b : incoming(id))
    sum += b.count;
  return sum;
}

std::int64_t Dataset::effective_total(std::string_view id) const {
  return declared_total(id).value_or(listed_total(id));
}

std::int64_t Dataset::window_articles(std::string_view id, int span) const {
  if (span < 1)
    throw DomainError("window span must be at least 1");
  const Journal &j = journal(id);
  std::int64_t sum = 0;
  for (int k = 1; k <= span; ++k)
    if (auto it = j.articles_by_year.find(year_ - k);
        it != j.articles_by_year.end())
      sum += it->second;
  return sum;
}

std::size_t Dataset::citing_journal_count(std::string_view id) const {
  // incoming() holds one batch per citing id
  std::size_t n = 0;
  for (const auto &b : incoming(id))
    n += b.unindexed() ? 0 : 1;
  return n;
}

std::optional<double> Dataset::citing_impact_factor(std::string_view citing,
                                                    IfField field,
                                                    int year) const {
  if (citing == kUnindexed)
    return std::nullopt;
  if (const Journal *j = find(citing))
    return j->impact_factor(field, year);
  return std::nullopt;
}

bool operator==(const Dataset &a, const Dataset &b) {
  if (a.year_ != b.year_ || a.declared_ != b.declared_ ||
      a.citations_ != b.citations_ || a.journals_.size() != b.journals_.size())
    return false;
  auto sorted = [](const std::vector<Journal> &js) {
    std::vector<const Journal *> out;
    for (const auto &j : js)
      out.push_back(&j);
    std::sort(out.begin(), out.end(),
              [](const Journal *x, const Journal *y) { return x->id < y->id; });
    return out;
  };
  const auto sa = sorted(a.journals_);
  const auto sb = sorted(b.journals_);
  return std::equal(sa.begin(), sa.end(), sb.begin(),
                    [](const Journal *x, const Journal *y) { return *x == *y; });
}

Dataset logistic_example() {
  constexpr int year = 2013;
  std::vector<Journal> journals;
  std::vector<CitationBatch> citations;
  const double cited_ifs[] = {2.0, 4.0, 6.0};
  const double citing_ifs[] = {2.0, 4.0, 8.0, 16.0};
  for (int k = 0; k < 4; ++k) {
    Journal c;
    c.id = "C" + std::to_string(k + 1);
    c.name = "Citing journal " + std::to_string(k + 1);
    c.two_year_if = {{year - 1, citing_ifs[k]}};
    journals.push_back(std::move(c));
  }
  for (int k = 0; k < 3; ++k) {
    Journal j;
    j.id = "W" + std::to_string(k + 1);
    j.name = "Cited journal " + std::to_string(k + 1);
    j.articles_by_year = {{year - 2, 10}, {year - 1, 10}};
    j.two_year_if = {{year - 1, cited_ifs[k]}};
    journals.push_back(j);
    for (int c = 0; c < 4; ++c)
      citations.push_back({"C" + std::to_string(c + 1), j.id, year, 2});
  }
  return Dataset(year, std::move(journals), std::move(citations), {},
                 LoadMode::strict);
}

// ---- validation -------------------------------------------------------------

std::size_t ConsistencyReport::count(IssueKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(),
                    [kind](const Issue &i) { return i.kind == kind; }));
}

std::string_view to_string(Severity s) {
  switch (s) {
  case Severity::clean:
    return "clean";
  case Severity::warnings:
    return "warnings";
  case Severity::errors:
    return "errors";
  }
  return "?";
}

std::string_view to_string(IssueKind k) {
  switch (k) {
  case IssueKind::surplus:
    return "surplus";
  case IssueKind::missing_citing_if:
    return "missing_citing_if";
  case IssueKind::missing_own_if:
    return "missing_own_if";
  case IssueKind::zero_denominator:
    return "zero_denominator";
  }
  return "?";
}

ConsistencyReport validate(const Dataset &ds,
                           std::span<const Indicator> required) {
  std::vector<Indicator> wanted;
  for (Indicator ind : required)
    if (std::find(wanted.begin(), wanted.end(), ind) == wanted.end())
      wanted.push_back(ind);

  const int prev = ds.evaluation_year() - 1;
  ConsistencyReport report;
  for (const auto &id : ds.evaluated_journals()) {
    const Journal &j = ds.journal(id);
    JournalConsistency entry;
    entry.journal = id;
    entry.declared_total = ds.declared_total(id);
    entry.listed_total = ds.listed_total(id);
    entry.surplus =
        entry.declared_total ? entry.listed_total - *entry.declared_total : 0;
    entry.window_articles = ds.window_articles(id);

    if (entry.surplus > 0)
      report.issues.push_back(
          {Severity::warnings, IssueKind::surplus, id, "", entry.surplus,
           "'" + j.name + "': listed citations " +
               std::to_string(entry.listed_total) + " exceed declared total " +
               std::to_string(*entry.declared_total) + " by " +
               std::to_string(entry.surplus)});
    if (entry.window_articles == 0)
      report.issues.push_back(
          {Severity::errors, IssueKind::zero_denominator, id, "", 0,
           "'" + j.name + "': zero denominator, no articles in " +
               std::to_string(prev - 1) + "-" + std::to_string(prev)});

    for (Indicator ind : wanted) {
      const auto needs = needs_of(ind);
      const std::string name(to_string(ind));
      if (needs.citing_field) {
        std::int64_t missing = 0;
        for (const auto &b : ds.incoming(id))
          if (!b.unindexed() &&
              !ds.citing_impact_factor(b.citing, *needs.citing_field, prev))
            ++missing;
        if (missing > 0)
          report.issues.push_back(
              {Severity::warnings, IssueKind::missing_citing_if, id, name,
               missing,
               "'" + j.name + "': " + std::to_string(missing) +
                   " citing journal(s) lack a " +
                   std::string(to_string(*needs.citing_field)) + " IF for " +
                   std::to_string(prev) + " (needed by " + name + ")"});
      }
      if (needs.own_previous_if) {
        const auto own = j.impact_factor(IfField::two_year, prev);
        if (!own || (ind == Indicator::hy_wif && *own <= 0.0))
          report.issues.push_back(
              {Severity::warnings, IssueKind::missing_own_if, id, name, 0,
               "'" + j.name + "': no positive two-year IF for " +
                   std::to_string(prev) + " (needed by " + name + ")"});
      }
    }
    report.journals.push_back(std::move(entry));
  }

  for (const auto &issue : report.issues)
    report.severity = std::max(report.severity, issue.severity);
  return report;
}

} // namespace wif
