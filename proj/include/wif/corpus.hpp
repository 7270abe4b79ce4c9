#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wif/error.hpp"
#include "wif/indicator_id.hpp"

namespace wif {

/// Citing-side marker for citations whose source carries no impact factor.
inline constexpr std::string_view kUnindexed = "UNINDEXED";

struct Journal {
  std::string id;
  std::string name;
  std::optional<std::string> discipline;
  std::map<int, std::int64_t> articles_by_year;
  std::map<int, double> two_year_if;
  std::map<int, double> five_year_if;

  std::optional<double> impact_factor(IfField field, int year) const;

  bool operator==(const Journal &) const = default;
};

/// Aggregate citation edge: `count` citations from `citing` to `cited` in
/// `year`.
struct CitationBatch {
  std::string citing;
  std::string cited;
  int year = 0;
  std::int64_t count = 0;

  bool unindexed() const { return citing == kUnindexed; }

  bool operator==(const CitationBatch &) const = default;
};

enum class LoadMode {
  lenient, ///< duplicate triples are merged by summing counts
  strict,  ///< duplicate triples are rejected
};

/// Immutable, validated collection of journals and citation batches for one
/// evaluation year.
///
/// Journals keep their input order. Citations are stored sorted by
/// (cited, year, citing). A citing id that is neither UNINDEXED nor a listed
/// journal is accepted and behaves as a journal without any impact factor.
class Dataset {
public:
  Dataset() = default;
  Dataset(int evaluation_year, std::vector<Journal> journals,
          std::vector<CitationBatch> citations,
          std::map<std::string, std::int64_t> declared_totals = {},
          LoadMode mode = LoadMode::strict);

  int evaluation_year() const { return year_; }
  const std::vector<Journal> &journals() const { return journals_; }
  const std::vector<CitationBatch> &citations() const { return citations_; }
  const std::map<std::string, std::int64_t> &declared_totals() const {
    return declared_;
  }

  const Journal *find(std::string_view id) const;
  /// Throws IntegrityError for unknown ids.
  const Journal &journal(std::string_view id) const;

  /// Batches citing `id` in the evaluation year.
  std::span<const CitationBatch> incoming(std::string_view id) const;

  /// Journals under evaluation: those with article counts or incoming
  /// citations, in input order.
  std::vector<std::string> evaluated_journals() const;

  std::optional<std::int64_t> declared_total(std::string_view id) const;
  /// Sum of all listed batch counts (UNINDEXED included) in the evaluation
  /// year.
  std::int64_t listed_total(std::string_view id) const;
  /// Declared total when present, listed total otherwise.
  std::int64_t effective_total(std::string_view id) const;

  /// a^{t-1} + ... + a^{t-span}
  std::int64_t window_articles(std::string_view id, int span = 2) const;

  /// Number of distinct indexed journals citing `id` in the evaluation year.
  std::size_t citing_journal_count(std::string_view id) const;

  /// IF of a citing journal in `year`; empty for UNINDEXED and unknown ids.
  std::optional<double> citing_impact_factor(std::string_view citing,
                                             IfField field, int year) const;

  /// Equality under canonical ordering (journals by id, batches by triple).
  friend bool operator==(const Dataset &a, const Dataset &b);

private:
  int year_ = 0;
  std::vector<Journal> journals_;
  std::vector<CitationBatch> citations_;
  std::map<std::string, std::int64_t> declared_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---- ingestion --------------------------------------------------------------

enum class Format { json, csv };

Dataset load_dataset_json(std::string_view text,
                          LoadMode mode = LoadMode::lenient);

/// Flat projection: `journals.csv` with columns id,name,discipline,
/// declared_total and any of articles_<year>, two_year_if_<year>,
/// five_year_if_<year>; `citations.csv` with citing,cited,year,count.
/// Without `evaluation_year` the latest citation year is used.
Dataset load_dataset_csv(std::string_view journals_csv,
                         std::string_view citations_csv,
                         std::optional<int> evaluation_year = std::nullopt,
                         LoadMode mode = LoadMode::lenient);

/// Loads a `.json` file, or a directory holding journals.csv and
/// citations.csv. The id `builtin:paper2013` yields paper_fixture().
Dataset load_dataset_file(const std::string &source,
                          LoadMode mode = LoadMode::lenient,
                          std::optional<int> evaluation_year = std::nullopt);

std::string to_json(const Dataset &ds);

struct CsvProjection {
  std::string journals;
  std::string citations;
};
CsvProjection to_csv(const Dataset &ds);

// ---- built-in data ----------------------------------------------------------

/// Twenty computer-science journals evaluated for 2013: window article
/// counts, declared citation totals, 2012 impact factors and the 2012
/// five-year impact factors of every itemized citing journal. Citations not
/// itemized form one UNINDEXED batch per journal.
Dataset paper_fixture();

/// Three journals (previous IF 2, 4, 6; 20 window articles each) cited twice
/// by each of four journals with previous IF 2, 4, 8, 16.
Dataset logistic_example();

// ---- validation -------------------------------------------------------------

enum class Severity { clean, warnings, errors };

enum class IssueKind {
  surplus,          ///< listed counts exceed the declared total
  missing_citing_if,
  missing_own_if,
  zero_denominator,
};

struct Issue {
  Severity severity = Severity::warnings;
  IssueKind kind = IssueKind::surplus;
  std::string journal;
  std::string indicator; ///< empty for surplus / zero denominator
  std::int64_t amount = 0;
  std::string message;

  bool operator==(const Issue &) const = default;
};

struct JournalConsistency {
  std::string journal;
  std::optional<std::int64_t> declared_total;
  std::int64_t listed_total = 0;
  /// listed - declared; zero without a declared total.
  std::int64_t surplus = 0;
  std::int64_t window_articles = 0;

  bool operator==(const JournalConsistency &) const = default;
};

struct ConsistencyReport {
  std::vector<JournalConsistency> journals;
  std::vector<Issue> issues;
  Severity severity = Severity::clean;

  std::size_t count(IssueKind kind) const;

  bool operator==(const ConsistencyReport &) const = default;
};

std::string_view to_string(Severity s);
std::string_view to_string(IssueKind k);

ConsistencyReport validate(const Dataset &ds,
                           std::span<const Indicator> required = {});

} // namespace wif
