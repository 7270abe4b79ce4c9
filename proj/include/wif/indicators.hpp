#pragma once

// Impact-factor variants. Unless noted otherwise every journal-level
// indicator reads the batches cited in the evaluation year t and divides by
// the article count of the window t-1, t-2.
//
// Citing journals are looked up by id; their impact factors are read for
// year t-1. UNINDEXED citations and citing journals lacking the needed field
// are handled per indicator (see each function) and listed in
// IndicatorValue::skipped.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wif/corpus.hpp"
#include "wif/indicator_id.hpp"
#include "wif/table.hpp"

namespace wif {

struct WindowSpec {
  int evaluation_year = 0;
  int span = 2;
};

/// Field and discipline totals for the normalized impact factor.
struct FieldAggregates {
  double field_citations = 0;          ///< C, citations to the whole field
  double field_articles = 0;           ///< A, articles of the whole field
  double discipline_citations = 0;     ///< citations to one discipline
  double discipline_journal_count = 0; ///< publishing journals of it
};

struct IndicatorValue {
  std::string journal;
  Indicator indicator = Indicator::jcr_if;
  double value = 0;
  /// Citing ids whose batches lacked the impact factor the formula reads.
  std::vector<std::string> skipped;
  std::vector<std::string> notes;
};

/// Citations in year t over articles of the window. The numerator is the
/// journal's effective total (declared, else listed incl. UNINDEXED). A span
/// other than 2 gives a longer-window IF and is noted.
IndicatorValue classic_if(const Dataset &ds, std::string_view journal,
                          WindowSpec window);
IndicatorValue classic_if(const Dataset &ds, std::string_view journal);

/// (C * J) / (A * C_discipline)
double nif(const FieldAggregates &f);

/// Scales a group so its maximum impact factor maps to 100.
std::vector<std::pair<std::string, double>>
mif_reference_point(std::span<const std::pair<std::string, double>> group);

/// Sum of citing two-year IF times count, over window articles. UNINDEXED
/// and IF-less citing journals contribute 0.
IndicatorValue mifcj(const Dataset &ds, std::string_view journal);

double buela_casal_wif(double mifcj_value, double own_previous_if);

/// Ratio of citing to cited previous-year IF; DomainError when the cited
/// value is not positive.
double hy_quotient(double citing_previous_if, double cited_previous_if);

/// Logistic citation weight 10 (1 - 0.828 e^-q) / (1 + 16.183 e^-q).
/// Strictly increasing on q >= 0 with range [0.100099..., 10).
double hy_weight(double q);

/// Logistic-weighted citations over window articles. UNINDEXED and IF-less
/// citing journals take citing IF 0, i.e. weight hy_weight(0).
IndicatorValue hy_wif(const Dataset &ds, std::string_view journal);

/// Each citation weighted by (citing five-year IF + 1):
///   (sum FIF_i c_i + C) / A
/// with C the effective total, so UNINDEXED citations weigh 1.
IndicatorValue proposed_wif(const Dataset &ds, std::string_view journal);

/// Citation-weighted mean IF of the citing journals that carry `field`,
/// scaled by C / A.
IndicatorValue citing_if_mean(const Dataset &ds, std::string_view journal,
                              IfField field);

/// Median of the citation-expanded citing IFs (midpoint for even length),
/// scaled by C / A.
IndicatorValue citing_if_median(const Dataset &ds, std::string_view journal,
                                IfField field);

/// Single-journal evaluation of `ind`. nif and mif need group context and
/// are only available through compute_table.
IndicatorValue evaluate(const Dataset &ds, std::string_view journal,
                        Indicator ind);

/// Evaluated journals x `indicators`. Failing cells become absent with the
/// reason; an indicator reading a citing IF field is absent for a journal
/// whose indexed citing journals all lack it.
IndicatorTable compute_table(const Dataset &ds,
                             std::span<const Indicator> indicators);

} // namespace wif
