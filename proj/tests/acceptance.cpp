// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. INFO lines carry diagnostics that are not criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"
#include "wif/analysis.hpp"
#include "wif/indicators.hpp"
#include "wif/render.hpp"

using namespace wif;
using wif::testing::close_rel;
using wif::testing::Oracle;
using wif::testing::random_dataset;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &what, const std::string &detail) {
  std::printf("%s  criterion %2d  %s: %s\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  if (!ok)
    ++failures;
}

void info(const std::string &text) { std::printf("INFO  %s\n", text.c_str()); }

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IndicatorTable printed_comparison_table() {
  return read_table_csv(slurp(std::string(WIF_REPO_DATA_DIR) + "/comparison_table.csv"));
}

const Journal &by_name(const Dataset &ds, std::string_view name) {
  for (const auto &j : ds.journals())
    if (j.name == name)
      return j;
  throw IntegrityError("no journal named " + std::string(name));
}

std::map<std::string, double> column_map(const IndicatorTable &t,
                                         std::string_view ind) {
  std::map<std::string, double> out;
  for (const auto &[id, v] : t.column(*t.column_of(ind)))
    out[id] = v;
  return out;
}

// Journals whose printed Proposed WIF disagrees with the formula applied to
// the printed inputs, with the value we pin for each.
const std::map<std::string, double> kDocumentedProposed = {
    {"J7", (71.751 + 45.0) / 45.0}, // Fuzzy Optimization and Decision Making
    {"J16", 2.440},                 // IEEE Trans. Comput. Intell. AI in Games
    {"J19", 3.037},                 // IEEE Trans. Autonomous Mental Development
};

void criterion1(const Dataset &ds) {
  const double v = proposed_wif(ds, by_name(ds, "Swarm Intelligence").id).value;
  report(1, std::abs(v - 3.472) <= 0.001, "Proposed WIF exact cell",
         "Swarm Intelligence " + fmt(v, 6) + " vs 3.472 +/- 0.001");
}

void criterion2(const Dataset &ds, const IndicatorTable &printed) {
  const Indicator one[] = {Indicator::proposed_wif};
  const auto ours = column_map(compute_table(ds, one), "proposed_wif");
  const auto theirs = column_map(printed, "proposed_wif");
  std::vector<double> x, y;
  std::vector<std::string> outside;
  bool pinned = true;
  for (const auto &[id, v] : theirs) {
    x.push_back(ours.at(id));
    y.push_back(v);
    if (std::abs(ours.at(id) - v) > 0.07)
      outside.push_back(id);
  }
  for (const auto &[id, v] : kDocumentedProposed)
    pinned = pinned && std::abs(ours.at(id) - v) <= 0.001;
  const double r = pearson(x, y);

  bool exempt = true;
  std::size_t others = 0;
  std::string listing;
  for (const auto &id : outside) {
    exempt = exempt && kDocumentedProposed.count(id);
    if (id != "J7")
      ++others;
    listing += " " + id + "(" + fmt(ours.at(id), 3) + " vs " +
               fmt(theirs.at(id), 3) + ")";
  }
  const bool ok = r >= 0.995 && exempt && others <= 2 && pinned;
  report(2, ok, "Proposed WIF column",
         "r=" + fmt(r, 5) + " (>= 0.995); outside +/-0.07:" + listing +
             (pinned ? "; pinned values hold" : "; pinned values moved"));
}

void criterion3(const Dataset &ds) {
  struct Check {
    const char *label;
    double got, want, tol;
  };
  const Check checks[] = {
      {"J7 avg5", citing_if_mean(ds, "J7", IfField::five_year).value, 1.33, 0.005},
      {"J2 avg5", citing_if_mean(ds, "J2", IfField::five_year).value, 5.204, 0.005},
      {"J2 med5", citing_if_median(ds, "J2", IfField::five_year).value, 5.071, 0.005},
      {"J1 med5", citing_if_median(ds, "J1", IfField::five_year).value, 4.90, 0.01},
  };
  bool ok = true;
  std::string detail;
  for (const auto &c : checks) {
    ok = ok && std::abs(c.got - c.want) <= c.tol;
    detail += std::string(detail.empty() ? "" : ", ") + c.label + " " +
              fmt(c.got) + " vs " + fmt(c.want, 3);
  }
  report(3, ok, "Average/Median 5WIF cells", detail);
}

// Lower triangle of the published correlation table, in its column order.
const char *const kPublishedOrder[] = {
    "jcr_if",         "proposed_wif",     "hy_wif",         "buela_casal_wif",
    "citing_mean_2y", "citing_median_2y", "citing_mean_5y", "citing_median_5y"};
const double kPublished[8][8] = {
    {1},
    {0.7398, 1},
    {0.6120, 0.7384, 1},
    {0.6105, 0.6226, 0.2797, 1},
    {0.6256, 0.8060, 0.7414, 0.6210, 1},
    {0.6361, 0.7233, 0.6045, 0.6421, 0.8887, 1},
    {0.7218, 0.8135, 0.8075, 0.5774, 0.9428, 0.8647, 1},
    {0.6932, 0.7699, 0.7473, 0.5790, 0.9489, 0.8948, 0.9474, 1},
};

struct MatrixCheck {
  int within = 0;
  int total = 0;
  double worst = 0;
  std::string worst_pair;
  std::map<std::string, double> named;
};

MatrixCheck check_against_published(const std::string &json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  const auto names = doc["indicators"].get<std::vector<std::string>>();
  auto idx = [&](const char *n) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) -
                                    names.begin());
  };
  MatrixCheck m;
  for (int i = 1; i < 8; ++i)
    for (int j = 0; j < i; ++j) {
      const double got =
          doc["matrix"][idx(kPublishedOrder[i])][idx(kPublishedOrder[j])].get<double>();
      const double dev = std::abs(got - kPublished[i][j]);
      ++m.total;
      if (dev <= 0.005)
        ++m.within;
      const std::string pair =
          std::string(kPublishedOrder[j]) + "~" + kPublishedOrder[i];
      if (dev > m.worst) {
        m.worst = dev;
        m.worst_pair = pair;
      }
      m.named[pair] = got;
    }
  return m;
}

void criterion4() {
  const std::string table = std::string(WIF_REPO_DATA_DIR) + "/comparison_table.csv";
  std::ostringstream out, err;
  const int code = cli::run({"correlate", "--from-table", table, "--format", "json"},
                            out, err);
  if (code != cli::kOk) {
    report(4, false, "Correlation reproduction", "correlate failed: " + err.str());
    return;
  }
  const auto m = check_against_published(out.str());
  const bool ok = m.within == m.total;
  report(4, ok, "Correlation reproduction",
         std::to_string(m.within) + "/" + std::to_string(m.total) +
             " cells within +/-0.005; JCR~Proposed " +
             fmt(m.named.at("jcr_if~proposed_wif")) + " vs 0.7398, H&Y~BC " +
             fmt(m.named.at("hy_wif~buela_casal_wif")) + " vs 0.2797, Avg5~Med5 " +
             fmt(m.named.at("citing_mean_5y~citing_median_5y")) +
             " vs 0.9474; worst " + m.worst_pair + " off by " + fmt(m.worst));

  std::ostringstream rout, rerr;
  if (cli::run({"correlate", "--from-table", table, "--format", "json", "--basis",
                "ranks"},
               rout, rerr) == cli::kOk) {
    const auto r = check_against_published(rout.str());
    info("correlation over the printed rank brackets instead of values: " +
         std::to_string(r.within) + "/" + std::to_string(r.total) +
         " cells within +/-0.005, worst " + r.worst_pair + " off by " +
         fmt(r.worst));
  }
}

void criterion5() {
  const double w8 = hy_weight(8), w4 = hy_weight(4), w83 = hy_weight(8.0 / 3.0);
  const bool ok = std::abs(w8 - 9.94324) <= 1e-5 && std::abs(w4 - 7.5967) <= 1e-4 &&
                  std::abs(w83 - 4.43629) <= 1e-4 &&
                  std::abs(w8 * 0.1 - 0.994324) <= 1e-6 &&
                  std::abs(w4 * 0.1 - 0.759668) <= 1e-6 &&
                  std::abs(w83 * 0.1 - 0.443629) <= 1e-6;
  report(5, ok, "H&Y calibration",
         "w(8)=" + fmt(w8, 6) + " w(4)=" + fmt(w4, 6) + " w(8/3)=" + fmt(w83, 6) +
             "; /10 = " + fmt(w8 / 10, 6) + " " + fmt(w4 / 10, 6) + " " +
             fmt(w83 / 10, 6));
}

void criterion6() {
  const auto ds = logistic_example();
  const double a = hy_wif(ds, "W1").value, b = hy_wif(ds, "W2").value,
               c = hy_wif(ds, "W3").value;
  report(6, a > b && b > c, "H&Y anti-example direction",
         "cited IF 2,4,6 -> " + fmt(a) + " > " + fmt(b) + " > " + fmt(c));
}

void criterion7() {
  std::mt19937_64 rng(7007);
  int checked = 0, bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto raw = random_dataset(rng);
    for (auto &j : raw.journals)
      for (auto &[y, v] : j.five_year_if)
        v = 0.0;
    const auto ds = raw.build();
    for (const auto &j : raw.journals) {
      if (ds.window_articles(j.id) == 0)
        continue;
      ++checked;
      if (!close_rel(proposed_wif(ds, j.id).value, classic_if(ds, j.id).value))
        ++bad;
    }
  }
  report(7, bad == 0 && checked > 0, "Classic-IF reduction",
         "200 datasets, " + std::to_string(checked) + " journals, " +
             std::to_string(bad) + " mismatches at 1e-12 relative");
}

void criterion8() {
  std::mt19937_64 rng(8008);
  long compared = 0, absent = 0, bad = 0;
  std::string first;
  for (int trial = 0; trial < 500; ++trial) {
    const auto raw = random_dataset(rng);
    const Oracle oracle{raw};
    const auto ds = raw.build();
    const auto table = compute_table(ds, all_indicators());
    for (std::size_t r = 0; r < table.rows(); ++r)
      for (std::size_t c = 0; c < table.cols(); ++c) {
        const auto &id = table.journals()[r];
        const auto ind = *parse_indicator(table.indicators()[c]);
        const auto want = oracle.cell(id, ind);
        const auto &got = table.at(r, c);
        const bool same = want ? got.present() && close_rel(*got.value, *want)
                               : !got.present();
        if (!want)
          ++absent;
        ++compared;
        if (!same && ++bad == 1)
          first = "trial " + std::to_string(trial) + " " + id + " " +
                  std::string(to_string(ind));
      }
    // the single-journal entry points, without the table's absence rule
    for (const auto &j : raw.journals) {
      const std::pair<Indicator, std::optional<double>> direct[] = {
          {Indicator::mifcj, oracle.mifcj(j.id)},
          {Indicator::buela_casal_wif, oracle.buela_casal(j.id)},
          {Indicator::hy_wif, oracle.hy(j.id)},
          {Indicator::proposed_wif, oracle.proposed(j.id)}};
      for (const auto &[ind, want] : direct) {
        std::optional<double> got;
        try {
          got = evaluate(ds, j.id, ind).value;
        } catch (const Error &) {
        }
        ++compared;
        const bool same = want ? got && close_rel(*got, *want) : !got;
        if (!same && ++bad == 1)
          first = "trial " + std::to_string(trial) + " " + j.id + " " +
                  std::string(to_string(ind)) + " (direct)";
      }
    }
  }
  report(8, bad == 0, "Oracle equivalence",
         "500 datasets, " + std::to_string(compared) + " comparisons (" +
             std::to_string(absent) + " expected absent), " + std::to_string(bad) +
             " mismatches at 1e-12 relative" + (first.empty() ? "" : "; first " + first));
}

void criterion9(const Dataset &ds) {
  const auto rep = validate(ds, all_indicators());
  const auto surplus = rep.count(IssueKind::surplus);
  const auto zero = rep.count(IssueKind::zero_denominator);
  bool ok = surplus == 1 && zero == 0;
  std::string who;
  for (const auto &i : rep.issues)
    if (i.kind == IssueKind::surplus) {
      ok = ok && i.journal == "J7" && i.amount == 9;
      who = i.journal + " surplus " + std::to_string(i.amount);
    }
  report(9, ok, "Validator",
         std::to_string(surplus) + " surplus warning (" + who + "), " +
             std::to_string(zero) + " zero-denominator errors");
}

void criterion10(const Dataset &ds, const IndicatorTable &printed) {
  const auto col = *printed.column_of("proposed_wif");
  const auto recomputed = rank_column(printed.column(col));
  int match = 0;
  std::string mismatches;
  bool documented = true;
  for (std::size_t r = 0; r < printed.rows(); ++r) {
    if (recomputed.ranks[r].rank == printed.rank(r, col))
      ++match;
    else {
      mismatches += " " + printed.journals()[r];
      documented = documented && kDocumentedProposed.count(printed.journals()[r]);
    }
  }
  report(10, match >= 18 && documented, "Rank check",
         std::to_string(match) + "/20 recomputed ranks of the printed column match" +
             (mismatches.empty() ? "" : "; mismatches:" + mismatches));

  const Indicator one[] = {Indicator::proposed_wif};
  auto ours = compute_table(ds, one);
  ours.compute_ranks();
  int ours_match = 0;
  std::string moved;
  for (std::size_t r = 0; r < ours.rows(); ++r) {
    const auto pr = printed.rank(*printed.row_of(ours.journals()[r]), col);
    if (ours.rank(r, 0) == pr)
      ++ours_match;
    else
      moved += " " + ours.journals()[r];
  }
  info("ranks of the Proposed WIF values computed from the dataset: " +
       std::to_string(ours_match) + "/20 match the brackets; differ:" + moved);
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto ds = paper_fixture();
    const auto printed = printed_comparison_table();
    criterion1(ds);
    criterion2(ds, printed);
    criterion3(ds);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(ds);
    criterion10(ds, printed);
  } catch (const std::exception &e) {
    std::printf("FAIL  acceptance aborted: %s\n", e.what());
    return 2;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("%s  %d criteria failed, %.2f s\n", failures ? "FAIL" : "PASS",
              failures, secs);
  return failures ? 1 : 0;
}
