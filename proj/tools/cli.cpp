#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wif/analysis.hpp"
#include "wif/corpus.hpp"
#include "wif/indicators.hpp"
#include "wif/render.hpp"

namespace wif::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string dataset = "builtin:paper2013";
  std::optional<int> year;
  std::string indicators;
  bool indicators_given = false;
  std::string format = "csv";
  std::string output;
  bool strict = false;
  bool full_precision = false;
  bool no_ranks = false;
  bool echo = false;

  // correlate / rank / scatter
  std::string from_table;
  std::string basis = "values";
  std::string x, y;
  bool svg = false;
  std::string output_dir;
};

/// Raised for bad flag values discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat output_format(const RunConfig &cfg) {
  if (auto f = parse_output_format(cfg.format))
    return *f;
  throw UsageError("unknown --format '" + cfg.format +
                   "' (expected csv, json or markdown)");
}

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw IoError("cannot write '" + path + "'");
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
  if (cfg.output.empty() || cfg.output == "-")
    out << text;
  else
    write_text(cfg.output, text);
}

std::vector<Indicator> requested(const RunConfig &cfg,
                                 std::span<const Indicator> fallback) {
  if (!cfg.indicators_given)
    return {fallback.begin(), fallback.end()};
  auto list = parse_indicator_list(cfg.indicators);
  if (list.empty())
    throw UsageError("--indicators must name at least one indicator");
  return list;
}

Dataset load(const RunConfig &cfg) {
  return load_dataset_file(cfg.dataset,
                           cfg.strict ? LoadMode::strict : LoadMode::lenient,
                           cfg.year);
}

/// Table from --from-table (optionally restricted to --indicators) or
/// computed from the dataset.
IndicatorTable source_table(const RunConfig &cfg,
                            std::span<const Indicator> fallback) {
  if (cfg.from_table.empty()) {
    auto table = compute_table(load(cfg), requested(cfg, fallback));
    table.compute_ranks();
    return table;
  }
  auto table = read_table_csv(read_text(cfg.from_table));
  if (!cfg.indicators_given)
    return table;

  std::vector<std::string> wanted;
  std::istringstream names(cfg.indicators);
  for (std::string n; std::getline(names, n, ',');) {
    n.erase(0, n.find_first_not_of(' '));
    n.erase(n.find_last_not_of(' ') + 1);
    if (n.empty())
      continue;
    if (!table.column_of(n))
      throw UnknownIndicatorError("table has no column '" + n + "'");
    wanted.push_back(n);
  }
  if (wanted.empty())
    throw UsageError("--indicators must name at least one column");
  IndicatorTable sub(table.journals(), wanted);
  std::vector<std::optional<int>> ranks;
  for (std::size_t r = 0; r < table.rows(); ++r)
    for (std::size_t c = 0; c < wanted.size(); ++c) {
      const auto src = *table.column_of(wanted[c]);
      sub.set(r, c, table.at(r, src));
      ranks.push_back(table.rank(r, src));
    }
  if (table.has_ranks())
    sub.set_ranks(std::move(ranks));
  return sub;
}

void echo(const RunConfig &cfg, std::string_view command, std::ostream &err) {
  if (!cfg.echo)
    return;
  err << "# " << command << ": dataset=" << cfg.dataset;
  if (cfg.year)
    err << " year=" << *cfg.year;
  if (!cfg.from_table.empty())
    err << " from-table=" << cfg.from_table;
  err << " format=" << cfg.format << " mode="
      << (cfg.strict ? "strict" : "lenient")
      << " precision=" << (cfg.full_precision ? "full" : "4 significant digits")
      << " basis=" << cfg.basis << "\n";
}

// ---- subcommands ------------------------------------------------------------

int cmd_compute(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  echo(cfg, "compute", err);
  const auto format = output_format(cfg);
  const auto indicators = requested(cfg, comparison_indicators());
  auto table = compute_table(load(cfg), indicators);
  table.compute_ranks();
  emit(cfg,
       render_table(table, format, {cfg.full_precision, !cfg.no_ranks}), out);
  return kOk;
}

int cmd_correlate(const RunConfig &cfg, std::ostream &out,
                  std::ostream &err) {
  echo(cfg, "correlate", err);
  const auto format = output_format(cfg);
  CorrelationBasis basis;
  if (cfg.basis == "values")
    basis = CorrelationBasis::values;
  else if (cfg.basis == "ranks")
    basis = CorrelationBasis::ranks;
  else
    throw UsageError("unknown --basis '" + cfg.basis +
                     "' (expected values or ranks)");
  const auto table = source_table(cfg, comparison_indicators());
  if (table.cols() < 2)
    throw UsageError("correlate needs at least two indicators");
  emit(cfg, render_correlation(pearson_matrix(table, basis), format), out);
  return kOk;
}

int cmd_rank(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  echo(cfg, "rank", err);
  const auto format = output_format(cfg);
  const auto source = source_table(cfg, comparison_indicators());
  IndicatorTable ranked = source;
  ranked.compute_ranks();

  for (std::size_t c = 0; c < ranked.cols(); ++c) {
    const auto column = ranked.column(c);
    if (column.empty())
      continue;
    for (const auto &group : rank_column(column).ties) {
      err << "tie in " << ranked.indicators()[c] << ":";
      for (const auto &id : group)
        err << ' ' << id;
      err << "\n";
    }
    if (!source.has_ranks())
      continue;
    for (std::size_t r = 0; r < ranked.rows(); ++r) {
      const auto given = source.rank(r, c);
      const auto computed = ranked.rank(r, c);
      if (given && computed && *given != *computed)
        err << "rank divergence in " << ranked.indicators()[c] << ": "
            << ranked.journals()[r] << " given [" << *given
            << "], recomputed [" << *computed << "]\n";
    }
  }
  emit(cfg, render_table(ranked, format, {cfg.full_precision, true}), out);
  return kOk;
}

int cmd_validate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  echo(cfg, "validate", err);
  const auto format = cfg.format == "csv" ? OutputFormat::markdown
                                          : output_format(cfg);
  const Dataset ds = load(cfg);
  std::vector<Indicator> required;
  if (cfg.indicators_given)
    required = parse_indicator_list(cfg.indicators);
  const auto report = validate(ds, required);
  emit(cfg, render_report(report, format), out);
  switch (report.severity) {
  case Severity::clean:
    return kOk;
  case Severity::warnings:
    return kWarnings;
  case Severity::errors:
    break;
  }
  return kError;
}

int cmd_scatter(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  echo(cfg, "scatter", err);
  if (cfg.from_table.empty())
    for (const auto &name : {cfg.x, cfg.y})
      if (!parse_indicator(name))
        throw UnknownIndicatorError("unknown indicator '" + name + "'");

  RunConfig pair = cfg;
  pair.indicators = cfg.x == cfg.y ? cfg.x : cfg.x + "," + cfg.y;
  pair.indicators_given = true;
  const auto table = source_table(pair, {});
  for (const auto &name : {cfg.x, cfg.y})
    if (table.column(*table.column_of(name)).empty())
      throw DegenerateError("column '" + name + "' is absent for every journal");

  const auto points = scatter_export(table, cfg.x, cfg.y);

  fs::path dir = cfg.output_dir;
  if (dir.empty())
    if (const char *env = std::getenv("WIF_OUTPUT_DIR"))
      dir = env;
  const std::string stem = cfg.x + "_vs_" + cfg.y;
  const fs::path csv_path =
      cfg.output.empty() ? dir / (stem + ".csv") : fs::path(cfg.output);

  std::ostringstream csv;
  write_scatter_csv(csv, points);
  if (cfg.output == "-")
    out << csv.str();
  else
    write_text(csv_path.string(), csv.str());

  if (cfg.svg) {
    fs::path svg_path = csv_path;
    if (cfg.output == "-")
      svg_path = dir / (stem + ".svg");
    else
      svg_path.replace_extension(".svg");
    std::ostringstream svg;
    write_scatter_svg(svg, points, display_name(cfg.x), display_name(cfg.y));
    write_text(svg_path.string(), svg.str());
    err << "wrote " << svg_path.string() << "\n";
  }
  if (cfg.output != "-")
    err << "wrote " << csv_path.string() << " (" << points.size()
        << " points)\n";
  return kOk;
}

void add_common(CLI::App *sub, RunConfig &cfg) {
  sub->add_option("--dataset", cfg.dataset,
                  "JSON file, CSV directory or builtin:paper2013")
      ->capture_default_str();
  sub->add_option("--year", cfg.year, "Override the evaluation year");
  sub->add_option("--indicators", cfg.indicators,
                  "Comma-separated indicator names")
      ->each([&cfg](const std::string &) { cfg.indicators_given = true; });
  sub->add_option("--format", cfg.format, "csv, json or markdown")
      ->capture_default_str();
  sub->add_option("-o,--output", cfg.output, "Output path ('-' = stdout)");
  sub->add_flag("--strict", cfg.strict, "Reject duplicate citation batches");
  sub->add_flag("--echo-config", cfg.echo,
                "Print the resolved configuration to stderr");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Weighted impact-factor indicators for journal evaluation",
               "wif"};
  app.require_subcommand(1);

  auto *compute = app.add_subcommand("compute", "Compute an indicator table");
  add_common(compute, cfg);
  compute->add_flag("--full-precision", cfg.full_precision,
                    "Shortest round-trip decimals instead of 4 digits");
  compute->add_flag("--no-ranks", cfg.no_ranks, "Omit bracketed ranks");

  auto *correlate =
      app.add_subcommand("correlate", "Pearson matrix between indicators");
  add_common(correlate, cfg);
  correlate->add_option("--from-table", cfg.from_table,
                        "Correlate the columns of a rendered table CSV");
  correlate->add_option("--basis", cfg.basis,
                        "values, or ranks (the table's own when present)")
      ->capture_default_str();

  auto *rank = app.add_subcommand("rank", "Rank journals per indicator");
  add_common(rank, cfg);
  rank->add_option("--from-table", cfg.from_table, "Rank a table CSV");
  rank->add_flag("--full-precision", cfg.full_precision,
                 "Shortest round-trip decimals instead of 4 digits");

  auto *validate_cmd =
      app.add_subcommand("validate", "Check dataset consistency");
  add_common(validate_cmd, cfg);

  auto *scatter = app.add_subcommand("scatter", "Export an indicator pair");
  add_common(scatter, cfg);
  scatter->add_option("--from-table", cfg.from_table, "Read a table CSV");
  scatter->add_option("--x", cfg.x, "Indicator on the x axis")->required();
  scatter->add_option("--y", cfg.y, "Indicator on the y axis")->required();
  scatter->add_flag("--svg", cfg.svg, "Also write an SVG scatter plot");
  scatter->add_option("--output-dir", cfg.output_dir,
                      "Directory for <x>_vs_<y>.{csv,svg} "
                      "(default $WIF_OUTPUT_DIR or .)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kError;
  }

  try {
    if (*compute)
      return cmd_compute(cfg, out, err);
    if (*correlate)
      return cmd_correlate(cfg, out, err);
    if (*rank)
      return cmd_rank(cfg, out, err);
    if (*validate_cmd)
      return cmd_validate(cfg, out, err);
    if (*scatter)
      return cmd_scatter(cfg, out, err);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const UnknownIndicatorError &e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
  }
  return kError;
}

} // namespace wif::cli
