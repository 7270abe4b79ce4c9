#include "wif/render.hpp"

#include <cmath>

#include <json.hpp>

#include "csv.hpp"
#include "numfmt.hpp"

namespace wif {

using nlohmann::json;

namespace {

constexpr std::string_view kAbsent = "\xE2\x80\x94"; // em dash

std::string value_text(double v, const TableStyle &style) {
  return style.full_precision ? numfmt::shortest(v) : numfmt::significant(v, 4);
}

std::string cell_text(const IndicatorTable &t, std::size_t r, std::size_t c,
                      const TableStyle &style) {
  const auto &cell = t.at(r, c);
  if (!cell.present())
    return std::string(kAbsent);
  std::string s = value_text(*cell.value, style);
  if (style.ranks)
    if (auto rk = t.rank(r, c))
      s += " [" + std::to_string(*rk) + "]";
  return s;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return std::string(s);
}

std::string md_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv")
    return OutputFormat::csv;
  if (name == "json")
    return OutputFormat::json;
  if (name == "markdown" || name == "md")
    return OutputFormat::markdown;
  return std::nullopt;
}

std::string render_table(const IndicatorTable &t, OutputFormat format,
                         const TableStyle &style) {
  std::string out;
  switch (format) {
  case OutputFormat::csv: {
    csv::Row header{"journal"};
    header.insert(header.end(), t.indicators().begin(), t.indicators().end());
    out = csv::join(header) + "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      csv::Row row{t.journals()[r]};
      for (std::size_t c = 0; c < t.cols(); ++c)
        row.push_back(cell_text(t, r, c, style));
      out += csv::join(row) + "\n";
    }
    return out;
  }
  case OutputFormat::markdown: {
    out = "| journal | name |";
    std::string rule = "|---|---|";
    for (const auto &ind : t.indicators()) {
      out += " " + md_escape(ind) + " |";
      rule += "---:|";
    }
    out += "\n" + rule + "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      out += "| " + md_escape(t.journals()[r]) + " | " +
             md_escape(t.names()[r]) + " |";
      for (std::size_t c = 0; c < t.cols(); ++c)
        out += " " + cell_text(t, r, c, style) + " |";
      out += "\n";
    }
    return out;
  }
  case OutputFormat::json: {
    json doc;
    doc["indicators"] = t.indicators();
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      json row;
      row["journal"] = t.journals()[r];
      row["name"] = t.names()[r];
      json cells = json::object();
      for (std::size_t c = 0; c < t.cols(); ++c) {
        const auto &cell = t.at(r, c);
        json o;
        if (cell.present())
          o["value"] = style.full_precision
                           ? *cell.value
                           : *numfmt::to_double(value_text(*cell.value, style));
        else
          o["value"] = nullptr;
        if (auto rk = t.rank(r, c))
          o["rank"] = *rk;
        if (!cell.note.empty())
          o["note"] = cell.note;
        cells[t.indicators()[c]] = std::move(o);
      }
      row["cells"] = std::move(cells);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }
  }
  return out;
}

IndicatorTable read_table_csv(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty())
    throw SchemaError("table csv: missing header row");
  const auto &header = rows.front();
  if (header.empty() || trim(header[0]) != "journal")
    throw SchemaError("table csv: first column must be 'journal'");

  std::vector<std::string> journals;
  std::vector<std::string> indicators;
  for (std::size_t c = 1; c < header.size(); ++c)
    indicators.push_back(trim(header[c]));
  for (std::size_t r = 1; r < rows.size(); ++r)
    journals.push_back(trim(rows[r].at(0)));

  IndicatorTable table(journals, indicators);
  std::vector<std::optional<int>> ranks(journals.size() * indicators.size());
  bool any_rank = false;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    if (row.size() != header.size())
      throw SchemaError("table csv line " + std::to_string(r + 1) + ": " +
                        std::to_string(row.size()) + " fields, expected " +
                        std::to_string(header.size()));
    for (std::size_t c = 1; c < row.size(); ++c) {
      std::string s = trim(row[c]);
      if (s.empty() || s == "-" || s == kAbsent) {
        table.set(r - 1, c - 1, Cell::absent("absent in source table"));
        continue;
      }
      std::optional<int> rank;
      if (auto open = s.find('['); open != std::string::npos) {
        const auto close = s.find(']', open);
        const auto n = close == std::string::npos
                           ? std::nullopt
                           : numfmt::to_int(s.substr(open + 1, close - open - 1));
        if (!n)
          throw SchemaError("table csv line " + std::to_string(r + 1) +
                            ": bad rank in '" + s + "'");
        rank = static_cast<int>(*n);
        s = trim(s.substr(0, open));
      }
      const auto v = numfmt::to_double(s);
      if (!v || !std::isfinite(*v))
        throw SchemaError("table csv line " + std::to_string(r + 1) + ": '" +
                          s + "' is not a number");
      table.set(r - 1, c - 1, {*v, {}});
      ranks[(r - 1) * indicators.size() + (c - 1)] = rank;
      any_rank = any_rank || rank.has_value();
    }
  }
  if (any_rank)
    table.set_ranks(std::move(ranks));
  return table;
}

std::string render_correlation(const CorrelationMatrix &m,
                               OutputFormat format) {
  const std::size_t n = m.size();
  std::string out;
  switch (format) {
  case OutputFormat::csv: {
    csv::Row header{"indicator"};
    header.insert(header.end(), m.indicators.begin(), m.indicators.end());
    out = csv::join(header) + "\n";
    for (std::size_t i = 0; i < n; ++i) {
      csv::Row row{m.indicators[i]};
      for (std::size_t j = 0; j < n; ++j)
        row.push_back(numfmt::fixed(m.at(i, j), 4));
      out += csv::join(row) + "\n";
    }
    return out;
  }
  case OutputFormat::markdown: {
    out = "| indicator |";
    std::string rule = "|---|";
    for (const auto &ind : m.indicators) {
      out += " " + md_escape(ind) + " |";
      rule += "---:|";
    }
    out += "\n" + rule + "\n";
    for (std::size_t i = 0; i < n; ++i) {
      out += "| " + md_escape(m.indicators[i]) + " |";
      for (std::size_t j = 0; j < n; ++j)
        out += " " + numfmt::fixed(m.at(i, j), 4) + " |";
      out += "\n";
    }
    return out;
  }
  case OutputFormat::json: {
    json doc;
    doc["indicators"] = m.indicators;
    json rows = json::array();
    json shared = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      json sh = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(*numfmt::to_double(numfmt::fixed(m.at(i, j), 4)));
        sh.push_back(m.shared_at(i, j));
      }
      rows.push_back(std::move(row));
      shared.push_back(std::move(sh));
    }
    doc["matrix"] = std::move(rows);
    doc["shared"] = std::move(shared);
    return doc.dump(2) + "\n";
  }
  }
  return out;
}

std::string render_report(const ConsistencyReport &report,
                          OutputFormat format) {
  if (format == OutputFormat::json) {
    json doc;
    doc["severity"] = std::string(to_string(report.severity));
    json journals = json::array();
    for (const auto &j : report.journals) {
      json o;
      o["journal"] = j.journal;
      o["declared_total"] =
          j.declared_total ? json(*j.declared_total) : json(nullptr);
      o["listed_total"] = j.listed_total;
      o["surplus"] = j.surplus;
      o["window_articles"] = j.window_articles;
      journals.push_back(std::move(o));
    }
    doc["journals"] = std::move(journals);
    json issues = json::array();
    for (const auto &i : report.issues) {
      json o;
      o["severity"] = std::string(to_string(i.severity));
      o["kind"] = std::string(to_string(i.kind));
      o["journal"] = i.journal;
      if (!i.indicator.empty())
        o["indicator"] = i.indicator;
      o["amount"] = i.amount;
      o["message"] = i.message;
      issues.push_back(std::move(o));
    }
    doc["issues"] = std::move(issues);
    return doc.dump(2) + "\n";
  }

  std::string out = "severity: " + std::string(to_string(report.severity)) +
                    " (" + std::to_string(report.journals.size()) +
                    " journals, " + std::to_string(report.issues.size()) +
                    " issues)\n";
  for (const auto &i : report.issues)
    out += std::string(i.severity == Severity::errors ? "error" : "warning") +
           " [" + std::string(to_string(i.kind)) + "] " + i.journal + ": " +
           i.message + "\n";
  return out;
}

} // namespace wif
