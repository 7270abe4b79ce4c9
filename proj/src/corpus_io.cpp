#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "numfmt.hpp"
#include "wif/corpus.hpp"

namespace wif {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---- JSON -------------------------------------------------------------------

const json &require(const json &obj, const char *key, const std::string &ctx) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError(ctx + ": missing required field '" + key + "'");
  return *it;
}

std::int64_t as_integer(const json &v, const std::string &ctx) {
  if (!v.is_number_integer())
    throw SchemaError(ctx + ": expected an integer");
  return v.get<std::int64_t>();
}

double as_number(const json &v, const std::string &ctx) {
  if (!v.is_number())
    throw SchemaError(ctx + ": expected a number");
  return v.get<double>();
}

std::string as_string(const json &v, const std::string &ctx) {
  if (!v.is_string())
    throw SchemaError(ctx + ": expected a string");
  return v.get<std::string>();
}

int parse_year(const std::string &key, const std::string &ctx) {
  auto y = numfmt::to_int(key);
  if (!y)
    throw SchemaError(ctx + ": '" + key + "' is not a year");
  return static_cast<int>(*y);
}

template <class T, class Convert>
std::map<int, T> year_map(const json &obj, const char *key,
                          const std::string &ctx, Convert convert) {
  std::map<int, T> out;
  auto it = obj.find(key);
  if (it == obj.end())
    return out;
  const std::string sub = ctx + "." + key;
  if (!it->is_object())
    throw SchemaError(sub + ": expected an object keyed by year");
  for (const auto &[k, v] : it->items())
    out[parse_year(k, sub)] = convert(v, sub + "." + k);
  return out;
}

Journal journal_from_json(const json &obj, std::size_t index) {
  std::string ctx = "journals[" + std::to_string(index) + "]";
  if (!obj.is_object())
    throw SchemaError(ctx + ": expected an object");
  Journal j;
  j.id = as_string(require(obj, "id", ctx), ctx + ".id");
  ctx = "journal '" + j.id + "'";
  j.name = as_string(require(obj, "name", ctx), ctx + ".name");
  if (auto it = obj.find("discipline"); it != obj.end() && !it->is_null())
    j.discipline = as_string(*it, ctx + ".discipline");
  j.articles_by_year =
      year_map<std::int64_t>(obj, "articles_by_year", ctx, as_integer);
  j.two_year_if = year_map<double>(obj, "two_year_if", ctx, as_number);
  j.five_year_if = year_map<double>(obj, "five_year_if", ctx, as_number);
  return j;
}

CitationBatch batch_from_json(const json &obj, std::size_t index) {
  const std::string ctx = "citations[" + std::to_string(index) + "]";
  if (!obj.is_object())
    throw SchemaError(ctx + ": expected an object");
  CitationBatch b;
  b.citing = as_string(require(obj, "citing", ctx), ctx + ".citing");
  b.cited = as_string(require(obj, "cited", ctx), ctx + ".cited");
  b.year = static_cast<int>(as_integer(require(obj, "year", ctx), ctx + ".year"));
  b.count = as_integer(require(obj, "count", ctx), ctx + ".count");
  return b;
}

template <class T> json year_object(const std::map<int, T> &m) {
  json out = json::object();
  for (const auto &[year, v] : m)
    out[std::to_string(year)] = v;
  return out;
}

// ---- CSV --------------------------------------------------------------------

struct Header {
  std::vector<std::string> names;

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  }

  std::size_t require(std::string_view name, std::string_view file) const {
    if (auto i = find(name))
      return *i;
    throw SchemaError(std::string(file) + ": missing column '" +
                      std::string(name) + "'");
  }
};

std::string cell(const csv::Row &row, std::size_t i) {
  return i < row.size() ? row[i] : std::string();
}

std::string read_file(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw IoError("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

Dataset load_dataset_json(std::string_view text, LoadMode mode) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!doc.is_object())
    throw SchemaError("dataset: top level must be an object");

  const int year = static_cast<int>(
      as_integer(require(doc, "evaluation_year", "dataset"), "evaluation_year"));

  const json &js = require(doc, "journals", "dataset");
  const json &cs = require(doc, "citations", "dataset");
  if (!js.is_array() || !cs.is_array())
    throw SchemaError("dataset: 'journals' and 'citations' must be arrays");

  std::vector<Journal> journals;
  for (std::size_t i = 0; i < js.size(); ++i)
    journals.push_back(journal_from_json(js[i], i));
  std::vector<CitationBatch> citations;
  for (std::size_t i = 0; i < cs.size(); ++i)
    citations.push_back(batch_from_json(cs[i], i));

  std::map<std::string, std::int64_t> declared;
  if (auto it = doc.find("declared_totals"); it != doc.end() && !it->is_null()) {
    if (!it->is_object())
      throw SchemaError("declared_totals: expected an object");
    for (const auto &[id, v] : it->items())
      declared[id] = as_integer(v, "declared_totals." + id);
  }
  return Dataset(year, std::move(journals), std::move(citations),
                 std::move(declared), mode);
}

std::string to_json(const Dataset &ds) {
  json doc;
  doc["evaluation_year"] = ds.evaluation_year();
  json journals = json::array();
  for (const auto &j : ds.journals()) {
    json o;
    o["id"] = j.id;
    o["name"] = j.name;
    if (j.discipline)
      o["discipline"] = *j.discipline;
    o["articles_by_year"] = year_object(j.articles_by_year);
    o["two_year_if"] = year_object(j.two_year_if);
    o["five_year_if"] = year_object(j.five_year_if);
    journals.push_back(std::move(o));
  }
  doc["journals"] = std::move(journals);
  json citations = json::array();
  for (const auto &b : ds.citations())
    citations.push_back(
        {{"citing", b.citing}, {"cited", b.cited}, {"year", b.year},
         {"count", b.count}});
  doc["citations"] = std::move(citations);
  if (!ds.declared_totals().empty()) {
    json d = json::object();
    for (const auto &[id, n] : ds.declared_totals())
      d[id] = n;
    doc["declared_totals"] = std::move(d);
  }
  return doc.dump(2) + "\n";
}

Dataset load_dataset_csv(std::string_view journals_csv,
                         std::string_view citations_csv,
                         std::optional<int> evaluation_year, LoadMode mode) {
  const auto jrows = csv::parse(journals_csv);
  const auto crows = csv::parse(citations_csv);
  if (jrows.empty())
    throw SchemaError("journals.csv: missing header row");
  if (crows.empty())
    throw SchemaError("citations.csv: missing header row");

  const Header jh{jrows.front()};
  const auto id_col = jh.require("id", "journals.csv");
  const auto name_col = jh.require("name", "journals.csv");
  const auto disc_col = jh.find("discipline");
  const auto decl_col = jh.find("declared_total");

  struct YearColumn {
    std::size_t index;
    int kind; // 0 articles, 1 two-year IF, 2 five-year IF
    int year;
  };
  std::vector<YearColumn> year_cols;
  const std::pair<std::string_view, int> prefixes[] = {
      {"articles_", 0}, {"two_year_if_", 1}, {"five_year_if_", 2}};
  for (std::size_t i = 0; i < jh.names.size(); ++i)
    for (const auto &[prefix, kind] : prefixes)
      if (jh.names[i].starts_with(prefix)) {
        const auto y = numfmt::to_int(
            std::string_view(jh.names[i]).substr(prefix.size()));
        if (!y)
          throw SchemaError("journals.csv: bad year in column '" +
                            jh.names[i] + "'");
        year_cols.push_back({i, kind, static_cast<int>(*y)});
      }

  std::vector<Journal> journals;
  std::map<std::string, std::int64_t> declared;
  for (std::size_t r = 1; r < jrows.size(); ++r) {
    const auto &row = jrows[r];
    const std::string ctx = "journals.csv line " + std::to_string(r + 1);
    Journal j;
    j.id = cell(row, id_col);
    j.name = cell(row, name_col);
    if (disc_col && !cell(row, *disc_col).empty())
      j.discipline = cell(row, *disc_col);
    for (const auto &yc : year_cols) {
      const std::string v = cell(row, yc.index);
      if (v.empty())
        continue;
      if (yc.kind == 0) {
        const auto n = numfmt::to_int(v);
        if (!n)
          throw SchemaError(ctx + ": '" + v + "' is not an integer");
        j.articles_by_year[yc.year] = *n;
      } else {
        const auto x = numfmt::to_double(v);
        if (!x)
          throw SchemaError(ctx + ": '" + v + "' is not a number");
        (yc.kind == 1 ? j.two_year_if : j.five_year_if)[yc.year] = *x;
      }
    }
    if (decl_col && !cell(row, *decl_col).empty()) {
      const auto n = numfmt::to_int(cell(row, *decl_col));
      if (!n)
        throw SchemaError(ctx + ": declared_total is not an integer");
      declared[j.id] = *n;
    }
    journals.push_back(std::move(j));
  }

  const Header ch{crows.front()};
  const auto citing_col = ch.require("citing", "citations.csv");
  const auto cited_col = ch.require("cited", "citations.csv");
  const auto year_col = ch.require("year", "citations.csv");
  const auto count_col = ch.require("count", "citations.csv");
  std::vector<CitationBatch> citations;
  std::optional<int> latest;
  for (std::size_t r = 1; r < crows.size(); ++r) {
    const auto &row = crows[r];
    const std::string ctx = "citations.csv line " + std::to_string(r + 1);
    const auto year = numfmt::to_int(cell(row, year_col));
    const auto count = numfmt::to_int(cell(row, count_col));
    if (!year || !count)
      throw SchemaError(ctx + ": year and count must be integers");
    citations.push_back({cell(row, citing_col), cell(row, cited_col),
                         static_cast<int>(*year), *count});
    latest = std::max(latest.value_or(static_cast<int>(*year)),
                      static_cast<int>(*year));
  }
  const int year = evaluation_year.value_or(latest.value_or(0));
  return Dataset(year, std::move(journals), std::move(citations),
                 std::move(declared), mode);
}

CsvProjection to_csv(const Dataset &ds) {
  std::set<int> article_years, two_years, five_years;
  for (const auto &j : ds.journals()) {
    for (const auto &[y, _] : j.articles_by_year)
      article_years.insert(y);
    for (const auto &[y, _] : j.two_year_if)
      two_years.insert(y);
    for (const auto &[y, _] : j.five_year_if)
      five_years.insert(y);
  }

  csv::Row header{"id", "name", "discipline", "declared_total"};
  for (int y : article_years)
    header.push_back("articles_" + std::to_string(y));
  for (int y : two_years)
    header.push_back("two_year_if_" + std::to_string(y));
  for (int y : five_years)
    header.push_back("five_year_if_" + std::to_string(y));

  CsvProjection out;
  out.journals = csv::join(header) + "\n";
  for (const auto &j : ds.journals()) {
    csv::Row row{j.id, j.name, j.discipline.value_or(""), ""};
    if (auto d = ds.declared_total(j.id))
      row[3] = std::to_string(*d);
    for (int y : article_years) {
      auto it = j.articles_by_year.find(y);
      row.push_back(it == j.articles_by_year.end() ? ""
                                                   : std::to_string(it->second));
    }
    for (const auto *h : {&j.two_year_if, &j.five_year_if}) {
      const auto &years = h == &j.two_year_if ? two_years : five_years;
      for (int y : years) {
        auto it = h->find(y);
        row.push_back(it == h->end() ? "" : numfmt::shortest(it->second));
      }
    }
    out.journals += csv::join(row) + "\n";
  }

  out.citations = "citing,cited,year,count\n";
  for (const auto &b : ds.citations())
    out.citations += csv::join({b.citing, b.cited, std::to_string(b.year),
                                std::to_string(b.count)}) +
                     "\n";
  return out;
}

Dataset load_dataset_file(const std::string &source, LoadMode mode,
                          std::optional<int> evaluation_year) {
  if (source.starts_with("builtin:")) {
    const std::string_view id = std::string_view(source).substr(8);
    Dataset ds;
    if (id == "paper2013")
      ds = paper_fixture();
    else if (id == "logistic-example")
      ds = logistic_example();
    else
      throw IoError("unknown builtin dataset '" + std::string(id) + "'");
    if (evaluation_year && *evaluation_year != ds.evaluation_year())
      ds = Dataset(*evaluation_year, ds.journals(), ds.citations(),
                   ds.declared_totals(), mode);
    return ds;
  }

  const fs::path path(source);
  std::error_code ec;
  if (fs::is_directory(path, ec))
    return load_dataset_csv(read_file(path / "journals.csv"),
                            read_file(path / "citations.csv"), evaluation_year,
                            mode);
  Dataset ds = load_dataset_json(read_file(path), mode);
  if (evaluation_year && *evaluation_year != ds.evaluation_year())
    ds = Dataset(*evaluation_year, ds.journals(), ds.citations(),
                 ds.declared_totals(), mode);
  return ds;
}

} // namespace wif
