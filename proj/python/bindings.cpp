#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wif/analysis.hpp"
#include "wif/corpus.hpp"
#include "wif/indicators.hpp"
#include "wif/render.hpp"

namespace py = pybind11;
using namespace wif;

namespace {

IfField parse_field(const std::string &name) {
  if (name == "two_year")
    return IfField::two_year;
  if (name == "five_year")
    return IfField::five_year;
  throw DomainError("field must be 'two_year' or 'five_year', got '" + name + "'");
}

LoadMode mode_of(bool strict) { return strict ? LoadMode::strict : LoadMode::lenient; }

py::list table_values(const IndicatorTable &t) {
  py::list rows;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const auto &cell = t.at(r, c);
      row.append(cell.present() ? py::cast(*cell.value) : py::none());
    }
    rows.append(row);
  }
  return rows;
}

py::dict report_dict(const ConsistencyReport &rep) {
  py::list issues;
  for (const auto &i : rep.issues) {
    py::dict d;
    d["severity"] = std::string(to_string(i.severity));
    d["kind"] = std::string(to_string(i.kind));
    d["journal"] = i.journal;
    d["indicator"] = i.indicator;
    d["amount"] = i.amount;
    d["message"] = i.message;
    issues.append(d);
  }
  py::dict out;
  out["severity"] = std::string(to_string(rep.severity));
  out["issues"] = issues;
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Impact-factor variants over a citation dataset";

  py::register_exception<Error>(m, "WifError", PyExc_ValueError);

  py::class_<Dataset>(m, "Dataset")
      .def_property_readonly("evaluation_year", &Dataset::evaluation_year)
      .def_property_readonly("journal_ids",
                             [](const Dataset &ds) {
                               std::vector<std::string> ids;
                               for (const auto &j : ds.journals())
                                 ids.push_back(j.id);
                               return ids;
                             })
      .def("name", [](const Dataset &ds, const std::string &id) {
        return ds.journal(id).name;
      })
      .def("evaluated_journals", &Dataset::evaluated_journals)
      .def("window_articles", &Dataset::window_articles, py::arg("journal"),
           py::arg("span") = 2)
      .def("declared_total", &Dataset::declared_total)
      .def("listed_total", &Dataset::listed_total)
      .def("effective_total", &Dataset::effective_total)
      .def("to_json", [](const Dataset &ds) { return to_json(ds); })
      .def("__eq__", [](const Dataset &a, const Dataset &b) { return a == b; })
      .def("__repr__", [](const Dataset &ds) {
        return "<Dataset year=" + std::to_string(ds.evaluation_year()) + " journals=" +
               std::to_string(ds.journals().size()) + " batches=" +
               std::to_string(ds.citations().size()) + ">";
      });

  py::class_<IndicatorTable>(m, "IndicatorTable")
      .def_property_readonly("journals", &IndicatorTable::journals)
      .def_property_readonly("names", &IndicatorTable::names)
      .def_property_readonly("indicators", &IndicatorTable::indicators)
      .def("values", &table_values,
           "Row-major values; None marks an absent cell.")
      .def("column",
           [](const IndicatorTable &t, const std::string &ind) {
             const auto c = t.column_of(ind);
             if (!c)
               throw UnknownIndicatorError("no column '" + ind + "'");
             return t.column(*c);
           })
      .def("rank", &IndicatorTable::rank)
      .def("compute_ranks", &IndicatorTable::compute_ranks)
      .def("to_csv",
           [](const IndicatorTable &t, bool full_precision) {
             return render_table(t, OutputFormat::csv, {full_precision, true});
           },
           py::arg("full_precision") = false);

  m.def("load_dataset",
        [](const std::string &source, bool strict, std::optional<int> year) {
          return load_dataset_file(source, mode_of(strict), year);
        },
        py::arg("source"), py::arg("strict") = false, py::arg("year") = py::none(),
        "Load a .json file, a directory with journals.csv/citations.csv, or "
        "'builtin:paper2013' / 'builtin:logistic-example'.");
  m.def("load_dataset_json",
        [](const std::string &text, bool strict) {
          return load_dataset_json(text, mode_of(strict));
        },
        py::arg("text"), py::arg("strict") = false);
  m.def("paper_fixture", &paper_fixture);
  m.def("logistic_example", &logistic_example);

  m.def("classic_if",
        [](const Dataset &ds, const std::string &j, int span) {
          return classic_if(ds, j, {ds.evaluation_year(), span}).value;
        },
        py::arg("dataset"), py::arg("journal"), py::arg("span") = 2);
  m.def("mifcj", [](const Dataset &ds, const std::string &j) { return mifcj(ds, j).value; });
  m.def("hy_wif", [](const Dataset &ds, const std::string &j) { return hy_wif(ds, j).value; });
  m.def("proposed_wif",
        [](const Dataset &ds, const std::string &j) { return proposed_wif(ds, j).value; });
  m.def("citing_if_mean",
        [](const Dataset &ds, const std::string &j, const std::string &field) {
          return citing_if_mean(ds, j, parse_field(field)).value;
        },
        py::arg("dataset"), py::arg("journal"), py::arg("field") = "five_year");
  m.def("citing_if_median",
        [](const Dataset &ds, const std::string &j, const std::string &field) {
          return citing_if_median(ds, j, parse_field(field)).value;
        },
        py::arg("dataset"), py::arg("journal"), py::arg("field") = "five_year");
  m.def("nif",
        [](double c, double a, double c_disc, double j) {
          return nif({c, a, c_disc, j});
        },
        py::arg("field_citations"), py::arg("field_articles"),
        py::arg("discipline_citations"), py::arg("discipline_journals"));
  m.def("mif_reference_point",
        [](const std::vector<std::pair<std::string, double>> &group) {
          return mif_reference_point(group);
        });
  m.def("buela_casal_wif", &buela_casal_wif);
  m.def("hy_quotient", &hy_quotient);
  m.def("hy_weight", &hy_weight);

  m.def("indicators", [] {
    std::vector<std::string> out;
    for (auto ind : all_indicators())
      out.emplace_back(to_string(ind));
    return out;
  });
  m.def("compute_table",
        [](const Dataset &ds, std::optional<std::vector<std::string>> names) {
          std::vector<Indicator> inds;
          if (!names)
            inds.assign(comparison_indicators().begin(), comparison_indicators().end());
          else
            for (const auto &n : *names) {
              auto ind = parse_indicator(n);
              if (!ind)
                throw UnknownIndicatorError("unknown indicator '" + n + "'");
              inds.push_back(*ind);
            }
          return compute_table(ds, inds);
        },
        py::arg("dataset"), py::arg("indicators") = py::none());
  m.def("read_table_csv", [](const std::string &text) { return read_table_csv(text); });

  m.def("rank_column",
        [](const std::vector<std::pair<std::string, double>> &values) {
          std::vector<std::pair<std::string, int>> out;
          for (const auto &r : rank_column(values).ranks)
            out.emplace_back(r.journal, r.rank);
          return out;
        });
  m.def("pearson", [](const std::vector<double> &x, const std::vector<double> &y) {
    return pearson(x, y);
  });
  m.def("pearson_matrix",
        [](const IndicatorTable &t, const std::string &basis) {
          CorrelationBasis b;
          if (basis == "values")
            b = CorrelationBasis::values;
          else if (basis == "ranks")
            b = CorrelationBasis::ranks;
          else
            throw DomainError("basis must be 'values' or 'ranks'");
          const auto cm = pearson_matrix(t, b);
          std::vector<std::vector<double>> rows(cm.size());
          for (std::size_t i = 0; i < cm.size(); ++i)
            for (std::size_t j = 0; j < cm.size(); ++j)
              rows[i].push_back(cm.at(i, j));
          return py::make_tuple(cm.indicators, rows);
        },
        py::arg("table"), py::arg("basis") = "values",
        "Returns (indicator names, square coefficient matrix).");

  m.def("validate",
        [](const Dataset &ds, const std::vector<std::string> &required) {
          std::vector<Indicator> inds;
          for (const auto &n : required) {
            auto ind = parse_indicator(n);
            if (!ind)
              throw UnknownIndicatorError("unknown indicator '" + n + "'");
            inds.push_back(*ind);
          }
          return report_dict(validate(ds, inds));
        },
        py::arg("dataset"), py::arg("required") = std::vector<std::string>{});
}
