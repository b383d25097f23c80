#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>

#include "reprules/baseline.hpp"
#include "reprules/dominance.hpp"
#include "reprules/errors.hpp"
#include "reprules/miner.hpp"
#include "reprules/rar.hpp"
#include "reprules/synth.hpp"

namespace py = pybind11;
using namespace reprules;

namespace {

// A table together with the item labels its rules refer to.
struct Table {
  std::shared_ptr<const RelationalTable> t;
  std::vector<std::string> labels;

  const RelationalTable& operator*() const { return *t; }
};

Rational to_rational(const py::object& v) {
  if (py::isinstance<py::str>(v)) return Rational::parse(v.cast<std::string>());
  return Rational::from_double(v.cast<double>());
}

std::vector<MeasureId> to_measures(const std::vector<std::string>& names) {
  std::vector<MeasureId> out;
  for (const auto& n : names) {
    auto m = parse_measure(n);
    if (!m) throw ParameterError("unknown measure '" + n + "' (valid: " + valid_measure_names() + ")");
    out.push_back(*m);
  }
  return out;
}

std::vector<RuleId> ids(const Table& t, const std::vector<std::size_t>& rows) {
  return t.t->ids(rows);
}

std::vector<std::size_t> rows(const Table& t, const std::vector<RuleId>& ids) {
  std::vector<std::size_t> out;
  for (auto id : ids) out.push_back(t.t->row_of(id));
  return out;
}

std::vector<std::string> names(const Itemset& s, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (auto id : s) out.push_back(labels[id]);
  return out;
}

Table mine(const TransactionDataset& ds, const py::object& min_freq,
           const std::vector<std::string>& measures) {
  const auto frequent = mine_frequent(ds, to_rational(min_freq));
  auto rules = generate_rules(frequent);
  std::vector<std::string> labels;
  for (const auto& it : ds.items()) labels.push_back(it.label);
  if (rules.empty())
    return Table{std::make_shared<RelationalTable>(std::vector<Rule>{}, to_measures(measures),
                                                   std::vector<double>{}),
                 labels};
  auto cache = make_support_cache(ds, frequent);
  return Table{std::make_shared<RelationalTable>(
                   build_table(cache, std::move(rules), to_measures(measures))),
               labels};
}

Table table_from_values(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& rules,
    const std::vector<std::string>& measures, const std::vector<std::vector<double>>& values) {
  std::vector<std::string> labels;
  std::map<std::string, ItemId> index;
  auto intern = [&](const std::vector<std::string>& side) {
    std::vector<ItemId> out;
    for (const auto& l : side) {
      auto [it, fresh] = index.emplace(l, static_cast<ItemId>(labels.size()));
      if (fresh) labels.push_back(l);
      out.push_back(it->second);
    }
    return Itemset(std::move(out));
  };
  if (values.size() != rules.size()) throw ParameterError("one value row per rule expected");
  std::vector<Rule> rs;
  std::vector<double> flat;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    rs.push_back(Rule{static_cast<RuleId>(i + 1), intern(rules[i].first), intern(rules[i].second)});
    flat.insert(flat.end(), values[i].begin(), values[i].end());
  }
  return Table{std::make_shared<RelationalTable>(std::move(rs), to_measures(measures), flat),
               labels};
}

std::map<std::string, double> thresholds(const Table& t, const std::vector<RuleId>& rr) {
  const auto eps = thresholds_from_rr(*t, rows(t, rr));
  std::map<std::string, double> out;
  for (std::size_t c = 0; c < t.t->cols(); ++c)
    out[std::string(info(t.t->measures()[c]).short_name)] = eps.epsilon[c];
  return out;
}

std::vector<RuleId> tb(const Table& t, const std::map<std::string, double>& eps) {
  ThresholdVector v;
  for (auto m : t.t->measures()) {
    auto it = eps.find(std::string(info(m).short_name));
    if (it == eps.end()) it = eps.find(std::string(info(m).name));
    if (it == eps.end())
      throw ParameterError("no threshold for '" + std::string(info(m).short_name) + "'");
    v.epsilon.push_back(it->second);
  }
  return ids(t, tb_rules(*t, v));
}

}  // namespace

PYBIND11_MODULE(_reprules, m) {
  m.doc() = "Representative association rule selection";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_KeyError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_OSError);
  py::register_exception<EmptyDatasetError>(m, "EmptyDatasetError", PyExc_ValueError);

  py::class_<TransactionDataset>(m, "Dataset")
      .def_static("from_transactions", &TransactionDataset::from_tokens, py::arg("rows"))
      .def_static("load", [](const std::string& path) { return load_basket_file(path); })
      .def_property_readonly("transaction_count", &TransactionDataset::transaction_count)
      .def_property_readonly("item_count", &TransactionDataset::item_count)
      .def_property_readonly("items",
                             [](const TransactionDataset& ds) {
                               std::vector<std::string> out;
                               for (const auto& it : ds.items()) out.push_back(it.label);
                               return out;
                             })
      .def("support", [](const TransactionDataset& ds, const std::vector<std::string>& labels) {
        return ds.support(ds.itemset(labels));
      });

  py::class_<Table>(m, "Table")
      .def_property_readonly("rows", [](const Table& t) { return t.t->rows(); })
      .def_property_readonly("measures",
                             [](const Table& t) {
                               std::vector<std::string> out;
                               for (auto id : t.t->measures())
                                 out.emplace_back(info(id).short_name);
                               return out;
                             })
      .def_property_readonly("normalized", [](const Table& t) { return t.t->normalized(); })
      .def_property_readonly("rule_ids",
                             [](const Table& t) {
                               std::vector<RuleId> out;
                               for (const auto& r : t.t->rules()) out.push_back(r.id);
                               return out;
                             })
      .def("rule",
           [](const Table& t, RuleId id) {
             const auto& r = t.t->rule(t.t->row_of(id));
             return py::make_tuple(names(r.premise, t.labels), names(r.conclusion, t.labels));
           })
      .def("values",
           [](const Table& t, RuleId id) {
             const auto row = t.t->row(t.t->row_of(id));
             return std::vector<double>(row.begin(), row.end());
           })
      .def("__len__", [](const Table& t) { return t.t->rows(); });

  m.def("mine", &mine, py::arg("dataset"), py::arg("min_freq"),
        py::arg("measures") = std::vector<std::string>{"freq", "conf", "pearl"});
  m.def("table_from_values", &table_from_values, py::arg("rules"), py::arg("measures"),
        py::arg("values"));
  m.def("normalize", [](const Table& t) {
    return Table{std::make_shared<RelationalTable>(normalize(*t)), t.labels};
  });
  m.def("skyline", [](const Table& t) { return ids(t, skyline_naive(*t)); });
  m.def("representative_oracle", [](const Table& t) { return ids(t, representative_oracle(*t)); });
  m.def(
      "rar",
      [](const Table& t, bool faithful) {
        const auto mode = faithful ? RarMode::faithful_alg1 : RarMode::definitional;
        return ids(t, rar(*t, RarOptions{mode, false}).representatives);
      },
      py::arg("table"), py::arg("faithful") = false);
  m.def("thresholds_from_rr", &thresholds, py::arg("table"), py::arg("rr"));
  m.def("tb_rules", &tb, py::arg("table"), py::arg("thresholds"));
  m.def("gain", &gain, py::arg("tb_size"), py::arg("rr_size"));
  m.def("deg_sim", [](const std::vector<double>& a, const std::vector<double>& b) {
    return deg_sim(a, b);
  });
  m.def(
      "synthesize",
      [](std::size_t items, std::size_t transactions, double density, std::uint64_t seed) {
        SynthConfig c;
        c.items = items;
        c.transactions = transactions;
        c.density = density;
        c.seed = seed;
        return synthesize(c).rows;
      },
      py::arg("items") = 20, py::arg("transactions") = 500, py::arg("density") = 0.3,
      py::arg("seed") = 7);
}
