#include "reprules/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reprules/baseline.hpp"
#include "reprules/dataset.hpp"
#include "reprules/dominance.hpp"
#include "reprules/errors.hpp"
#include "reprules/io.hpp"
#include "reprules/miner.hpp"
#include "reprules/synth.hpp"
#include "reprules/table.hpp"

namespace reprules::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<MeasureId> kDefaultMeasures{MeasureId::frequency, MeasureId::confidence,
                                              MeasureId::pearl};

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::rar: return "rar";
    case Mode::skyline: return "skyline";
    case Mode::oracle: return "oracle";
    case Mode::tb: return "tb";
    case Mode::all: return "all";
  }
  return "?";
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Input {
  std::optional<RelationalTable> table;  // empty when no rules were produced
  std::vector<std::string> labels;
  std::vector<MeasureId> measures;
  std::optional<DatasetStats> stats;
  std::size_t frequent_itemsets = 0;
  bool from_table_csv = false;
};

bool is_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    return line.rfind("id,premise,conclusion", 0) == 0;
  }
  return false;
}

RelationalTable project(const RelationalTable& t, const std::vector<MeasureId>& measures) {
  std::vector<std::size_t> cols;
  for (auto m : measures) {
    auto it = std::find(t.measures().begin(), t.measures().end(), m);
    if (it == t.measures().end())
      throw ParameterError("measure '" + std::string(info(m).short_name) +
                           "' is not a column of the input table");
    cols.push_back(static_cast<std::size_t>(it - t.measures().begin()));
  }
  std::vector<double> values;
  values.reserve(t.rows() * cols.size());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (auto c : cols) values.push_back(t.value(r, c));
  return RelationalTable(t.rules(), measures, std::move(values));
}

Input load_input(const RunConfig& config) {
  if (config.input.empty()) throw ParameterError("--input is required");
  const std::filesystem::path path(config.input);
  if (!std::filesystem::is_regular_file(path))
    throw ParameterError("input file not found: " + config.input);

  Input in;
  if (is_table_csv(path)) {
    std::ifstream f(path);
    auto loaded = read_table_csv(f);
    in.from_table_csv = true;
    in.labels = std::move(loaded.labels);
    in.measures = config.measures.empty() ? loaded.table.measures() : config.measures;
    if (loaded.table.rows() > 0)
      in.table = config.measures.empty() ? std::move(loaded.table)
                                         : project(loaded.table, config.measures);
    return in;
  }

  const auto min_freq = Rational::parse(config.min_freq);
  const auto ds = load_basket_file(path);
  in.stats = dataset_stats(ds);
  in.labels = item_labels(ds);
  in.measures = config.measures.empty() ? kDefaultMeasures : config.measures;
  const auto frequent = mine_frequent(ds, min_freq);
  in.frequent_itemsets = frequent.size();
  auto rules = generate_rules(frequent);
  if (!rules.empty()) {
    auto cache = make_support_cache(ds, frequent);
    in.table = build_table(cache, std::move(rules), in.measures);
  }
  return in;
}

void report_clamps(const RelationalTable& t, std::ostream& err) {
  if (t.clamps().empty()) return;
  err << "warning: " << t.clamps().size()
      << " undefined measure value(s) replaced by neutral values";
  const auto& c = t.clamps().front();
  err << " (first: rule " << t.rule(c.row).id << ", " << name(c.measure) << ")\n";
}

std::string avg_2dp(const Rational& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << r.to_double();
  return s.str();
}

template <class Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  fn(f);
  f.flush();
  if (!f) throw InputError("write failed for '" + path + "'");
}

json measure_names(const std::vector<MeasureId>& ms) {
  json arr = json::array();
  for (auto m : ms) arr.push_back(std::string(info(m).short_name));
  return arr;
}

json id_list(const RelationalTable& t, std::span<const std::size_t> rows) {
  json arr = json::array();
  for (auto r : rows) arr.push_back(t.rule(r).id);
  return arr;
}

ThresholdVector read_thresholds(const std::string& path, const RelationalTable& t) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open thresholds file '" + path + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw InputError("thresholds file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw InputError("thresholds file must hold a JSON object");
  ThresholdVector eps;
  for (auto m : t.measures()) {
    const json* v = nullptr;
    for (auto key : {info(m).short_name, info(m).name})
      if (auto it = j.find(std::string(key)); it != j.end()) v = &*it;
    if (!v || !v->is_number())
      throw ParameterError("thresholds file lacks a numeric value for '" +
                           std::string(info(m).short_name) + "'");
    eps.epsilon.push_back(v->get<double>());
  }
  return eps;
}

bool includes_sorted(std::vector<std::size_t> big, std::vector<std::size_t> small) {
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

int cmd_mine(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto in = load_input(config);
  with_output(config.out, out, [&](std::ostream& o) {
    if (in.table) {
      write_table_csv(o, *in.table, in.labels);
    } else {
      o << "id,premise,conclusion";
      for (auto m : in.measures) o << ',' << info(m).short_name;
      o << '\n';
    }
  });
  if (in.stats)
    err << "items=" << in.stats->item_count << " transactions=" << in.stats->transaction_count
        << " avg_size=" << avg_2dp(in.stats->avg_transaction_size())
        << " frequent_itemsets=" << in.frequent_itemsets;
  else
    err << "table=" << config.input;
  err << " rules=" << (in.table ? in.table->rows() : 0) << '\n';
  if (!in.table) err << "warning: no rules at min_freq " << config.min_freq << '\n';
  if (in.table) report_clamps(*in.table, err);
  return kOk;
}

int cmd_select(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto in = load_input(config);
  const bool want_sky = config.mode == Mode::skyline || config.mode == Mode::oracle ||
                        config.mode == Mode::all;
  const bool want_oracle = config.mode == Mode::oracle || config.mode == Mode::all;
  const bool want_rar = config.mode == Mode::rar || config.mode == Mode::all ||
                        (config.mode == Mode::tb && config.thresholds.empty());
  const bool want_tb = config.mode == Mode::tb || config.mode == Mode::all;

  json report;
  report["mode"] = mode_name(config.mode);
  report["measures"] = measure_names(in.measures);
  report["rar_variant"] = config.faithful_alg1 ? "faithful_alg1" : "definitional";
  if (in.stats) {
    report["dataset"] = {{"items", in.stats->item_count},
                         {"transactions", in.stats->transaction_count},
                         {"avg_transaction_size", avg_2dp(in.stats->avg_transaction_size())}};
    report["min_freq"] = config.min_freq;
  } else {
    report["dataset"] = nullptr;
    report["min_freq"] = nullptr;
  }

  const std::size_t n = in.table ? in.table->rows() : 0;
  report["all_rules"] = n;
  report["sky_rules"] = nullptr;
  report["rr_rules"] = nullptr;
  report["oracle_rules"] = nullptr;
  report["tb_rules"] = nullptr;
  report["gain"] = nullptr;
  report["thresholds"] = nullptr;
  report["rar_matches_oracle"] = nullptr;
  report["comparisons"] = json::object();
  report["clamped_values"] = in.table ? in.table->clamps().size() : 0;
  report["selected"] = json::object();
  json timings = json::object();

  std::vector<std::size_t> selected;
  if (in.table) {
    const auto& t = *in.table;
    report_clamps(t, err);
    std::vector<std::size_t> sky, oracle_rr, rr, tb;

    if (want_sky) {
      Counters c;
      auto start = Clock::now();
      sky = skyline_naive(t, &c);
      timings["skyline"] = ms_since(start);
      report["sky_rules"] = sky.size();
      report["comparisons"]["skyline"] = c.dominance_tests;
      report["selected"]["sky"] = id_list(t, sky);
      selected = sky;
    }
    if (want_oracle) {
      Counters c;
      auto start = Clock::now();
      oracle_rr = representative_oracle(t, &c);
      timings["oracle"] = ms_since(start);
      report["oracle_rules"] = oracle_rr.size();
      report["comparisons"]["oracle"] = c.dominance_tests;
      report["selected"]["oracle"] = id_list(t, oracle_rr);
      report["rr_rules"] = oracle_rr.size();
      selected = oracle_rr;
    }
    if (want_rar) {
      auto start = Clock::now();
      const auto normalized = normalize(t);
      auto result =
          rar(normalized, RarOptions{config.faithful_alg1 ? RarMode::faithful_alg1
                                                          : RarMode::definitional,
                                     !config.trace.empty()});
      timings["rar"] = ms_since(start);
      rr = result.representatives;
      report["rr_rules"] = rr.size();
      report["comparisons"]["rar"] = result.counters.dominance_tests;
      report["selected"]["rr"] = id_list(t, rr);
      if (!config.trace.empty())
        with_output(config.trace, out,
                    [&](std::ostream& o) { write_trace_jsonl(o, result.trace); });
      std::sort(rr.begin(), rr.end());
      if (!oracle_rr.empty()) report["rar_matches_oracle"] = rr == oracle_rr;
      if (config.mode != Mode::tb) selected = rr;
    }
    if (want_tb) {
      auto start = Clock::now();
      const auto eps = config.thresholds.empty() ? thresholds_from_rr(t, rr)
                                                 : read_thresholds(config.thresholds, t);
      tb = tb_rules(t, eps);
      timings["tb"] = ms_since(start);
      json th = json::object();
      for (std::size_t c = 0; c < t.cols(); ++c)
        th[std::string(info(t.measures()[c]).short_name)] = eps.epsilon[c];
      report["thresholds"] = th;
      report["tb_rules"] = tb.size();
      report["selected"]["tb"] = id_list(t, tb);
      if (!rr.empty()) report["gain"] = gain(tb.size(), rr.size());
      if (config.mode == Mode::tb) selected = tb;
    }

    if (config.mode == Mode::all) {
      if (!includes_sorted(rr, sky)) throw InvariantViolation("skyline is not contained in RR");
      if (!includes_sorted(tb, rr)) throw InvariantViolation("RR is not contained in TB-rules");
      if (!config.faithful_alg1 && rr != oracle_rr)
        throw InvariantViolation("RAR output differs from the definitional oracle");
    }

    if (!config.out.empty())
      with_output(config.out, out, [&](std::ostream& o) {
        std::sort(selected.begin(), selected.end());
        write_table_csv(o, t, in.labels, selected);
      });
  }

  if (config.timings) report["timings_ms"] = timings;
  err << "timings_ms:";
  for (auto& [k, v] : timings.items()) err << ' ' << k << '=' << v.get<double>();
  err << '\n';

  with_output(config.report, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
  return kOk;
}

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
  SynthConfig c;
  c.items = args.items;
  c.transactions = args.transactions;
  c.density = args.density;
  c.seed = args.seed;
  const auto basket = synthesize(c);
  with_output(args.out, out, [&](std::ostream& o) { write_basket(o, basket); });
  if (basket.suppressed_empty > 0)
    err << "warning: suppressed " << basket.suppressed_empty << " empty transaction(s)\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representative association rule selection"};
  app.require_subcommand(1);

  RunConfig config;
  std::string measures, mode = "all";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Basket file or rules CSV")->required();
    sub->add_option("--min-freq", config.min_freq, "Minimum frequency in (0, 1]");
    sub->add_option("--measures", measures,
                    "Comma-separated measures: freq,conf,recall,pearl,loev,zhang");
    sub->add_option("--out", config.out, "CSV output path");
  };

  auto* mine = app.add_subcommand("mine", "Mine rules and write the measure table as CSV");
  add_common(mine);

  auto* select = app.add_subcommand("select", "Select representative rules");
  add_common(select);
  select->add_option("--mode", mode, "rar, skyline, oracle, tb or all");
  select->add_option("--report", config.report, "JSON report path (default stdout)");
  select->add_option("--trace", config.trace, "RAR trace as JSON lines");
  select->add_option("--thresholds", config.thresholds, "JSON thresholds for mode tb");
  select->add_flag("--faithful-alg1", config.faithful_alg1,
                   "Use the literal pseudocode reading instead of the definitional variant");
  select->add_flag("--timings", config.timings, "Include wall-clock timings in the report");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Write a deterministic synthetic basket file");
  synth->add_option("--seed", synth_args.seed)->required();
  synth->add_option("--items", synth_args.items);
  synth->add_option("--transactions", synth_args.transactions);
  synth->add_option("--density", synth_args.density);
  synth->add_option("--out", synth_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!measures.empty()) config.measures = parse_measure_list(measures);
    if (mode == "rar") config.mode = Mode::rar;
    else if (mode == "skyline") config.mode = Mode::skyline;
    else if (mode == "oracle") config.mode = Mode::oracle;
    else if (mode == "tb") config.mode = Mode::tb;
    else if (mode == "all") config.mode = Mode::all;
    else throw ParameterError("unknown mode '" + mode + "' (valid: rar, skyline, oracle, tb, all)");

    if (*mine) return cmd_mine(config, out, err);
    if (*select) return cmd_select(config, out, err);
    return cmd_synth(synth_args, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const EmptyDatasetError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violated: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace reprules::cli
