#include "reprules/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "reprules/errors.hpp"

namespace reprules {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw InputError("unterminated quote in CSV line");
  out.push_back(std::move(cur));
  return out;
}

std::string render(const Itemset& s, std::span<const std::string> labels) {
  std::string out;
  for (ItemId id : s) {
    if (!out.empty()) out += ' ';
    out += labels[id];
  }
  return out;
}

void write_row(std::ostream& out, const RelationalTable& t, std::size_t r,
               std::span<const std::string> labels) {
  const Rule& rule = t.rule(r);
  out << rule.id << ',' << csv_field(render(rule.premise, labels)) << ','
      << csv_field(render(rule.conclusion, labels));
  for (double v : t.row(r)) out << ',' << format_value(v);
  out << '\n';
}

void write_header(std::ostream& out, const RelationalTable& t) {
  out << "id,premise,conclusion";
  for (auto m : t.measures()) out << ',' << info(m).short_name;
  out << '\n';
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> item_labels(const TransactionDataset& ds) {
  std::vector<std::string> out;
  out.reserve(ds.item_count());
  for (const auto& it : ds.items()) out.push_back(it.label);
  return out;
}

void write_rules_csv(std::ostream& out, std::span<const Rule> rules,
                     std::span<const std::string> labels) {
  out << "id,premise,conclusion\n";
  for (const auto& r : rules)
    out << r.id << ',' << csv_field(render(r.premise, labels)) << ','
        << csv_field(render(r.conclusion, labels)) << '\n';
}

void write_table_csv(std::ostream& out, const RelationalTable& t,
                     std::span<const std::string> labels) {
  write_header(out, t);
  for (std::size_t r = 0; r < t.rows(); ++r) write_row(out, t, r, labels);
}

void write_table_csv(std::ostream& out, const RelationalTable& t,
                     std::span<const std::string> labels, std::span<const std::size_t> rows) {
  write_header(out, t);
  for (std::size_t r : rows) write_row(out, t, r, labels);
}

LoadedTable read_table_csv(std::istream& in) {
  if (!in) throw InputError("unreadable table stream");
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty table CSV");
  auto header = split_csv_line(line);
  if (header.size() < 4 || header[0] != "id" || header[1] != "premise" ||
      header[2] != "conclusion")
    throw InputError("table CSV header must start with id,premise,conclusion and name measures");
  std::vector<MeasureId> measures;
  for (std::size_t i = 3; i < header.size(); ++i) {
    auto m = parse_measure(header[i]);
    if (!m) throw InputError("unknown measure column '" + header[i] + "'");
    measures.push_back(*m);
  }

  std::vector<std::string> labels;
  std::unordered_map<std::string, ItemId> ids;
  auto intern = [&](const std::string& field) {
    std::istringstream tokens(field);
    std::vector<ItemId> out;
    for (std::string tok; tokens >> tok;) {
      auto [it, inserted] = ids.try_emplace(tok, static_cast<ItemId>(labels.size()));
      if (inserted) labels.push_back(tok);
      out.push_back(it->second);
    }
    return Itemset(std::move(out));
  };

  std::vector<Rule> rules;
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    auto where = " at line " + std::to_string(line_no);
    if (fields.size() != header.size()) throw InputError("wrong field count" + where);
    Rule r;
    auto res = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), r.id);
    if (res.ec != std::errc() || res.ptr != fields[0].data() + fields[0].size())
      throw InputError("bad rule id" + where);
    r.premise = intern(fields[1]);
    r.conclusion = intern(fields[2]);
    if (r.premise.empty() || r.conclusion.empty() || !r.premise.disjoint_with(r.conclusion))
      throw InputError("premise and conclusion must be non-empty and disjoint" + where);
    for (std::size_t i = 3; i < fields.size(); ++i) {
      double v = 0;
      const auto& f = fields[i];
      auto vr = std::from_chars(f.data(), f.data() + f.size(), v);
      if (vr.ec != std::errc() || vr.ptr != f.data() + f.size())
        throw InputError("bad measure value '" + f + "'" + where);
      values.push_back(v);
    }
    rules.push_back(std::move(r));
  }
  try {
    return LoadedTable{RelationalTable(std::move(rules), std::move(measures), std::move(values)),
                       std::move(labels)};
  } catch (const ParameterError& e) {
    throw InputError(e.what());
  }
}

void write_trace_jsonl(std::ostream& out, std::span<const TraceStep> trace) {
  for (const auto& s : trace) {
    nlohmann::ordered_json j;
    j["step"] = s.step;
    j["chosen_rule_id"] = s.chosen_rule_id;
    j["degsim"] = s.degsim;
    j["rr_size"] = s.rr_size;
    j["incomp_size"] = s.incomp_size;
    j["candidates_remaining"] = s.candidates_remaining;
    j["eliminated"] = s.eliminated;
    out << j.dump() << '\n';
  }
}

}  // namespace reprules
