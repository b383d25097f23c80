#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "reprules/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "reprules");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = reprules::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("reprules_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, std::string_view content) const {
    const auto p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string name(const std::string& n) const { return (path / n).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("mine writes the measure table") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  auto r = run({"mine", "--input", basket, "--min-freq", "0.10"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 15);
  CHECK(r.out.rfind("id,premise,conclusion,freq,conf,pearl\n", 0) == 0);
  CHECK(r.err.find("items=4 transactions=10 avg_size=1.70 frequent_itemsets=9 rules=14") !=
        std::string::npos);

  const auto csv = tmp.name("rules.csv");
  r = run({"mine", "--input", basket, "--measures", "conf,zhang", "--out", csv});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(csv).rfind("id,premise,conclusion,conf,zhang\n", 0) == 0);
}

TEST_CASE("mine with nothing frequent still succeeds") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  const auto r = run({"mine", "--input", basket, "--min-freq", "1.0"});
  CHECK(r.code == 0);
  CHECK(r.out == "id,premise,conclusion,freq,conf,pearl\n");
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("usage and input errors map to exit codes") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  CHECK(run({"mine", "--input", tmp.name("missing.txt")}).code == 2);
  auto r = run({"mine", "--input", basket, "--measures", "freq,lift"});
  CHECK(r.code == 2);
  CHECK(r.err.find("zhang") != std::string::npos);
  CHECK(run({"mine", "--input", basket, "--min-freq", "0"}).code == 2);
  CHECK(run({"mine", "--input", basket, "--min-freq", "x"}).code == 2);
  CHECK(run({"select", "--input", basket, "--mode", "best"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"mine", "--input", tmp.file("empty.txt", "# nothing\n")}).code == 3);
  CHECK(run({"select", "--input", tmp.file("bad.csv", "id,premise,conclusion,freq\n1,a\n")})
            .code == 3);
  CHECK(run({"mine", "--help"}).code == 0);
}

TEST_CASE("select all on the running example") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  const auto r = run({"select", "--input", basket, "--min-freq", "0.10", "--mode", "all"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["all_rules"] == 14);
  CHECK(j["sky_rules"] == 2);
  CHECK(j["rr_rules"] == 11);
  CHECK(j["oracle_rules"] == 11);
  CHECK(j["tb_rules"] == 12);
  CHECK(j["rar_matches_oracle"] == true);
  CHECK(j["measures"] == json::array({"freq", "conf", "pearl"}));
  CHECK(j["dataset"]["items"] == 4);
  CHECK(j["gain"].get<double>() == doctest::Approx(12.0 / 11));
  CHECK(j["thresholds"]["conf"].get<double>() == doctest::Approx(1.0 / 6));
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK(j["comparisons"]["rar"].get<int>() > 0);
  CHECK(r.err.find("timings_ms:") != std::string::npos);

  // ids are assigned in mining order, so check the rules by their text
  const auto ex = fixtures::mined_example();
  std::set<int> sky;
  for (auto id : j["selected"]["sky"])
    sky.insert(*fixtures::rule_numbers(ex, {ex.table.row_of(id.get<reprules::RuleId>())}).begin());
  CHECK(sky == std::set<int>{2, 5});
}

TEST_CASE("select accepts a mined CSV and honours --out, --trace and --timings") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  const auto csv = tmp.name("table.csv");
  REQUIRE(run({"mine", "--input", basket, "--out", csv}).code == 0);

  const auto report = tmp.name("report.json"), trace = tmp.name("trace.jsonl"),
             out = tmp.name("rr.csv");
  const auto r = run({"select", "--input", csv, "--mode", "rar", "--report", report, "--trace",
                      trace, "--out", out, "--timings"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(slurp(report));
  CHECK(j["rr_rules"] == 11);
  CHECK(j["dataset"].is_null());
  CHECK(j["sky_rules"].is_null());
  CHECK(j.contains("timings_ms"));
  CHECK(lines(slurp(trace)) == 11);
  CHECK(json::parse(slurp(trace).substr(0, slurp(trace).find('\n')))["step"] == 1);
  CHECK(lines(slurp(out)) == 12);

  const auto faithful = run({"select", "--input", csv, "--mode", "rar", "--faithful-alg1"});
  REQUIRE(faithful.code == 0);
  CHECK(json::parse(faithful.out)["rr_rules"] == 9);
  CHECK(json::parse(faithful.out)["rar_variant"] == "faithful_alg1");
}

TEST_CASE("threshold mode with explicit thresholds") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  const auto th = tmp.file("th.json", R"({"freq": 0.2, "confidence": 0.4, "pearl": 0.05})");
  auto r = run({"select", "--input", basket, "--mode", "tb", "--thresholds", th});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["tb_rules"] == 3);  // b->c, c->b, c->d
  CHECK(j["rr_rules"].is_null());

  r = run({"select", "--input", basket, "--mode", "tb", "--thresholds",
           tmp.file("partial.json", R"({"freq": 0.2})")});
  CHECK(r.code == 2);
  r = run({"select", "--input", basket, "--mode", "tb", "--thresholds",
           tmp.file("broken.json", "{")});
  CHECK(r.code == 3);
}

TEST_CASE("reports are byte-identical across runs") {
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  const auto a = run({"select", "--input", basket, "--measures", "freq,conf,recall,loev,zhang"});
  const auto b = run({"select", "--input", basket, "--measures", "freq,conf,recall,loev,zhang"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("synth is deterministic per seed") {
  const auto a = run({"synth", "--seed", "3", "--items", "10", "--transactions", "50"});
  const auto b = run({"synth", "--seed", "3", "--items", "10", "--transactions", "50"});
  const auto c = run({"synth", "--seed", "4", "--items", "10", "--transactions", "50"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(lines(a.out) <= 50);

  const auto empty = run({"synth", "--seed", "1", "--density", "0", "--transactions", "5"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(empty.err.find("warning") != std::string::npos);
  CHECK(run({"synth", "--seed", "1", "--density", "2"}).code == 2);
  CHECK(run({"synth"}).code == 2);
}

TEST_CASE("the installed executable reports exit codes") {
  const char* exe = std::getenv("REPRULES_CLI");
  if (!exe) return;
  TempDir tmp;
  const auto basket = tmp.file("basket.txt", fixtures::kRunningBasket);
  auto status = [&](const std::string& args) {
    const int raw = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("mine --input " + basket) == 0);
  CHECK(status("mine --input " + tmp.name("nope.txt")) == 2);
  CHECK(status("select --input " + tmp.file("e.txt", "\n")) == 3);
}
