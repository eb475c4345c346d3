#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hencky/analytic.hpp"

using hencky::cli::run;
using doctest::Approx;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      else if (c == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else cell += c;
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double number(const std::string& s) {
  double v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(r.ec == std::errc());
  return v;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("rod sweep") {
  const Outcome o = invoke({"rod", "--G", "1", "--m", "4", "--lambda", "0:0.5:11", "--format", "csv"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 12);
  const auto& h = rows[0];
  const auto& last = rows.back();
  CHECK(number(last[column(h, "lambda_swainger_axial")]) == 0.5);
  CHECK(number(last[column(h, "Sz_over_E")]) == Approx(0.693147180560).epsilon(1e-11));
  CHECK(number(last[column(h, "secant_ratio")]) == Approx(1.38629436112).epsilon(1e-11));
  CHECK(o.out.find('\r') == std::string::npos);
}

TEST_CASE("CSV rows re-evaluate to the emitted precision") {
  const Outcome o = invoke({"rod", "--m", "3", "--lambda", "-2:0.9:7"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  const auto mod = hencky::ElasticModuli::from_contraction_number(1.0, 3.0);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double lambda = number(rows[r][0]);
    const hencky::RodSolution s = hencky::rod(lambda, mod);
    CHECK(number(rows[r][4]) == Approx(s.axial_stress).epsilon(1e-11));
    CHECK(number(rows[r][7]) == Approx(s.energy).epsilon(1e-11));
  }
}

TEST_CASE("balloon sweep marks the peak") {
  const Outcome o = invoke({"balloon", "--G", "1", "--m", "4", "--h", "0.01", "--R", "1", "--ratio", "1:3:201"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 202);
  const std::size_t peak = column(rows[0], "peak");
  int marked = 0;
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r][peak] == "1") {
      ++marked;
      CHECK(std::abs(number(rows[r][0]) - 1.822119) < 0.01);
    }
  CHECK(marked == 1);
  CHECK(o.err.empty());

  const Outcome thick = invoke({"balloon", "--h", "0.2", "--ratio", "1:2:3"});
  CHECK(thick.code == 0);
  CHECK(thick.err.find("thin-wall") != std::string::npos);
}

TEST_CASE("stress at rest is zero") {
  const Outcome o = invoke({"stress", "--model", "cauchy1928", "--stretches", "1,1,1"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t r = 1; r < 4; ++r)
    for (const char* name : {"S_cauchy", "T_kirchhoff", "energy_per_ref_volume"})
      CHECK(number(rows[r][column(rows[0], name)]) == 0.0);
}

TEST_CASE("stress models and inputs") {
  for (const char* model : {"hooke", "cauchy1928", "kirchhoff1929"})
    CHECK(invoke({"stress", "--model", model, "--stretches", "1.1,0.9,1"}).code == 0);
  CHECK(invoke({"stress", "--gradient", "1,0.2,0,0,1,0,0,0,1"}).code == 0);
  CHECK(invoke({"stress", "--model", "neo", "--stretches", "1,1,1"}).code == 2);
  CHECK(invoke({"stress"}).code == 2);
  CHECK(invoke({"stress", "--stretches", "1,1"}).code == 2);
  const Outcome bad = invoke({"stress", "--stretches", "1,-1,1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("stretches") != std::string::npos);
  CHECK(invoke({"stress", "--incompressible", "--stretches", "2,0.5,1", "--mean-stress", "0.3"}).code == 0);
  CHECK(invoke({"stress", "--incompressible", "--stretches", "2,1,1"}).code == 1);
}

TEST_CASE("moduli") {
  const Outcome o = invoke({"moduli", "--G", "1", "--m", "4", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc.contains("config"));
  CHECK(doc.contains("rows"));
  CHECK(doc.contains("checks"));
  CHECK(doc["rows"][0]["E"].get<double>() == 2.5);
  CHECK(doc["rows"][0]["Lambda"].get<double>() == 1.0);
  CHECK(doc["rows"][0]["K"].get<double>() == Approx(5.0 / 3.0).epsilon(1e-11));

  const Outcome inc = invoke({"moduli", "--incompressible", "--format", "json"});
  REQUIRE(inc.code == 0);
  CHECK(nlohmann::json::parse(inc.out)["rows"][0]["K"].is_null());

  CHECK(invoke({"moduli", "--nu", "0"}).code == 0);
  CHECK(invoke({"moduli", "--m", "inf"}).code == 0);
  CHECK(invoke({"moduli", "--m", "4", "--nu", "0.2"}).code == 2);
  const Outcome low = invoke({"moduli", "--m", "1.5"});
  CHECK(low.code == 1);
  CHECK(low.err.find("m:") != std::string::npos);
}

TEST_CASE("precision controls significant digits") {
  const Outcome o = invoke({"moduli", "--m", "4", "--precision", "4"});
  REQUIRE(o.code == 0);
  CHECK(parse_csv(o.out)[1][5] == "1.667");
  CHECK(invoke({"moduli", "--precision", "0"}).code == 2);
}

TEST_CASE("usage and domain errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"rod", "--bogus"}).code == 2);
  CHECK(invoke({"rod", "--lambda", "0:1:1"}).code == 2);
  CHECK(invoke({"rod", "--lambda", "0:abc:3"}).code == 2);
  const Outcome d = invoke({"rod", "--lambda", "0:1:3"});
  CHECK(d.code == 1);
  CHECK(d.err.find("lambda") != std::string::npos);
  CHECK(d.out.empty());
  CHECK(invoke({"membrane", "--x", "0.5:1.5:3"}).code == 1);
  CHECK(invoke({"rod", "--help"}).code == 0);
}

TEST_CASE("membrane sweep") {
  const Outcome o = invoke({"membrane", "--x", "0.25"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(number(rows[1][column(rows[0], "Sr")]) == Approx(0.958940241506).epsilon(1e-11));
}

TEST_CASE("work from a path file") {
  const std::string dir = HENCKY_TEST_TMPDIR;
  const std::string a = dir + "/path_a.json", b = dir + "/path_b.json";
  std::ofstream(a) << R"([{"t":0,"S1":0,"S2":0,"S3":0},{"t":0.5,"S1":1,"S2":1,"S3":1},{"t":1,"S1":2,"S2":0,"S3":1}])";
  std::ofstream(b) << R"([{"t":0,"S1":0,"S2":0,"S3":0},{"t":0.5,"S1":1,"S2":-1,"S3":0},{"t":1,"S1":2,"S2":0,"S3":1}])";

  const Outcome o = invoke({"work", "--path", a, "--compare", b, "--format", "json", "--precision", "15"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["config"]["A_a"].get<double>() == Approx(1.3629801999349151709).epsilon(1e-10));
  CHECK(doc["config"]["gap"].get<double>() == Approx(0.41105940019525448744).epsilon(1e-9));
  CHECK(doc["rows"].size() == 3);

  const Outcome k = invoke({"work", "--path", a, "--compare", b, "--measure", "kirchhoff", "--format", "json"});
  REQUIRE(k.code == 0);
  CHECK(std::abs(nlohmann::json::parse(k.out)["config"]["gap"].get<double>()) < 1e-9);

  CHECK(invoke({"work", "--path", dir + "/missing.json"}).code == 1);
  CHECK(invoke({"work"}).code == 2);
}

TEST_CASE("superpose") {
  const Outcome o = invoke({"superpose", "--state", "0.5,0,0", "--increment", "0.5,0,0"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  const auto& h = rows[0];
  CHECK(number(rows[1][column(h, "e_swainger_composed")]) == 0.75);
  for (std::size_t r = 1; r < 4; ++r) {
    const double diff = number(rows[r][column(h, "S_composed")]) - number(rows[r][column(h, "S_state")]);
    CHECK(diff == Approx(number(rows[r][column(h, "dS_increment")])).epsilon(1e-10));
  }
  CHECK(invoke({"superpose", "--increment", "1,0,0"}).code == 1);
}

TEST_CASE("rate") {
  const Outcome o = invoke({"rate", "--velocity-gradient", "1,0,0,0,0,0,0,0,0", "--duration", "1", "--step", "0.01"});
  REQUIRE(o.code == 0);
  const auto rows = parse_csv(o.out);
  REQUIRE(rows.size() == 102);
  const auto& last = rows.back();
  CHECK(number(last[column(rows[0], "e_almansi_xx")]) == Approx(-0.5 * std::expm1(-2.0)).epsilon(1e-9));
  // stretch e along x: S_xx = 2G(1 + (k - 1/3)) with k = 5/6 at m = 4
  CHECK(number(last[column(rows[0], "S_cauchy_xx")]) == Approx(3.0).epsilon(1e-8));
  CHECK(number(last[column(rows[0], "sigma_reduced_mean_linear")]) == Approx(2.0 / 3.0).epsilon(1e-11));

  const Outcome printed = invoke({"rate", "--velocity-gradient", "1,0,0,0,1,0,0,0,1", "--step", "0.5", "--as-printed"});
  REQUIRE(printed.code == 0);
  CHECK(number(parse_csv(printed.out).back()[column(parse_csv(printed.out)[0], "sigma_reduced_dev_linear_xx")]) ==
        Approx(4.0));
  CHECK(invoke({"rate", "--velocity-gradient", "1,0,0,0,0,0,0,0,0", "--scheme", "midpoint"}).code == 2);
  CHECK(invoke({"rate", "--velocity-gradient", "1,0,0,0,0,0,0,0,0", "--step", "-1"}).code == 1);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  const Outcome a = invoke({"verify", "--seed", "42", "--format", "json"});
  const Outcome b = invoke({"verify", "--seed", "42", "--format", "json"});
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["config"]["seed"].get<std::uint64_t>() == 42);
  bool all = true;
  for (const auto& c : doc["checks"]) all = all && c["passed"].get<bool>();
  CHECK(a.code == (all ? 0 : 3));
  CHECK(doc["checks"].size() >= 20);

  CHECK(invoke({"verify", "--seed", "nope"}).code == 2);

  setenv("HENCKY_SEED", "0x10", 1);
  const Outcome env = invoke({"verify", "--format", "json"});
  unsetenv("HENCKY_SEED");
  CHECK(nlohmann::json::parse(env.out)["config"]["seed"].get<std::uint64_t>() == 16);
}

TEST_CASE("output file") {
  const std::string file = std::string(HENCKY_TEST_TMPDIR) + "/moduli.csv";
  const Outcome o = invoke({"moduli", "--output", file});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("G,m,nu,E", 0) == 0);
  CHECK(invoke({"moduli", "--output", "/nonexistent/dir/x.csv"}).code == 2);
}
