#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "meinardus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = meinardus::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string model_file(const std::string& name) { return std::string(MEINARDUS_SOURCE_DIR) + "/models/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("cli enumerate") {
  auto r = run({"enumerate", "--model", "partitions", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto L = lines(r.out);
  REQUIRE(L.size() == 102);
  CHECK(L[0] == "n,c_n,log_c_n");
  CHECK(L[101].rfind("100,190569292,", 0) == 0);

  auto z = run({"enumerate", "--model", "partitions", "--n", "0"});
  CHECK(lines(z.out) == std::vector<std::string>{"n,c_n,log_c_n", "0,1,0"});

  auto bad = run({"enumerate", "--model", "no/such/model.json", "--n", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ParseError") != std::string::npos);
  CHECK(bad.out.empty());

  auto unknown = run({"enumerate", "--model", "nonsense", "--n", "5"});
  CHECK(unknown.code == 2);
  CHECK(run({"enumerate", "--model", model_file("bad_frequency.json"), "--n", "5"}).code == 2);

  auto j = run({"enumerate", "--model", "distinct", "--n", "10", "--format", "json", "--last"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["c_n"] == "10");
}

TEST_CASE("cli model files") {
  auto a = run({"enumerate", "--model", model_file("partitions.json"), "--n", "50"});
  auto b = run({"enumerate", "--model", "partitions", "--n", "50"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto e = run({"enumerate", "--model", model_file("ratio3_explicit.json"), "--n", "60"});
  auto k = run({"enumerate", "--model", "ratio-kernel(3)", "--n", "60"});
  CHECK(e.out == k.out);
  auto g = run({"enumerate", "--model", model_file("gcd2.json"), "--n", "9", "--last"});
  CHECK(lines(g.out).back() == "9,0,");
}

TEST_CASE("cli estimate") {
  auto r = run({"estimate", "--model", "partitions", "--n", "1000", "--variant", "semi-exact", "--compare",
                "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  const double ratio = doc["reports"][0]["ratio"].get<double>();
  CHECK(std::fabs(ratio - 1.0) < 0.05);
  const auto& c = doc["reports"][0]["components"];
  CHECK(c["n_delta"].get<double>() + c["log_gen_fn"].get<double>() + c["gaussian"].get<double>() ==
        doctest::Approx(doc["reports"][0]["log_cn_estimate"].get<double>()));

  auto p = run({"estimate", "--model", "example3", "--variant", "pure"});
  CHECK(p.code == 3);
  CHECK(p.err.find("MissingProfile") != std::string::npos);

  auto s = run({"estimate", "--model", "partitions", "--n", "10", "--variant", "pure"});
  CHECK(s.code == 0);
  CHECK(s.out.find("nan") == std::string::npos);
  CHECK(s.out.find("inf") == std::string::npos);

  CHECK(run({"estimate", "--variant", "exact"}).code == 2);
}

TEST_CASE("cli saddle") {
  auto r = run({"saddle", "--model", "partitions", "--n", "10000"});
  REQUIRE(r.code == 0);
  const auto L = lines(r.out);
  REQUIRE(L.size() == 2);
  CHECK(L[0] == "n,delta,residual,iterations,K,method,asymptotic_delta,delta_ratio,mean,variance,third");
  CHECK(run({"saddle", "--n", "1"}).code == 0);
  auto e = run({"saddle", "--model", "empty-weights", "--n", "5"});
  CHECK(e.code == 3);
  CHECK(e.err.find("NoPositiveMass") != std::string::npos);
  auto g = run({"saddle", "--grid", "10,100,1000"});
  CHECK(lines(g.out).size() == 4);
}

TEST_CASE("cli nllt") {
  auto r = run({"nllt", "--model", "partitions", "--grid", "250,500,1000,2000", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["condition_holds"] == true);
  CHECK(doc["ratio_series"].size() == 4);

  auto q = nlohmann::json::parse(run({"nllt", "--model", "q4-indicator", "--format", "json"}).out);
  CHECK(q["condition_holds"] == false);
  bool has4 = false;
  for (const auto& v : q["offending_q"]) has4 |= v.get<int>() == 4;
  CHECK(has4);

  auto e = run({"nllt", "--model", "example3", "--eps", "0.5", "--grid", "1000,10000,100000"});
  REQUIRE(e.code == 0);
  CHECK(lines(e.out)[1].find(",false,") != std::string::npos);

  CHECK(run({"nllt", "--model", "partitions", "--eps", "0.5"}).code == 2);
  CHECK(run({"nllt", "--grid", "500,100"}).code == 2);
}

TEST_CASE("cli charfn") {
  auto r = run({"charfn", "--model", "partitions", "--n", "500", "--alpha", "0.5,0.25"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 3);
  auto s = run({"charfn", "--model", "gcd2", "--n", "100", "--samples", "4", "--format", "json"});
  auto doc = nlohmann::json::parse(s.out);
  REQUIRE(doc["samples"].size() == 4);
  CHECK(doc["samples"][3]["log_abs"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(run({"charfn", "--n", "100", "--alpha", "0.7"}).code == 2);
}

TEST_CASE("cli usage, determinism and output files") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"enumerate", "--format", "xml", "--n", "3"}).code == 1);
  CHECK(run({"saddle", "--help"}).code == 0);

  const std::vector<std::string> args = {"estimate", "--model", "distinct", "--grid", "100,200", "--compare"};
  CHECK(run(args).out == run(args).out);

  const auto dir = std::filesystem::temp_directory_path() / "meinardus_cli_test";
  std::filesystem::create_directories(dir);
  const auto f1 = (dir / "a.csv").string(), f2 = (dir / "b.csv").string();
  CHECK(run({"saddle", "--grid", "100,1000", "--output", f1}).code == 0);
  CHECK(run({"saddle", "--grid", "100,1000", "--output", f2}).code == 0);
  std::ifstream a(f1), b(f2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(!sa.str().empty());
  CHECK(sa.str() == sb.str());
  CHECK(run({"saddle", "--n", "10", "--output", (dir / "missing" / "x.csv").string()}).code == 5);
  std::filesystem::remove_all(dir);

  CHECK(run({"enumerate", "--n", "10", "--bits", "16"}).code == 2);
}
