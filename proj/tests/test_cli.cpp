#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qaffine/cli.hpp"

using namespace qaffine;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  Result r = call({"tau", "--k", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "252\n");
  r = call({"eps", "--n", "24", "--k", "2", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"var\":\"u\",\"coeffs\":[\"0\",\"-24\",\"276\"]}\n");
}

TEST_CASE("evaluation points") {
  Result r = call({"pqn", "--n", "24", "--k", "2", "--eval", "u=0", "--eval", "u=1/2", "--format",
                   "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"u=0\":\"324\",\"u=1/2\":\"93\"}\n");
  r = call({"eps", "--n", "1", "--k", "5", "--eval", "u=x"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("lattice output") {
  Result r = call({"kostant", "inf", "--delta-cap", "1", "--height-cap", "1", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("(1,1)").at("coeffs") == nlohmann::json({"2", "-3", "1"}));
  r = call({"hpoly", "--delta-cap", "1", "--height-cap", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("1\t0\t0\t-1\n") != std::string::npos);
  r = call({"character", "--lambda", "1,0", "--delta-cap", "3", "--height-cap", "3", "--eval",
            "u=0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("3\t3\t3\n") != std::string::npos);
}

TEST_CASE("usage errors and exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"eps"}).code == kExitUsage);
  CHECK(call({"verify", "nope"}).code == kExitUsage);
  CHECK(call({"hpoly", "--type", "B2~1"}).code == kExitUsage);
  CHECK(call({"hpoly", "--lambda", "1"}).code == kExitUsage);
  CHECK(call({"hpoly", "--lambda", "-1,0"}).code == kExitUsage);
  CHECK(call({"hpoly", "--word", "5,5"}).code == kExitUsage);
  CHECK(call({"tau", "--format", "xml"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);
  CHECK(call({"specialize", "--type", "A4~1"}).code == kExitUsage);
}

TEST_CASE("verification failure has its own exit code") {
  const Result r = call({"verify", "gk-full", "--word", "1|0", "--delta-cap", "2", "--height-cap",
                         "4", "--format", "json"});
  CHECK(r.code == kExitVerifyFailed);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("report").at("passed") == false);
}

TEST_CASE("reports are deterministic and independent of --jobs") {
  const std::vector<std::string> base = {"verify", "all", "--delta-cap", "3", "--height-cap", "6",
                                         "--format", "json"};
  const Result a = call(base);
  const Result b = call(base);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto par = base;
  par.insert(par.end(), {"--jobs", "4"});
  const Result c = call(par);
  CHECK(c.code == kExitOk);
  CHECK(nlohmann::json::parse(a.out).at("report") == nlohmann::json::parse(c.out).at("report"));
  const auto cfg = nlohmann::json::parse(a.out).at("config");
  CHECK(cfg.at("delta_cap") == 3);
  CHECK(cfg.at("word") == "1,0|0,1");
}

TEST_CASE("config file, environment variable and flag precedence") {
  const std::string path = "qaffine_test_config.ini";
  {
    std::ofstream f(path);
    f << "delta-cap=2\nheight-cap=4\nformat=json\n";
  }
  Result r = call({"verify", "cs-rho", "--config", path});
  REQUIRE(r.code == kExitOk);
  auto cfg = nlohmann::json::parse(r.out).at("config");
  CHECK(cfg.at("delta_cap") == 2);
  CHECK(cfg.at("height_cap") == 4);
  r = call({"verify", "cs-rho", "--config", path, "--delta-cap", "3"});
  cfg = nlohmann::json::parse(r.out).at("config");
  CHECK(cfg.at("delta_cap") == 3);
  setenv("QAFFINE_CONFIG", path.c_str(), 1);
  r = call({"verify", "cs-rho"});
  unsetenv("QAFFINE_CONFIG");
  cfg = nlohmann::json::parse(r.out).at("config");
  CHECK(cfg.at("height_cap") == 4);
  std::remove(path.c_str());
}
