#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "balseg/cli.hpp"

using namespace balseg;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "s", "5", "2"}).out == "6\n");
  CHECK(run({"count", "p", "5", "2"}).out == "2\n");
  CHECK(run({"count", "s", "7", "3"}).out == "8\n");
  // Extended arguments work straight from the command line.
  CHECK(run({"count", "s", "-1", "3"}).out == "0\n");
  CHECK(run({"count", "s", "5", "-3"}).out == "6\n");
  CHECK(run({"count", "p", "0", "0"}).out == "1\n");

  const auto r = run({"count", "s", "5", "2", "--format", "json"});
  CHECK(r.code == exit_ok);
  const auto doc = json::parse(r.out);
  CHECK(doc["command"] == "count");
  CHECK(doc["parameters"]["family"] == "s");
  CHECK(doc["parameters"]["length"] == "5");
  CHECK(doc["result"]["count"] == "6");
  CHECK(doc["status"] == "ok");
}

TEST_CASE("count usage errors") {
  CHECK(run({"count", "q", "5", "2"}).code == exit_usage);
  CHECK(run({"count", "s", "five", "2"}).code == exit_usage);
  CHECK(run({"count", "s", "5"}).code == exit_usage);
  CHECK(run({"count", "s", "5", "2", "--format", "yaml"}).code == exit_usage);
  CHECK(run({"nonsense"}).code == exit_usage);
  CHECK(run({}).code == exit_usage);
  CHECK(!run({"count", "q", "5", "2"}).err.empty());
}

TEST_CASE("table") {
  const auto csv = run({"table", "s", "--max-L", "3", "--format", "csv"});
  CHECK(csv.code == exit_ok);
  CHECK(csv.out ==
        "L,0,1,2,3,total\n"
        "0,1,,,,1\n"
        "1,1,1,,,2\n"
        "2,1,2,1,,4\n"
        "3,1,3,3,1,8\n");

  const auto pretty = run({"table", "p", "--max-L", "2"});
  CHECK(pretty.code == exit_ok);
  CHECK(pretty.out.find("L\\h") != std::string::npos);
  CHECK(pretty.out.find("total") != std::string::npos);

  const auto r = run({"table", "p", "--max-L", "4", "--format", "json"});
  const auto doc = json::parse(r.out);
  CHECK(doc["result"]["rows"][4] ==
        json({"1", "0", "2", "0", "1"}));
  CHECK(doc["result"]["totals"] == json({"1", "2", "2", "4", "4"}));

  CHECK(run({"table", "s"}).code == exit_usage);
  CHECK(run({"table", "s", "--max-L", "-2"}).code == exit_usage);
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "5", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "00101\n01001\n01010\n10001\n10010\n10100\n");

  const auto pal = run({"enumerate", "5", "2", "--palindromes"});
  CHECK(pal.out == "01010\n10001\n");

  const auto empty = run({"enumerate", "0", "0"});
  CHECK(empty.code == exit_ok);
  CHECK(empty.out == "\n");

  const auto rendered = run({"enumerate", "2", "1", "--render", "naive"});
  CHECK(rendered.code == exit_ok);
  CHECK(rendered.out.find("01\n") != std::string::npos);
  CHECK(rendered.out.find('|') != std::string::npos);

  const auto js = run({"enumerate", "5", "2", "--format", "json"});
  const auto doc = json::parse(js.out);
  CHECK(doc["result"]["count"] == "6");
  CHECK(doc["result"]["words"][2] == "01010");

  const auto js_render =
      run({"enumerate", "2", "1", "--render", "standard", "--format", "json"});
  const auto doc2 = json::parse(js_render.out);
  CHECK(doc2["result"]["items"][0]["word"] == "01");
  CHECK(doc2["result"]["items"][0]["render"] == "  /\n _");

  CHECK(run({"enumerate", "3", "7"}).code == exit_usage);
  CHECK(run({"enumerate", "-2", "0"}).code == exit_usage);
}

TEST_CASE("enumeration cap") {
  const auto over = run({"enumerate", "25", "3"});
  CHECK(over.code == exit_cap);
  CHECK(!over.err.empty());
  CHECK(run({"enumerate", "25", "3", "--cap", "26"}).code == exit_ok);
  CHECK(run({"enumerate", "10", "2", "--cap", "9"}).code == exit_cap);

  setenv("BALSEG_CAP", "30", 1);
  CHECK(run({"enumerate", "25", "3"}).code == exit_ok);
  setenv("BALSEG_CAP", "20", 1);
  CHECK(run({"enumerate", "25", "3"}).code == exit_cap);
  // An explicit flag beats the environment.
  CHECK(run({"enumerate", "25", "3", "--cap", "25"}).code == exit_ok);
  unsetenv("BALSEG_CAP");
}

TEST_CASE("genfunc") {
  const auto r = run({"genfunc", "s", "2", "--terms", "11"});
  CHECK(r.code == exit_ok);
  CHECK(r.out ==
        "numerator: 0, 1, 0, 1\n"
        "denominator: (1-X^1)(1-X^2)(1-X^3)\n"
        "series: 0, 1, 1, 3, 4, 6, 8, 11, 13, 17, 20\n");

  const auto p2 = run({"genfunc", "p", "2", "--terms", "9"});
  CHECK(p2.out ==
        "numerator: 0, 1\n"
        "denominator: (1-X^1)(1-X^3)\n"
        "series: 0, 1, 1, 1, 2, 2, 2, 3, 3\n");

  const auto js = run({"genfunc", "p", "5", "--terms", "4", "--format", "json"});
  const auto doc = json::parse(js.out);
  CHECK(doc["result"]["numerator"] ==
        json({"0", "1", "0", "1", "0", "0", "0", "1"}));
  CHECK(doc["result"]["denominator_orders"] == json({"4", "6"}));
  CHECK(doc["result"]["denominator"] == "(1-X^4)(1-X^6)");
  CHECK(doc["result"]["series"] == json({"0", "1", "0", "1"}));

  CHECK(run({"genfunc", "s", "-1"}).code == exit_usage);
  CHECK(run({"genfunc", "x", "2"}).code == exit_usage);
}

TEST_CASE("asymptotic") {
  const auto r = run({"asymptotic", "s", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out ==
        "alpha: 1/6\n"
        "beta: 1/3\n"
        "parity_form: false\n"
        "period: 6\n"
        "residual: 0, 1/2, -1/3, 1/2, 0, 1/6\n");

  const auto p2 = run({"asymptotic", "p", "2", "--format", "json"});
  const auto doc = json::parse(p2.out);
  CHECK(doc["result"]["alpha"] == "1/3");
  CHECK(doc["result"]["beta"] == "0");
  CHECK(doc["result"]["parity_form"] == false);
  CHECK(doc["result"]["period"] == "3");
  CHECK(doc["result"]["residual"] == json({"0", "2/3", "1/3"}));

  const auto p3 = run({"asymptotic", "p", "3"});
  CHECK(p3.out.find("parity_form: true") != std::string::npos);
  CHECK(p3.out.find("period: 8") != std::string::npos);

  CHECK(run({"asymptotic", "s", "1"}).code == exit_usage);
  CHECK(run({"asymptotic", "s", "0"}).code == exit_usage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-L", "10", "--brute-max", "8",
                      "--h-max", "3"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("PASS golden-tables") != std::string::npos);
  CHECK(r.out.find("PASS oracle-equivalence") != std::string::npos);
  CHECK(r.out.find("all suites passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto skip = run({"verify", "--max-L", "8", "--brute-max", "0",
                         "--h-max", "2"});
  CHECK(skip.code == exit_ok);
  CHECK(skip.out.find("SKIP oracle-equivalence") != std::string::npos);

  const auto js = run({"verify", "--max-L", "8", "--brute-max", "4",
                       "--h-max", "2", "--format", "json"});
  const auto doc = json::parse(js.out);
  CHECK(doc["status"] == "ok");
  CHECK(doc["result"]["suites"][0]["name"] == "golden-tables");
  CHECK(doc["result"]["suites"][0]["status"] == "skip");
}

TEST_CASE("help") {
  const auto r = run({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("count") != std::string::npos);
  const auto sub = run({"enumerate", "--help"});
  CHECK(sub.code == exit_ok);
  CHECK(sub.out.find("--palindromes") != std::string::npos);
}
