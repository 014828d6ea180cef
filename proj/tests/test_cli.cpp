#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twoconn/multigraph.hpp"
#include "twoconn_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = twoconn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("twoconn_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("count exact") {
  const Result r = run({"count", "exact", "--n", "4", "--m", "4", "--predicate", "two-connected"});
  CHECK(r.code == 0);
  CHECK(parse(r.out)["count"] == "3");
  const Result nine = run({"count", "exact", "--n", "9", "--m", "4", "--predicate", "all"});
  CHECK(nine.code == 1);
  CHECK(parse(nine.err)["error"]["type"] == "limit");
}

TEST_CASE("params") {
  const Result r = run({"params", "--n", "1000", "--m", "2000"});
  CHECK(r.code == 0);
  const double lambda = std::stod(parse(r.out)["lambda_c"].get<std::string>());
  CHECK(lambda > 3.58);
  CHECK(lambda < 3.60);
}

TEST_CASE("count asymptotic") {
  const Result main = run({"count", "asymptotic", "--n", "1000000", "--m", "1500000", "--regime", "main"});
  const Result b = run({"count", "asymptotic", "--n", "1000000", "--m", "1500000", "--regime", "b"});
  CHECK(main.code == 0);
  CHECK(main.out == b.out);
  const auto j = parse(main.out);
  const std::string log10 = j["log10_count"];
  CHECK(log10.size() - log10.find('.') - 1 == 6);
  CHECK(j["breakdown"].contains("obstruction"));

  const Result autoa = run({"count", "asymptotic", "--n", "100000", "--m", "100500"});
  CHECK(parse(autoa.out)["formula"] == "a");
  const Result autoc = run({"count", "asymptotic", "--n", "1000", "--m", "20000", "--regime", "auto"});
  CHECK(parse(autoc.out)["formula"] == "c");
  const Result wright = run({"count", "asymptotic", "--n", "100000", "--m", "100010", "--regime", "wright"});
  CHECK(parse(wright.out)["formula"] == "wright");
  const Result bad = run({"count", "asymptotic", "--n", "100", "--m", "100"});
  CHECK(bad.code == 1);
  CHECK(parse(bad.err)["error"]["type"] == "domain");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"params", "--n", "10", "--m", "20", "--bogus", "1"}).code == 2);
  CHECK(run({"count", "asymptotic", "--n", "10", "--m", "20", "--regime", "z"}).code == 2);
  CHECK(run({"params", "--n", "10"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("degree-sequence counts") {
  const std::string k4 = temp_file("k4", "3 3 3 3\n");
  const Result exact = run({"count", "exact-degseq", "--file", k4, "--predicate", "two-connected"});
  CHECK(exact.code == 0);
  const auto j = parse(exact.out);
  CHECK(j["count"] == "1");
  CHECK(j["probability"]["numerator"] == "48");
  CHECK(j["probability"]["denominator"] == "385");
  const Result asym = run({"count", "degseq", "--file", k4, "--regime", "c"});
  CHECK(asym.code == 0);
  CHECK(parse(asym.out)["breakdown"].contains("obstruction_eta"));
  const Result missing = run({"count", "degseq", "--file", "/nonexistent/degrees", "--regime", "c"});
  CHECK(missing.code == 1);
}

TEST_CASE("sample pairing and kernel") {
  const std::string file = temp_file("mixed", "3 3 2 2 4 2\n");
  const Result pairing = run({"sample", "pairing", "--file", file, "--seed", "4"});
  CHECK(pairing.code == 0);
  std::istringstream in(pairing.out);
  const twoconn::Multigraph g = twoconn::read_edge_list(in);
  CHECK(g.degrees() == std::vector<int>{3, 3, 2, 2, 4, 2});
  CHECK(run({"sample", "pairing", "--file", file, "--seed", "4"}).out == pairing.out);

  const Result kernel = run({"sample", "kernel", "--file", file, "--seed", "4"});
  CHECK(kernel.code == 0);
  const auto j = parse(kernel.out);
  std::istringstream pk(j["pre_kernel"].get<std::string>());
  CHECK(twoconn::read_edge_list(pk).degrees() == std::vector<int>{3, 3, 2, 2, 4, 2});
  CHECK(j["assignment"].size() == 5);

  const Result conditioned = run({"sample", "pairing", "--n", "50", "--m", "70", "--conditioned", "--seed", "2"});
  CHECK(conditioned.code == 0);
  CHECK(conditioned.out.rfind("50 70\n", 0) == 0);
  CHECK(run({"sample", "pairing", "--n", "50", "--m", "70"}).code == 1);
  CHECK(run({"sample", "pairing", "--file", file, "--n", "5"}).code == 2);
}

TEST_CASE("estimate and xyz are reproducible across thread counts") {
  const std::vector<std::string> base = {"estimate", "--model", "kernel", "--event", "2cs", "--samples",
                                         "300",      "--seed",  "3",      "--n",     "2000", "--m", "3000"};
  auto with_threads = [&](const char* t) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(t);
    return run(args);
  };
  const Result one = with_threads("1");
  CHECK(one.code == 0);
  CHECK(one.out == with_threads("4").out);
  const auto j = parse(one.out);
  CHECK(j["statistic"] == "2cs");
  CHECK(j["samples"] == "300");
  CHECK(j["params"]["conditioned"] == true);

  const std::vector<std::string> xyz = {"xyz", "--mode", "section8", "--samples", "100", "--seed", "5", "--n", "2000",
                                        "--m", "3000"};
  const Result x1 = run(xyz);
  CHECK(x1.code == 0);
  CHECK(parse(x1.out).contains("mean_x_plus_y_plus_z"));
  CHECK(x1.out == run(xyz).out);

  const std::string cubic = temp_file("cubic", std::string(200, ' ').replace(0, 0, "3 3 3 3 3 3 3 3 3 3"));
  const Result fixed = run({"estimate", "--model", "pairing", "--event", "simple", "--samples", "100", "--degrees", cubic});
  CHECK(fixed.code == 0);
  CHECK(parse(fixed.out)["params"]["conditioned"] == false);
  CHECK(run({"estimate", "--model", "kernel", "--event", "nope", "--samples", "10", "--degrees", cubic}).code == 1);
}

TEST_CASE("typical") {
  std::string twos;
  for (int i = 0; i < 100; ++i) twos += "2 ";
  twos += "100";
  const std::string file = temp_file("twos", twos);
  const Result r = run({"typical", "--file", file, "--regime", "b", "--epsilon", "0.1"});
  CHECK(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j["member"] == false);
  CHECK_FALSE(j["violations"].empty());
}

TEST_CASE("table sweep") {
  const auto csv_path = std::filesystem::temp_directory_path() / "twoconn_cli_test_sweep.csv";
  const std::string sweep = temp_file(
      "sweep.json", R"({"variable": "c", "values": [10, 20, 30, 40], "fixed": {"n": 10000}, "output": ")" +
                        csv_path.string() + "\"}");
  const Result r = run({"table", "--sweep", sweep});
  CHECK(r.code == 0);
  CHECK(parse(r.out)["rows"] == "4");
  std::ifstream in(csv_path);
  std::string header, line;
  std::getline(in, header);
  CHECK(header.rfind("variable,value,n,m,c", 0) == 0);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);

  const std::string to_stdout =
      temp_file("sweep2.json", R"({"variable": "n", "values": [100000, 1000000], "fixed": {"r_exponent": 0.7}})");
  const Result s = run({"table", "--sweep", to_stdout});
  CHECK(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 3);
  const std::string bad = temp_file("sweep3.json", R"({"variable": "c"})");
  CHECK(run({"table", "--sweep", bad}).code == 1);
}
