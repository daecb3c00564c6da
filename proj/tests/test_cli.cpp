#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using interlace::cli::run;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "interlace");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("row command") {
  const auto csv = invoke({"row", "--m", "2", "--method", "direct", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "21/8,15/4,3/2\n");
  CHECK(invoke({"row", "--m", "0", "--format", "csv"}).out == "1\n");
  const auto pretty = invoke({"row", "--m", "0"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("NOT exact") != std::string::npos);
  const auto negative = invoke({"row", "--m", "-1"});
  CHECK(negative.code == 2);
  CHECK_FALSE(negative.err.empty());
  CHECK(invoke({"row", "--m", "2001"}).code == 2);
  CHECK(invoke({"row", "--m", "2001", "--m-cap", "3000", "--method", "recurrence", "--format", "csv"}).code == 0);
  CHECK(invoke({"row", "--m", "3", "--method", "fft"}).code == 2);
}

TEST_CASE("row methods agree on csv output") {
  const auto direct = invoke({"row", "--m", "12", "--method", "direct", "--format", "csv"}).out;
  CHECK(invoke({"row", "--m", "12", "--method", "expand", "--format", "csv"}).out == direct);
  CHECK(invoke({"row", "--m", "12", "--method", "recurrence", "--format", "csv"}).out == direct);
  CHECK(direct.find('.') == std::string::npos);
}

TEST_CASE("row json envelope") {
  const auto res = invoke({"row", "--m", "2", "--format", "json"});
  REQUIRE(res.code == 0);
  const auto doc = json::parse(res.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "row");
  CHECK(doc["results"]["degree"] == 2);
  CHECK(doc["results"]["entries"][0]["numerator"] == "21");
  CHECK(doc["results"]["entries"][0]["exp2"] == "3");
  CHECK(doc["timing_ms"].is_number_integer());
}

TEST_CASE("verify command exit codes") {
  CHECK(invoke({"verify", "--property", "interlacing", "--m-max", "50", "--format", "csv"}).code == 0);
  CHECK(invoke({"verify", "--property", "theorem1", "--m-max", "100", "--format", "csv"}).code == 0);
  CHECK(invoke({"verify", "--property", "all", "--m-max", "1"}).code == 2);
  CHECK(invoke({"verify", "--property", "nonsense"}).code == 2);
  const auto all = invoke({"verify", "--m-max", "20", "--strict", "--format", "json", "--workers", "2"});
  CHECK(all.code == 0);
  const auto doc = json::parse(all.out);
  CHECK(doc["results"]["pass"] == true);
  CHECK(doc["violations"].empty());
}

TEST_CASE("criterion command") {
  CHECK(invoke({"criterion", "--family", "whitney", "--param", "2", "--n-max", "30", "--format", "csv"}).code == 0);
  CHECK(invoke({"criterion", "--family", "pascal", "--n-max", "30", "--format", "csv"}).code == 0);
  CHECK(invoke({"criterion", "--family", "unknown"}).code == 2);
  CHECK(invoke({"criterion", "--family", "pascal", "--file", "x.rec"}).code == 2);
  const auto random = invoke({"criterion", "--family", "random", "--seed", "11", "--n-max", "12", "--format", "json"});
  CHECK(json::parse(random.out)["parameters"]["seed"] == 11);
}

TEST_CASE("criterion command reports violations with exit 1") {
  const std::string path = "interlace_cli_decreasing.rec";
  {
    std::ofstream out(path);
    out << "name = decreasing\nf = n - k\ng = 1\n";
  }
  const auto res = invoke({"criterion", "--file", path, "--n-max", "10", "--sturm-up-to", "6", "--format", "json"});
  std::remove(path.c_str());
  CHECK(res.code == 1);
  CHECK_FALSE(json::parse(res.out)["violations"].empty());
}

TEST_CASE("criterion command rejects a bad recurrence file") {
  const std::string path = "interlace_cli_bad.rec";
  {
    std::ofstream out(path);
    out << "f = 1 + * k\ng = 1\n";
  }
  const auto res = invoke({"criterion", "--file", path});
  std::remove(path.c_str());
  CHECK(res.code == 2);
  CHECK(res.err.find(path) != std::string::npos);
  CHECK(res.err.find("line 1, column 9") != std::string::npos);
  CHECK(invoke({"criterion", "--file", "missing.rec"}).code == 2);
}

TEST_CASE("explore command") {
  CHECK(invoke({"explore", "--m-max", "10", "--l-iterations", "2"}).code == 0);
  CHECK(invoke({"explore", "--m-max", "10", "--l-iterations", "0"}).code == 2);
  const auto res = invoke({"explore", "--m-max", "10", "--l-iterations", "2", "--format", "json"});
  const auto doc = json::parse(res.out);
  CHECK(doc["results"]["interlacing_depth"][0]["all_interlacing"] == true);
  CHECK(doc["results"]["k_fold"].size() == 11);
}

TEST_CASE("machine output is deterministic apart from timing") {
  auto strip = [](const std::string& text) {
    auto doc = json::parse(text);
    doc.erase("timing_ms");
    return doc.dump();
  };
  const std::vector<std::string> args{"explore", "--m-max", "12", "--l-iterations", "2", "--format", "json"};
  CHECK(strip(invoke(args).out) == strip(invoke(args).out));
  const std::vector<std::string> crit{"criterion", "--family", "random", "--seed", "5", "--n-max", "10", "--format", "json"};
  CHECK(strip(invoke(crit).out) == strip(invoke(crit).out));
}

TEST_CASE("help and missing subcommand") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
}
