#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmc/cli.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cmc_forge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cmc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

const std::string kSqrt2 = "1.4142135623730951";

}  // namespace

TEST_CASE("domain check") {
  const Outcome o = invoke({"domain", "check", "--a", "1", "--b", kSqrt2, "--R", "2"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["kind"] == "domain_check");
  CHECK(std::abs(doc["condition_value"].get<double>() + 1.0) < 1e-12);
  CHECK(doc["r_sq"].get<double>() == 4.0);

  const Outcome prolate = invoke({"domain", "check", "--a", "2", "--b", "1"});
  CHECK(prolate.code == 2);
  CHECK(prolate.err.find("meridian condition") != std::string::npos);
  CHECK(nlohmann::json::parse(prolate.out)["admissible"] == false);
}

TEST_CASE("certify unduloid") {
  const Outcome o = invoke({"certify", "--B", "0.9", "--H", "0.1", "--a", "1", "--b", kSqrt2});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["verdict"] == "certified");
  CHECK(doc["sample_count"] == 2048);
  CHECK(o.err.empty());
}

TEST_CASE("contact") {
  const Outcome cyl = invoke({"contact", "--B", "0", "--H", "1", "--a", "1", "--b", "2"});
  CHECK(cyl.code == 2);
  CHECK(cyl.err.find("NoRoot") != std::string::npos);
  CHECK(cyl.out.empty());

  const Outcome nod = invoke({"contact", "--B", "1.1", "--H", "0.1", "--ratio", "2"});
  CHECK(nod.code == 0);
  const auto doc = nlohmann::json::parse(nod.out);
  CHECK(doc["curve"] == "nodoid");
  CHECK(doc["valid"] == true);

  const Outcome cat = invoke({"contact", "--catenoid", "--ratio", "2"});
  CHECK(cat.code == 0);
  CHECK(nlohmann::json::parse(cat.out)["s_bar"].get<double>() == doctest::Approx(0.8506102).epsilon(1e-7));

  const Outcome hyp = invoke({"contact", "--B", "0.5", "--H", "1", "--ratio", "2"});
  CHECK(hyp.code == 2);
  CHECK(hyp.err.find("ExistenceHypothesisFailed") != std::string::npos);
  const Outcome forced = invoke({"contact", "--B", "0.5", "--H", "1", "--ratio", "2", "--force-search"});
  CHECK(forced.code == 0);
  CHECK(nlohmann::json::parse(forced.out)["forced"] == true);
}

TEST_CASE("profile") {
  const Outcome csv = invoke({"profile", "--B", "0.9", "--H", "0.1", "--ratio", "2", "--s-min", "-1",
                              "--s-max", "1", "--samples", "5"});
  CHECK(csv.code == 0);
  std::istringstream in(csv.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0].rfind("s,x,z,", 0) == 0);
  CHECK(lines[1].rfind("-1,", 0) == 0);
  CHECK(lines[5].rfind("1,", 0) == 0);

  const Outcome json = invoke({"profile", "--catenoid", "--format", "json", "--samples", "3"});
  CHECK(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["samples"].size() == 3);
}

TEST_CASE("mesh") {
  const Outcome o = invoke({"mesh", "--catenoid", "--ratio", "2", "--samples", "4", "--theta-samples", "5"});
  CHECK(o.code == 0);
  std::istringstream in(o.out);
  int v = 0, f = 0;
  for (std::string l; std::getline(in, l);) {
    v += l.rfind("v ", 0) == 0;
    f += l.rfind("f ", 0) == 0;
  }
  CHECK(v == 20);
  CHECK(f == 2 * 3 * 5);
  CHECK(o.out == invoke({"mesh", "--catenoid", "--ratio", "2", "--samples", "4", "--theta-samples", "5"}).out);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "cmc_forge_cli_test.json";
  const Outcome o = invoke({"contact", "--B", "0.9", "--H", "0.1", "--ratio", "2", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream file(path);
  const auto doc = nlohmann::json::parse(file);
  CHECK(doc["kind"] == "contact_certificate");
  std::filesystem::remove(path);
}

TEST_CASE("usage and numeric errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"contact", "--B", "1", "--H", "0.1"}).code == 1);
  CHECK(invoke({"contact", "--B", "0.9", "--H", "-1"}).code == 1);
  CHECK(invoke({"contact", "--B", "0.9", "--H", "0.1", "--a", "2", "--b", "1"}).code == 1);
  CHECK(invoke({"contact", "--B", "0.9", "--H", "0.1", "--ratio", "2", "--a", "1"}).code == 1);
  CHECK(invoke({"contact", "--B", "0.9", "--H", "0.1", "--format", "csv"}).code == 1);
  CHECK(invoke({"profile", "--B", "0.9", "--H", "0.1", "--samples", "1"}).code == 1);
  CHECK(invoke({"contact", "--B", "0.9"}).code == 1);
  CHECK(invoke({"contact", "--catenoid", "--B", "0.9", "--H", "1"}).code == 1);
  const Outcome bad = invoke({"contact", "--B", "abc", "--H", "0.1"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
  CHECK(invoke({"--help"}).code == 0);
}
