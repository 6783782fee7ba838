// Exercises the installed CLI binary (path in $PMCG_CLI): exit codes and
// machine-readable output.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "pmcg/json_io.hpp"

using namespace pmcg;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("PMCG_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("generate daisy 3") {
  RunResult r = run("generate daisy 3");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["certificate"]["status"] == "verified");
  CHECK(j["surface"]["n"] == 4);
  Relation rel = relation_from_json(j);
  CHECK(rel.lhs.twist_count() == 6);
  CHECK(rel.rhs.twist_count() == 4);
  CHECK(j["properties"]["all_hold"] == true);
}

TEST_CASE("generate linear embeds cf metadata") {
  RunResult r = run("generate linear 17 7");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["certificate"]["status"] == "verified");
  CHECK(j["cf"]["coefficients"] == Json::array({3, 2, 6, 2, 4, 2}));
}

TEST_CASE("generate wfam") {
  RunResult r = run("generate wfam 0 0 0");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["certificate"]["status"] == "verified");
}

TEST_CASE("generate usage errors") {
  CHECK(run("generate daisy").exit_code == 2);
  CHECK(run("generate daisy 1").exit_code == 2);
  CHECK(run("generate nosuch 1").exit_code == 2);
}

TEST_CASE("verify round trip and mutation") {
  RunResult gen = run("generate lantern");
  REQUIRE(gen.exit_code == 0);
  Json j = Json::parse(gen.out);
  j.erase("properties");

  std::string good = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/pmcg_test_good.json";
  std::string bad = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/pmcg_test_bad.json";
  {
    std::ofstream f(good);
    f << j.dump(2);
  }
  RunResult ver = run("verify " + good);
  CHECK(ver.exit_code == 0);
  CHECK(Json::parse(ver.out)["certificate"]["status"] == "verified");

  j["lhs"][0]["power"] = 3;
  {
    std::ofstream f(bad);
    f << j.dump(2);
  }
  RunResult refuted = run("verify " + bad);
  CHECK(refuted.exit_code == 1);
  Json rj = Json::parse(refuted.out);
  CHECK(rj["certificate"]["status"] == "refuted");
  CHECK(rj["certificate"].contains("diagnostic"));

  {
    std::ofstream f(bad);
    f << "{ not json";
  }
  CHECK(run("verify " + bad).exit_code == 2);
  CHECK(run("verify /nonexistent/file.json").exit_code == 2);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("verify accepts the empty relation") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/pmcg_test_empty.json";
  {
    std::ofstream f(path);
    f << R"({"schema":1,"surface":{"n":2,"labels":["1","2"]},"lhs":[],"rhs":[],)"
      << R"("certificate":{"status":"unverified"}})";
  }
  RunResult r = run("verify " + path);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["certificate"]["status"] == "verified");
  std::remove(path.c_str());
}

TEST_CASE("cf command") {
  RunResult r = run("cf 17 7");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["coefficients"] == Json::array({3, 2, 6, 2, 4, 2}));
  CHECK(j["c_sequence"] == Json::array({6, 4, 3}));
  CHECK(j["x_sequence"] == Json::array({2, 2, 1}));
  CHECK(j["theta_chain"]["links"].size() == 3);

  RunResult base = run("cf 2 1");
  REQUIRE(base.exit_code == 0);
  CHECK(Json::parse(base.out)["coefficients"] == Json::array({4}));
  CHECK_FALSE(Json::parse(base.out).contains("theta_chain"));

  CHECK(run("cf 4 2").exit_code == 2);
}

TEST_CASE("blowdown-report") {
  RunResult r = run("blowdown-report linear 2 1 --chi 56 --sigma -36");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["blowdown"]["chi"] == 55);
  CHECK(j["blowdown"]["sigma"] == -35);
  CHECK(j["blowdown"]["homeo_type"]["b2plus"] == 9);
  CHECK(j["blowdown"]["homeo_type"]["b2minus"] == 44);

  RunResult w = run("blowdown-report wfam 1 1 1");
  REQUIRE(w.exit_code == 0);
  Json wj = Json::parse(w.out);
  CHECK(wj["vertex_count"] == 7);
  CHECK(wj["length_difference"] == 7);
  CHECK_FALSE(wj.contains("blowdown"));

  RunResult lin = run("blowdown-report linear 17 7");
  REQUIRE(lin.exit_code == 0);
  CHECK(Json::parse(lin.out)["graph"]["det"] == "289");

  CHECK(run("blowdown-report linear 4 2").exit_code == 2);
}

TEST_CASE("rho command") {
  RunResult r = run("rho 2");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["b2plus"] == 9);
  CHECK(j["b2minus"] == 44);
  RunResult r3 = run("rho 3");
  REQUIRE(r3.exit_code == 0);
  Json j3 = Json::parse(r3.out);
  CHECK(j3["b2plus"] == 25);
  CHECK(j3["b2minus"] == 102);
  CHECK(run("rho 1").exit_code == 2);
  CHECK(run("rho 9").exit_code == 2);
  CHECK(run("rho 5 --max-genus 5").exit_code == 0);
}

TEST_CASE("convention ledger flag") {
  RunResult r = run("--convention-ledger");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FRONT") != std::string::npos);
}
