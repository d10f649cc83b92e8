#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "kva/certify.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is discarded.
Run kva_run(const std::string& args) {
  const std::string cmd = std::string(KVA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

void require_round_trip(const std::string& out) {
  const auto j = nlohmann::ordered_json::parse(out);
  REQUIRE(j.dump(2) + "\n" == out);
}

}  // namespace

TEST_CASE("check examples") {
  SUBCASE("certified") {
    const auto r = kva_run("check -s 1 -a 12 -b 12 -k 2 -d 10 -r 28");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "N^2               = 36"));
    CHECK(contains(r.out, "2007/196"));
    CHECK(contains(r.out, "verdict: k-very-ample-certified"));
  }
  SUBCASE("too many points") {
    const auto r = kva_run("check -s 1 -a 12 -b 12 -k 2 -d 10 -r 29");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "[FAIL] r <= r_max"));
    CHECK(contains(r.out, "hypotheses-not-met"));
  }
  SUBCASE("a below d+2") {
    const auto r = kva_run("check -s 1 -a 11 -b 12 -k 2 -d 10 -r 2");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "[FAIL] a >= d+2"));
  }
  SUBCASE("json") {
    const auto r = kva_run("--json check -s 1 -a 12 -b 12 -k 2 -d 10 -r 28");
    CHECK(r.code == 0);
    require_round_trip(r.out);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["verdict"] == "k-very-ample-certified");
    CHECK(j["derived"]["N2"] == 36);
    CHECK(j["derived"]["seshadri_lower_sq"] == "2007/196");
    CHECK(j["hypothesis_checks"].size() == 6);
  }
}

TEST_CASE("max-r and seshadri") {
  auto r = kva_run("max-r -a 12 -b 12 -k 2");
  CHECK(r.code == 0);
  CHECK(r.out == "28\n");
  CHECK(kva_run("max-r -a 13 -b 13 -k 2").out == "33\n");
  r = kva_run("max-r -a 4 -b 4 -k 2");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(kva_run("max-r -a 0 -b 4 -k 2").code == 2);

  r = kva_run("seshadri -a 12 -b 12 -r 28");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "2007/196"));
  CHECK(contains(r.out, "3.199968"));
  CHECK(contains(kva_run("seshadri -a 1 -b 1 -r 1").out, "1.322876"));
  CHECK(contains(kva_run("seshadri -a 12 -b 12 -r 1").out, "15.874508"));
  CHECK(kva_run("seshadri -a 12 -b 12 -r 0").code == 2);
}

TEST_CASE("surfaces") {
  const auto r = kva_run("surfaces --json");
  CHECK(r.code == 0);
  require_round_trip(r.out);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j.size() == 7);
  CHECK(j[4]["group"] == "Z3");
  CHECK(j[1]["basis"] == "A/2, B/2");
  CHECK(kva_run("surfaces").out.find("Z2xZ2") != std::string::npos);
}

TEST_CASE("constants") {
  auto r = kva_run("constants verify");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "c_max     = 887/1000"));
  r = kva_run("constants --json");
  CHECK(r.code == 0);
  require_round_trip(r.out);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["c_max"] == "887/1000");
  CHECK(j["delta_max"] == "89/500");
  CHECK(j["c_ceiling"] == "477/500");
  CHECK(j["discrepancies"].size() == 5);

  r = kva_run("constants --kmin 3 --json");
  CHECK(nlohmann::ordered_json::parse(r.out)["c_ceiling"] == "122/125");
  // no feasible point on the coarse grid
  CHECK(kva_run("constants --grid-step 1/10").code == 1);
  CHECK(kva_run("constants --grid-step 0").code == 2);
  CHECK(kva_run("constants --grid-step abc").code == 2);
}

TEST_CASE("obstructions") {
  auto r = kva_run("obstructions -a 12 -b 12 -k 2 -r 28");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "none found within proof bounds"));
  CHECK(kva_run("obstructions -a 12 -b 12 -k 2 -r 28 --formula standard").code == 0);
  r = kva_run("obstructions -a 3 -b 3 -k 2 -r 4");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "witness: D_S = (1,1), sum m = 1, m = (1,0,0,0), nd = 3, d2 = 1"));
  r = kva_run("obstructions -a 3 -b 3 -k 2 -r 4 --json");
  require_round_trip(r.out);
  CHECK(kva_run("obstructions -a 12 -b 12 -k 2 -r 28 --formula other").code == 2);
  CHECK(kva_run("obstructions -a 12 -b 12 -k 2 -r 28 --delta 0").code == 2);
}

TEST_CASE("exit code matrix") {
  const struct {
    const char* args;
    int code;
  } matrix[] = {
      {"check -s 1 -a 12 -b 12 -k 2 -d 10 -r 28", 0},
      {"check -s 7 -a 12 -b 12 -k 2 -d 10 -r 28", 0},
      {"check -s 1 -a 12 -b 12 -k 2 -d 9 -r 28", 1},
      {"check -s 1 -a 12 -b 12 -k 1 -d 10 -r 2", 1},
      {"check -s 1 -a 12 -b 12 -k 2 -d 10 -r 1", 1},
      {"check -s 8 -a 12 -b 12 -k 2 -d 10 -r 28", 2},
      {"check -s 1 -a 1.5 -b 12 -k 2 -d 10 -r 28", 2},
      {"check -s 1 -a 12 -b 12 -k 2 -d 10", 2},
      {"check -s 1 -a x -b 12 -k 2 -d 10 -r 28", 2},
      {"", 2},
      {"frobnicate", 2},
      {"--quiet check -s 1 -a 12 -b 12 -k 2 -d 10 -r 29", 1},
  };
  for (const auto& m : matrix) {
    CAPTURE(m.args);
    CHECK(kva_run(m.args).code == m.code);
  }
  CHECK(kva_run("--quiet check -s 1 -a 12 -b 12 -k 2 -d 10 -r 28").out.empty());
}

TEST_CASE("check at r = max-r certifies whenever the other hypotheses hold") {
  for (int k = 2; k <= 5; ++k) {
    const int t2 = (k + 1) * (k + 1);
    for (int d = t2 + 1; d <= t2 + 3; ++d)
      for (int a = d + 2; a <= d + 12; a += 3)
        for (int b = d + 2; b <= d + 12; b += 4) {
          const auto rmax = kva::max_r({a, b}, k);
          if (rmax < 2) continue;
          const auto cert = kva::certify_instance({1, a, b, k, d, rmax.get_si()});
          REQUIRE(cert.certified());
          REQUIRE(cert.star);
          const auto over = kva::certify_instance({1, a, b, k, d, rmax.get_si() + 1});
          REQUIRE_FALSE(over.certified());
          REQUIRE(over.failed_checks() == std::vector<std::string>{"r <= r_max"});
        }
  }
  const auto r = kva_run("check -s 2 -a 13 -b 15 -k 2 -d 10 -r " + std::to_string(kva::max_r({13, 15}, 2).get_si()));
  CHECK(r.code == 0);
}
