#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ASD_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(ASD_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("eval") {
  auto r = run("eval \"x*x+1\" --at 1/3 --eps 1/1000000");
  CHECK(r.code == 0);
  CHECK(r.out.find("[111111/100000, 138889/125000]") != std::string::npos);

  auto j = run("eval \"x+1\" --at 0 --eps 1/2 --json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"lower\"") != std::string::npos);
}

TEST_CASE("eval errors") {
  auto r = run("eval \"x+\" --at 0 --eps 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("offset 2") != std::string::npos);
  CHECK(run("eval \"0.5*x\" --at 0 --eps 1").code == 2);
  CHECK(run("eval x --at 0 --eps 0").code == 2);
  CHECK(run("eval x --at zero --eps 1").code == 2);
  CHECK(run("eval \"x*x*x*x*x*x*x*x\" --at 1000 --eps 1/1000000 --max-depth 2").code == 3);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("check-nucleus") {
  CHECK(run("check-nucleus free-dl-1 --max-card 3").code == 0);
  CHECK(run("check-nucleus two-point").code == 0);
  CHECK(run("check-nucleus " + data("two_point.json")).code == 0);
  auto bad = run("check-nucleus strict-chain-2 --universe all");
  CHECK(bad.code == 1);
  CHECK(run("check-nucleus no-such-basis").code == 2);
}

TEST_CASE("check-basis") {
  CHECK(run("check-basis real-line --samples 500 --seed 1").code == 0);
  auto unit = run("check-basis unit-interval --samples 500");
  CHECK(unit.code == 0);
  CHECK(unit.out.find("compact: yes") != std::string::npos);
  CHECK(run("check-basis diamond").code == 0);
  CHECK(run("check-basis " + data("strict_chain.json")).code == 1);
  CHECK(run("check-basis closed-containment --samples 500").code == 0);
  CHECK(run("check-basis margin-interval --samples 500").code == 3);
  CHECK(run("check-basis real-line --exhaustive").code == 2);
}

TEST_CASE("check-points") {
  auto r = run("check-points diamond");
  CHECK(r.code == 0);
  CHECK(r.out.find("{a,1}") != std::string::npos);
  CHECK(run("check-points strict-chain-2").code == 1);
}

TEST_CASE("validate-matrix") {
  CHECK(run("validate-matrix " + data("add_one.json") + " --samples 300").code == 0);
  CHECK(run("validate-matrix " + data("square_plus_one.json") + " --samples 200").code == 0);
  CHECK(run("validate-matrix " + data("two_point_identity.json")).code == 0);
  auto t = run("validate-matrix " + data("constant_true.json") + " --samples 200");
  CHECK(t.code == 1);
  CHECK(t.out.find("bottom") != std::string::npos);
  CHECK(run("validate-matrix " + data("choice.json") + " --samples 2000").code == 1);
  CHECK(run("validate-matrix " + data("two_point_all.json")).code == 1);
  CHECK(run("validate-matrix " + data("missing.json")).code == 2);
  CHECK(run("validate-matrix " + data("two_point.json")).code == 2);
}
