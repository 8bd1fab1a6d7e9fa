#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(AFM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("solve subcommand emits the documented JSON") {
  auto r = run_cli("solve --kinematics ur --N 3 --one-body linear:a=1 --Q 3");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["mass"].get<double>() == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(j["x0"].get<double>() > 0);

  // re-running with the echoed inputs reproduces the value bit for bit
  auto r2 = run_cli("solve --kinematics ur --N 3 --one-body linear:a=1 --Q 3");
  CHECK(json::parse(r2.out)["mass"].get<double>() == j["mass"].get<double>());
}

TEST_CASE("nonrelativistic solve reports binding energy") {
  auto r = run_cli("solve --kinematics nr --N 2 --m 1 --two-body quadratic:k=1 --Q 1.5");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["energy"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("invalid input exits with status 2") {
  CHECK(run_cli("solve --kinematics nope --Q 3 --one-body linear:a=1").status == 2);
  CHECK(run_cli("solve --kinematics nr --N 2 --m 1 --two-body powerlaw:a=1,lambda=0 --Q 1").status == 2);
}

TEST_CASE("solver failure exits with status 3") {
  CHECK(run_cli("solve --kinematics ur --N 3 --one-body coulomb:a=1 --Q 3").status == 3);
}

TEST_CASE("duality verification and seeded sweep") {
  auto r = run_cli("duality-verify --relation GEN_1B_NP --kinematics sr --N 3 --m 1 --Q 3 "
                   "--one-body funnel:a=1,b=1 --p 2");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"].get<bool>());

  auto s = run_cli("duality-sweep --seed 7 --count 2 --tol 1e-9 --jobs 2");
  REQUIRE(s.status == 0);
  json js = json::parse(s.out);
  CHECK(js["failures"].get<int>() == 0);
  auto s2 = run_cli("duality-sweep --seed 7 --count 2 --tol 1e-9 --jobs 1");
  CHECK(json::parse(s2.out)["worst_rel_residual"].get<double>() ==
        js["worst_rel_residual"].get<double>());
}

TEST_CASE("csv output carries a header row") {
  auto r = run_cli("--output csv exact-2b --m 1 --two-body coulomb:a=1 --n 0 --l 0");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("m,n,l,points,energy") == 0);
  CHECK(r.out.find("-0.25") != std::string::npos);
}

TEST_CASE("salpeter and universal-function subcommands") {
  auto r = run_cli("salpeter-2b --sigma 2 --m 10 --two-body quadratic:k=1 --n 0 --l 0");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["mass"].get<double>() == doctest::Approx(20.9459).epsilon(2e-3));

  auto f = run_cli("universal-f --two-body quadratic:k=1 --m 4");
  REQUIRE(f.status == 0);
  CHECK(json::parse(f.out)["f"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));

  auto F = run_cli("universal-F --potential linear:a=1 --x 4");
  REQUIRE(F.status == 0);
  CHECK(json::parse(F.out)["F"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));

  auto G = run_cli("universal-G --potential coulomb:a=1 --x 2");
  REQUIRE(G.status == 0);
  CHECK(json::parse(G.out)["G"].get<double>() == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("predict subcommand") {
  auto r = run_cli("predict --mode gs_link --m 2 --N 3 --labels \"0,0;0,0\" "
                   "--q-prescription ho --two-body linear:a=1");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(4.8635).epsilon(1e-3));
}

TEST_CASE("table1 reproduces the reference and exits cleanly") {
  auto r = run_cli("--output csv table table1");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("n,l,exact,pred_ho,dev_ho_pct,pred_improved,dev_improved_pct") == 0);
  // 16 data rows + header
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') lines++;
  CHECK(lines == 17);
}
