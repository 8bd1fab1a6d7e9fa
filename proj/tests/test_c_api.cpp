#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "afm/afm_c.h"

using nlohmann::json;

namespace {
std::string take(char* s) {
  std::string out(s ? s : "");
  afm_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("potential lifecycle through the C surface") {
  afm_potential* p = nullptr;
  REQUIRE(afm_potential_parse("funnel:a=1,b=2", &p) == AFM_OK);
  double v = 0;
  CHECK(afm_potential_eval(p, 2.0, &v) == AFM_OK);
  CHECK(v == doctest::Approx(-0.5 + 4.0));
  CHECK(afm_potential_deriv(p, 1.0, &v) == AFM_OK);
  CHECK(v == doctest::Approx(3.0));
  char* text = nullptr;
  CHECK(afm_potential_format(p, &text) == AFM_OK);
  CHECK(take(text).find("funnel") == 0);
  afm_potential* w = nullptr;
  CHECK(afm_potential_sqrt_transform(p, 2.0, &w) == AFM_OK);
  CHECK(afm_potential_eval(w, 4.0, &v) == AFM_OK);
  double expect = -1.0 / (2.0 * 2.0) + 2.0 * (2.0 * 2.0);
  CHECK(v == doctest::Approx(expect));
  afm_potential_free(w);
  afm_potential_free(p);

  afm_potential* bad = nullptr;
  CHECK(afm_potential_parse("powerlaw:a=1,lambda=0", &bad) != AFM_OK);
  CHECK(std::string(afm_last_error()).find("lambda") != std::string::npos);
}

TEST_CASE("solve through the C surface") {
  afm_potential* lin = nullptr;
  REQUIRE(afm_potential_parse("linear:a=1", &lin) == AFM_OK);
  afm_system* sys = nullptr;
  REQUIRE(afm_system_create("ur", 3, 2.0, 0.0, lin, nullptr, &sys) == AFM_OK);
  afm_solution sol{};
  REQUIRE(afm_solve(sys, 3.0, &sol) == AFM_OK);
  CHECK(sol.value == doctest::Approx(6.0).epsilon(1e-11));
  CHECK(sol.residual <= 1e-12);
  CHECK(sol.r0_onebody > 0);
  afm_system_free(sys);

  // coulomb one-body in the massless limit: no-bracket error code
  afm_potential* cou = nullptr;
  REQUIRE(afm_potential_parse("coulomb:a=1", &cou) == AFM_OK);
  afm_system* sys2 = nullptr;
  REQUIRE(afm_system_create("ur", 3, 2.0, 0.0, cou, nullptr, &sys2) == AFM_OK);
  CHECK(afm_solve(sys2, 3.0, &sol) == AFM_ERR_NO_BRACKET);
  afm_system_free(sys2);
  afm_potential_free(cou);
  afm_potential_free(lin);
}

TEST_CASE("duality verification and sweep through the C surface") {
  afm_potential* lin = nullptr;
  REQUIRE(afm_potential_parse("linear:a=1", &lin) == AFM_OK);
  afm_system* sys = nullptr;
  REQUIRE(afm_system_create("ur", 3, 2.0, 0.0, lin, nullptr, &sys) == AFM_OK);
  char* rep = nullptr;
  REQUIRE(afm_duality_verify("UR_1B_NP", sys, 3.0, 1e-9, "{\"p\":2}", &rep) == AFM_OK);
  json j = json::parse(take(rep));
  CHECK(j["passed"].get<bool>());
  CHECK(j["rel_residual"].get<double>() <= 1e-10);
  CHECK(j["multiplier"].get<double>() == doctest::Approx(1.5));
  afm_system_free(sys);
  afm_potential_free(lin);

  char* sweep = nullptr;
  REQUIRE(afm_duality_sweep(9, 2, 1e-9, 2, &sweep) == AFM_OK);
  json s = json::parse(take(sweep));
  CHECK(s["failures"].get<int>() == 0);
  CHECK(s["checks"].get<int>() == 2 * 3 * 28);
}

TEST_CASE("exact solvers and prediction through the C surface") {
  afm_potential* cou = nullptr;
  REQUIRE(afm_potential_parse("coulomb:a=1", &cou) == AFM_OK);
  double e = 0;
  REQUIRE(afm_exact2b(1.0, cou, 0, 0, 0, &e) == AFM_OK);
  CHECK(e == doctest::Approx(-0.25).epsilon(1e-8));
  afm_potential_free(cou);

  afm_potential* lin = nullptr;
  REQUIRE(afm_potential_parse("linear:a=1", &lin) == AFM_OK);
  double q = 0;
  int labels[2] = {1, 0};
  REQUIRE(afm_q_eval("improved2b", 2, labels, 1, &q) == AFM_OK);
  CHECK(q == doctest::Approx(3.164));
  double pred = 0;
  REQUIRE(afm_predict("two_body_f", 4.0, labels, 1, "improved2b", 2, lin, &pred) == AFM_OK);
  CHECK(pred == doctest::Approx(2.567).epsilon(1e-3));
  afm_potential_free(lin);
}

TEST_CASE("bridge verification through the C surface") {
  afm_potential* quad = nullptr;
  REQUIRE(afm_potential_parse("quadratic:k=1", &quad) == AFM_OK);
  char* rep = nullptr;
  REQUIRE(afm_bridge_verify(quad, "one", 3, 1.7, 2.5, 1e-9, &rep) == AFM_OK);
  json j = json::parse(take(rep));
  CHECK(j["passed"].get<bool>());
  afm_potential_free(quad);
}

TEST_CASE("null arguments are rejected, not crashed on") {
  CHECK(afm_potential_parse(nullptr, nullptr) == AFM_ERR_INVALID);
  double v;
  CHECK(afm_potential_eval(nullptr, 1.0, &v) == AFM_ERR_INVALID);
  CHECK(afm_solve(nullptr, 1.0, nullptr) == AFM_ERR_INVALID);
}
