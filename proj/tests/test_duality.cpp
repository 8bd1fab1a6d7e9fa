#include <doctest.h>

#include <cmath>

#include "afm/duality.hpp"

using namespace afm;

namespace {

SystemSpec lhs_system(Kinematics k, int N, double m, PotentialSpec pot, bool one_body) {
  SystemSpec s;
  s.flavor = k;
  s.N = N;
  s.m = m;
  if (one_body)
    s.one_body = pot;
  else
    s.two_body = pot;
  return s;
}

}  // namespace

TEST_CASE("parameter transformations from the catalog") {
  auto lin = PotentialSpec::make_linear(1.0);

  DualityRelation r1{RelationId::GEN_1B_NP, {{"p", 2}}};
  auto mp = transform_params(r1, lhs_system(Kinematics::general_sr, 3, 1.7, lin, true), 3.0);
  CHECK(mp.target.N == 2);
  CHECK(mp.target.m == doctest::Approx(1.7));
  CHECK(mp.q_target == doctest::Approx(2.0));
  CHECK(mp.multiplier == doctest::Approx(1.5));

  DualityRelation r2{RelationId::NR_SCALE, {{"beta", 2.0}}};
  auto mp2 = transform_params(r2, lhs_system(Kinematics::nonrelativistic, 3, 1.0, lin, false), 3.0);
  CHECK(mp2.target.m == doctest::Approx(4.0));
  CHECK(mp2.q_target == doctest::Approx(6.0));
  CHECK(mp2.multiplier == doctest::Approx(1.0));

  DualityRelation r3{RelationId::NR_2B_SAMEQ, {{"p", 2}}};
  auto mp3 = transform_params(r3, lhs_system(Kinematics::nonrelativistic, 3, 1.0, lin, false), 3.0);
  CHECK(mp3.target.m == doctest::Approx(6.0));
  CHECK(mp3.q_target == doctest::Approx(3.0));
  CHECK(mp3.multiplier == doctest::Approx(3.0));
}

TEST_CASE("relation catalog is complete and named") {
  CHECK(all_relations().size() == kRelationCount);
  for (RelationId id : all_relations()) CHECK(parse_relation(relation_name(id)) == id);
  CHECK_THROWS_AS(parse_relation("NOPE"), Error);
}

TEST_CASE("verification examples") {
  auto lin = PotentialSpec::make_linear(1.0);

  DualityRelation ur{RelationId::UR_1B_NP, {{"p", 2}}};
  auto rep = verify_relation(ur, lhs_system(Kinematics::ultrarelativistic, 3, 0.0, lin, true), 3.0);
  CHECK(rep.passed);
  CHECK(rep.rel_residual <= 1e-12);

  DualityRelation nr{RelationId::NR_2B_NP, {{"p", 2}}};
  auto rep2 = verify_relation(nr, lhs_system(Kinematics::nonrelativistic, 4, 1.0, lin, false), 4.5);
  CHECK(rep2.passed);
  CHECK(rep2.rel_residual <= 1e-10);

  DualityRelation link{RelationId::GEN_12_LINK, {{"c", 0.5}}};
  auto rep3 = verify_relation(link, lhs_system(Kinematics::general_sr, 3, 1.0, lin, false), 3.0);
  CHECK(rep3.passed);
  CHECK(rep3.rel_residual <= 1e-10);
}

TEST_CASE("sigma freedom") {
  auto quad = PotentialSpec::make_quadratic(0.9);
  for (double sg : {0.3, 1.0, 2.0, 4.7}) {
    DualityRelation rel{RelationId::GEN_1B_SIGMA, {{"sigma", sg}}};
    auto rep = verify_relation(rel, lhs_system(Kinematics::general_sr, 4, 1.2, quad, true), 2.5);
    CHECK(rep.passed);
    DualityRelation rel2{RelationId::GEN_2B_SIGMA, {{"sigma", sg}}};
    auto rep2 = verify_relation(rel2, lhs_system(Kinematics::general_sr, 4, 1.2, quad, false), 2.5);
    CHECK(rep2.passed);
  }
}

TEST_CASE("composition closure of the N <-> p map") {
  auto fun = PotentialSpec::make_funnel(1.0, 1.0);
  auto lhs = lhs_system(Kinematics::general_sr, 5, 1.3, fun, false);
  DualityRelation fwd{RelationId::GEN_2B_NP, {{"p", 3}}};
  auto mp = transform_params(fwd, lhs, 4.0);
  DualityRelation back{RelationId::GEN_2B_NP, {{"p", 5}}};
  auto mp2 = transform_params(back, mp.target, mp.q_target);
  double orig = solve_afm(lhs, 4.0).value;
  double roundtrip = mp.multiplier * mp2.multiplier * solve_afm(mp2.target, mp2.q_target).value;
  CHECK(roundtrip == doctest::Approx(orig).epsilon(1e-10));
  CHECK(mp2.target.m == doctest::Approx(lhs.m).epsilon(1e-12));
  CHECK(mp2.q_target == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("bridge construction and verification") {
  // one-body oscillator: W is linear with a = k Q/(2 m N), both sides exact
  auto quad = PotentialSpec::make_quadratic(1.0);
  int N = 3;
  double m = 1.7, Q = 2.5;
  auto w = bridge_build(quad, BridgeBody::one, N, m, Q);
  CHECK(w.kind() == PotentialKind::linear);
  CHECK(w.a() == doctest::Approx(Q / (2 * m * N)));
  auto rep = bridge_verify(quad, BridgeBody::one, N, m, Q);
  CHECK(rep.passed);
  CHECK(rep.lhs_value == doctest::Approx(std::sqrt(2.0 / m) * Q).epsilon(1e-11));

  auto rep2 = bridge_verify(PotentialSpec::make_linear(1.0), BridgeBody::two, 3, 2.0, 3.0);
  CHECK(rep2.rel_residual <= 1e-10);

  auto cou = PotentialSpec::make_coulomb(1.0);
  auto w3 = bridge_build(cou, BridgeBody::two, 2, 1.0, 1.5);
  CHECK(w3.kind() == PotentialKind::powerlaw);
  CHECK(w3.lambda() == doctest::Approx(-0.5));
  auto rep3 = bridge_verify(cou, BridgeBody::two, 2, 1.0, 1.5);
  CHECK(rep3.rel_residual <= 1e-10);
}

TEST_CASE("bridge potential depends on the mass but equality persists") {
  auto fun = PotentialSpec::make_funnel(1.0, 1.0);
  double Q = 3.0;
  auto wa = bridge_build(fun, BridgeBody::two, 3, 1.0, Q);
  auto wb = bridge_build(fun, BridgeBody::two, 3, 2.0, Q);
  CHECK(wa.alpha() != doctest::Approx(wb.alpha()));  // W changes with m
  CHECK(bridge_verify(fun, BridgeBody::two, 3, 1.0, Q).passed);
  CHECK(bridge_verify(fun, BridgeBody::two, 3, 2.0, Q).passed);
}

TEST_CASE("small seeded sweep has no failures") {
  SweepConfig cfg;
  cfg.seed = 42;
  cfg.count = 4;
  cfg.tol = 1e-9;
  cfg.jobs = 2;
  auto res = duality_sweep(cfg);
  CHECK(res.checks == 4 * 3 * kRelationCount);
  CHECK(res.failures == 0);
  CHECK(res.worst_rel_residual <= 1e-9);
}

TEST_CASE("sweep is deterministic and job-count independent") {
  SweepConfig a;
  a.seed = 7;
  a.count = 2;
  a.jobs = 1;
  SweepConfig b = a;
  b.jobs = 2;
  auto ra = duality_sweep(a);
  auto rb = duality_sweep(b);
  CHECK(ra.worst_rel_residual == rb.worst_rel_residual);
  CHECK(ra.checks == rb.checks);
}

TEST_CASE("error handling") {
  auto lin = PotentialSpec::make_linear(1.0);
  DualityRelation missing{RelationId::GEN_1B_NP, {}};
  CHECK_THROWS_AS(transform_params(missing, lhs_system(Kinematics::general_sr, 3, 1.0, lin, true), 3.0),
                  Error);
  DualityRelation wrongrole{RelationId::GEN_1B_NP, {{"p", 2}}};
  CHECK_THROWS_AS(
      transform_params(wrongrole, lhs_system(Kinematics::general_sr, 3, 1.0, lin, false), 3.0), Error);
  DualityRelation wrongflavor{RelationId::UR_1B_NP, {{"p", 2}}};
  CHECK_THROWS_AS(
      transform_params(wrongflavor, lhs_system(Kinematics::general_sr, 3, 1.0, lin, true), 3.0), Error);
  // verify_relation reports instead of throwing
  auto rep = verify_relation(missing, lhs_system(Kinematics::general_sr, 3, 1.0, lin, true), 3.0);
  CHECK(!rep.passed);
  CHECK(!rep.error.empty());
}
