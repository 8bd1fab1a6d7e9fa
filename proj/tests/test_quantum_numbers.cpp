#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "afm/quantum_numbers.hpp"

using namespace afm;
using std::numbers::pi;

namespace {
StateLabels mk(std::vector<std::pair<int, int>> v) { return StateLabels(std::move(v)); }
}  // namespace

TEST_CASE("harmonic-oscillator principal quantum number") {
  CHECK(q_ho(mk({{0, 0}})) == doctest::Approx(1.5));
  CHECK(q_ho(mk({{1, 0}})) == doctest::Approx(3.5));
  CHECK(q_ho(mk({{0, 0}, {0, 0}})) == doctest::Approx(3.0));
  CHECK(q_ho(mk({{2, 1}})) == doctest::Approx(6.5));
}

TEST_CASE("custom prescriptions from the published coefficient sets") {
  auto imp = preset(QPreset::improved2b, 2);
  CHECK(q_custom(imp, mk({{1, 0}})) == doctest::Approx(3.164));
  CHECK(q_custom(imp, mk({{0, 0}})) == doctest::Approx(1.375));

  auto wkb = preset(QPreset::wkb3b, 3);
  CHECK(q_custom(wkb, mk({{1, 0}, {0, 0}})) == doctest::Approx(pi / std::sqrt(3.0) + 3.0));

  auto ur2 = preset(QPreset::ur2b, 2);
  CHECK(q_custom(ur2, mk({{0, 0}})) == doctest::Approx(4.0 / pi));

  auto ur3 = preset(QPreset::ur3b, 3);
  CHECK(q_custom(ur3, mk({{0, 0}, {0, 0}})) == doctest::Approx(3.0));
}

TEST_CASE("ho preset reproduces q_ho for random labels") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int nc = 1 + d(rng) % 4;
    std::vector<std::pair<int, int>> v;
    for (int i = 0; i < nc; ++i) v.push_back({d(rng), d(rng)});
    StateLabels st(v);
    CHECK(q_custom(preset(QPreset::ho, nc + 1), st) == doctest::Approx(q_ho(st)).epsilon(1e-14));
  }
}

TEST_CASE("Q is affine in the labels") {
  auto p = preset(QPreset::wkb3b, 3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<int, int>> a, b, sum;
    for (int i = 0; i < 2; ++i) {
      a.push_back({d(rng), d(rng)});
      b.push_back({d(rng), d(rng)});
      sum.push_back({a[i].first + b[i].first, a[i].second + b[i].second});
    }
    double lhs = q_custom(p, StateLabels(sum)) - p.gamma;
    double rhs = (q_custom(p, StateLabels(a)) - p.gamma) + (q_custom(p, StateLabels(b)) - p.gamma);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(mk({}), Error);
  CHECK_THROWS_AS(mk({{-1, 0}}), Error);
  CHECK_THROWS_AS(q_custom(preset(QPreset::ho, 2), mk({{0, 0}, {0, 0}})), Error);
  CHECK_THROWS_AS(preset(QPreset::improved2b, 3), Error);
  CHECK_THROWS_AS(preset(QPreset::wkb3b, 2), Error);
  CHECK_THROWS_AS(parse_preset("nope"), Error);
}

TEST_CASE("prescription parsing") {
  auto p = parse_prescription("custom:alpha=1.789,beta=1,gamma=1.375", 2);
  CHECK(q_custom(p, mk({{1, 0}})) == doctest::Approx(3.164));
  auto q = parse_prescription("custom:alpha=2;2,beta=1;1,gamma=3", 3);
  CHECK(q_custom(q, mk({{1, 0}, {0, 1}})) == doctest::Approx(2 + 1 + 3));
  CHECK(q_custom(parse_prescription("ho", 2), mk({{2, 1}})) == doctest::Approx(6.5));
  CHECK_THROWS_AS(parse_prescription("custom:alpha=1,beta=1", 2), Error);
}
