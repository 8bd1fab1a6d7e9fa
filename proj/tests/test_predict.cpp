#include <doctest.h>

#include <cmath>
#include <numbers>

#include "afm/exact/predict.hpp"

using namespace afm;
using namespace afm::exact;

namespace {
StateLabels mk(std::vector<std::pair<int, int>> v) { return StateLabels(std::move(v)); }
}  // namespace

TEST_CASE("effective masses") {
  auto ho2 = preset(QPreset::ho, 2);
  CHECK(effective_mass(EffMassKind::two_body, 4.0, mk({{1, 0}}), ho2, 2) ==
        doctest::Approx(4.0 * std::pow(1.5 / 3.5, 2)).epsilon(1e-12));

  auto wkb = preset(QPreset::wkb3b, 3);
  double q = std::numbers::pi / std::sqrt(3.0) + 3.0;
  CHECK(effective_mass(EffMassKind::n_body, 2.0, mk({{1, 0}, {0, 0}}), wkb, 3) ==
        doctest::Approx(2.0 * std::pow(3.0 / q, 2)).epsilon(1e-12));

  auto ho3 = preset(QPreset::ho, 3);
  CHECK(effective_mass(EffMassKind::big_M, 2.0, mk({{0, 0}, {0, 0}}), ho3, 3) ==
        doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(effective_mass(EffMassKind::two_body, 4.0, mk({{0, 0}, {0, 0}}), ho2, 2), Error);
}

TEST_CASE("two-body predictions against the published spectrum") {
  auto lin = PotentialSpec::make_linear(1.0);
  auto imp = preset(QPreset::improved2b, 2);
  double p10 = predict_spectrum(PredictMode::two_body_f, 4.0, mk({{1, 0}}), imp, 2, lin);
  CHECK(p10 == doctest::Approx(2.567).epsilon(1e-3));
  auto ho = preset(QPreset::ho, 2);
  double h01 = predict_spectrum(PredictMode::two_body_f, 4.0, mk({{0, 1}}), ho, 2, lin);
  CHECK(h01 == doctest::Approx(2.071).epsilon(1e-3));
}

TEST_CASE("ground-state link") {
  auto lin = PotentialSpec::make_linear(1.0);
  auto ho3 = preset(QPreset::ho, 3);
  double v = predict_spectrum(PredictMode::gs_link, 2.0, mk({{0, 0}, {0, 0}}), ho3, 3, lin);
  // 3 f(3) with the Airy closed form
  double airy = 3.0 * 2.338107410459767 / std::pow(3.0, 1.0 / 3.0);
  CHECK(v == doctest::Approx(airy).epsilon(1e-6));
}

TEST_CASE("n-body prediction through the big-M mass") {
  auto lin = PotentialSpec::make_linear(1.0);
  auto ho3 = preset(QPreset::ho, 3);
  double v = predict_spectrum(PredictMode::n_body_via_f, 2.0, mk({{0, 0}, {0, 0}}), ho3, 3, lin);
  // at the ground state big_M = N m / 2, so this equals the gs link
  double link = predict_spectrum(PredictMode::gs_link, 2.0, mk({{0, 0}, {0, 0}}), ho3, 3, lin);
  CHECK(v == doctest::Approx(link).epsilon(1e-12));
}

TEST_CASE("three-body ground predictor (coarse basis)") {
  auto lin = PotentialSpec::make_linear(1.0);
  auto wkb = preset(QPreset::wkb3b, 3);
  PredictConfig cfg;
  cfg.three_body.Bmax = 14;
  double v = predict_spectrum(PredictMode::n_body_gs, 2.0, mk({{1, 0}, {0, 0}}), wkb, 3, lin, cfg);
  CHECK(v == doctest::Approx(6.671).epsilon(2e-3));
  CHECK_THROWS_AS(
      predict_spectrum(PredictMode::n_body_gs, 2.0, mk({{0, 0}, {0, 0}, {0, 0}}), preset(QPreset::ho, 4), 4,
                       lin, cfg),
      Error);
}
