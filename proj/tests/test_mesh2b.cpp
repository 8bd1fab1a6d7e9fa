#include <doctest.h>

#include <cmath>

#include "afm/exact/mesh2b.hpp"

using namespace afm;
using namespace afm::exact;

namespace {
// first zeros of the Airy function Ai (magnitudes)
constexpr double kAiry[4] = {2.338107410459767, 4.087949444130971, 5.520559828095551,
                             6.786708090071759};
}  // namespace

TEST_CASE("hydrogen-like spectrum: H = p^2/m - 1/r") {
  auto cou = PotentialSpec::make_coulomb(1.0);
  // mu = 1/2: E_n = -1/(4 (n+l+1)^2)
  CHECK(solve_radial_2b(1.0, cou, 0, 0) == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(solve_radial_2b(1.0, cou, 1, 0) == doctest::Approx(-0.0625).epsilon(1e-8));
  CHECK(solve_radial_2b(1.0, cou, 0, 1) == doctest::Approx(-0.0625).epsilon(1e-8));
}

TEST_CASE("oscillator: H = p^2/m + r^2 gives (2n + l + 3/2) 2/sqrt(m)") {
  auto quad = PotentialSpec::make_quadratic(1.0);
  for (double m : {1.0, 4.0}) {
    CHECK(solve_radial_2b(m, quad, 0, 0) == doctest::Approx(3.0 / std::sqrt(m)).epsilon(1e-10));
    CHECK(solve_radial_2b(m, quad, 1, 2) == doctest::Approx(5.5 * 2.0 / std::sqrt(m)).epsilon(1e-10));
  }
}

TEST_CASE("linear potential l = 0 levels are Airy zeros") {
  auto lin = PotentialSpec::make_linear(1.0);
  const double m = 4.0;
  for (int n = 0; n < 4; ++n) {
    double exact = kAiry[n] * std::pow(1.0 / m, 1.0 / 3.0);
    CHECK(solve_radial_2b(m, lin, n, 0) == doctest::Approx(exact).epsilon(1e-8));
  }
  // published 3-digit values
  CHECK(solve_radial_2b(m, lin, 0, 0) == doctest::Approx(1.473).epsilon(7e-4));
  CHECK(solve_radial_2b(m, lin, 1, 0) == doctest::Approx(2.575).epsilon(4e-4));
  CHECK(solve_radial_2b(m, lin, 0, 1) == doctest::Approx(2.117).epsilon(5e-4));
  CHECK(solve_radial_2b(m, lin, 0, 3) == doctest::Approx(3.182).epsilon(4e-4));
}

TEST_CASE("scaling: E m^(1/3) is mass independent for the linear potential") {
  auto lin = PotentialSpec::make_linear(1.0);
  double ref = solve_radial_2b(1.0, lin, 0, 0);
  for (double m : {0.25, 2.0, 16.0}) {
    double e = solve_radial_2b(m, lin, 0, 0);
    CHECK(e * std::pow(m, 1.0 / 3.0) == doctest::Approx(ref).epsilon(1e-6));
  }
}

TEST_CASE("universal f(m)") {
  auto lin = PotentialSpec::make_linear(1.0);
  for (double m : {0.25, 1.0, 4.0, 16.0}) {
    double expected = 2.33811 * std::pow(m, -1.0 / 3.0);
    CHECK(std::abs(universal_f_fn(lin, m) - expected) / expected <= 1e-5);
  }
  auto quad = PotentialSpec::make_quadratic(1.0);
  CHECK(universal_f_fn(quad, 2.5) == doctest::Approx(3.0 / std::sqrt(2.5)).epsilon(1e-10));
}

TEST_CASE("convergence guard reports both mesh values") {
  auto lin = PotentialSpec::make_linear(1.0);
  MeshConfig cfg;
  cfg.points = 20;
  cfg.scale = 1e-4;  // absurd scale: the doubled mesh disagrees
  try {
    (void)solve_radial_2b(1.0, lin, 0, 0, cfg);
    FAIL("expected convergence failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_convergence);
    CHECK(std::string(e.what()).find("vs") != std::string::npos);
  }
}

TEST_CASE("funnel and sqrtwell run through the same mesh") {
  auto fun = PotentialSpec::make_funnel(1.0, 1.0);
  double e = solve_radial_2b(2.0, fun, 0, 0);
  CHECK(std::isfinite(e));
  // virial-style sanity: energy between pure coulomb and pure linear pieces
  double ec = solve_radial_2b(2.0, PotentialSpec::make_coulomb(1.0), 0, 0);
  double el = solve_radial_2b(2.0, PotentialSpec::make_linear(1.0), 0, 0);
  CHECK(e > ec);
  CHECK(e < el + 0.5);  // coulomb tail lowers the linear level
  CHECK(std::isfinite(solve_radial_2b(1.0, PotentialSpec::make_sqrtwell(1.0), 0, 0)));
}
