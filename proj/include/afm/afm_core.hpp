#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "afm/potentials.hpp"

namespace afm {

enum class Kinematics { general_sr, ultrarelativistic, nonrelativistic, sigma_sr };

Kinematics parse_kinematics(std::string_view text);  // nr|ur|sr|sigma

/// System under study. For sigma_sr the Hamiltonian is
/// sigma*sqrt(p^2+m^2) + V(r) and N is unused; for the N-body flavors both a
/// one-body U and a two-body V may be present.
struct SystemSpec {
  Kinematics flavor = Kinematics::nonrelativistic;
  int N = 2;
  double sigma = 2.0;  // sigma_sr only
  double m = 1.0;      // 0 required for ultrarelativistic; >= 0 for sigma_sr; > 0 otherwise
  std::optional<PotentialSpec> one_body;
  std::optional<PotentialSpec> two_body;

  void validate() const;
  double pairs() const { return 0.5 * N * (N - 1); }  // C_N
};

struct AFMSolution {
  double x0 = 0;  // root of the transcendental equation
  std::optional<double> r0_onebody;
  std::optional<double> r0_twobody;
  double value = 0;  // mass M, or binding energy E for the nonrelativistic flavor
  int iterations = 0;
  double residual = 0;
};

/// Solves the flavor's transcendental equation and evaluates the AFM
/// energy/mass. Root finding: geometric bracket scan from x=1 over
/// [1e-12, 1e12], then bisection-safeguarded secant to 1e-12 relative.
AFMSolution solve_afm(const SystemSpec& spec, double Q);

/// C(x): inverse of r^2 p'(r); F(x) = x/C(x) + p(C(x)).
double universal_C(const PotentialSpec& p, double x);
double universal_F(const PotentialSpec& p, double x);
/// D(x): inverse of r^3 p'(r); G(x) = x/(2 D(x)^2) + p(D(x)).
double universal_D(const PotentialSpec& p, double x);
double universal_G(const PotentialSpec& p, double x);

/// Ultrarelativistic mass through the reduced one-function form; the free
/// parameter a > 0 must not change the result.
double compact_ur(const SystemSpec& spec, double Q, double a);
/// Nonrelativistic binding energy, same construction.
double compact_nr(const SystemSpec& spec, double Q, double a);

/// Closed form for power-law potentials (both potentials, when present,
/// share the exponent). Nonrelativistic -> binding energy, ultrarelativistic
/// -> mass.
double closed_powerlaw(const SystemSpec& spec, double Q);

namespace detail {

struct RootResult {
  double x = 0;
  int iterations = 0;
};

/// Bracketed root finder used by all AFM solves: geometric scan by factor 10
/// over [lo, hi] to find a sign change, then secant with bisection safeguard
/// to `reltol` relative accuracy on x.
template <class F>
RootResult bracket_root(F&& f, double lo = 1e-12, double hi = 1e12, double reltol = 1e-12,
                        int maxit = 200) {
  double xa = 0, xb = 0, fa = 0, fb = 0;
  bool found = false;
  double xprev = 0, fprev = 0;
  bool have_prev = false;
  for (double x = lo; x <= hi * 1.000001 && !found; x *= 10.0) {
    double fx = f(x);
    if (!std::isfinite(fx)) {
      have_prev = false;
      continue;
    }
    if (have_prev) {
      if (fx == 0 && fprev != 0) return {x, 0};
      if (fprev == 0 && fx != 0) return {xprev, 0};
      if ((fprev < 0 && fx > 0) || (fprev > 0 && fx < 0)) {
        xa = xprev;
        xb = x;
        fa = fprev;
        fb = fx;
        found = true;
        break;
      }
    } else if (fx == 0 && x > lo) {
      return {x, 0};
    }
    xprev = x;
    fprev = fx;
    have_prev = true;
  }
  if (!found) throw_error(ErrorCode::no_bracket, "bracket_root: no sign change in [1e-12, 1e12]");

  // Illinois-damped false position: superlinear near the root, and both
  // endpoints keep moving so the bracket width is a usable stop criterion.
  int it = 0;
  int side = 0;  // which endpoint was retained last (-1 left, +1 right)
  double x0 = 0.5 * (xa + xb);
  while (it < maxit) {
    ++it;
    double xs = (fb != fa) ? (xa * fb - xb * fa) / (fb - fa) : 0.5 * (xa + xb);
    if (!(xs > xa && xs < xb)) xs = 0.5 * (xa + xb);
    double fs = f(xs);
    if (!std::isfinite(fs)) {
      xs = 0.5 * (xa + xb);
      fs = f(xs);
    }
    x0 = xs;
    if (fs == 0) break;
    if ((fa < 0) == (fs < 0)) {
      xa = xs;
      fa = fs;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      xb = xs;
      fb = fs;
      if (side == +1) fa *= 0.5;
      side = +1;
    }
    if (xb - xa <= reltol * std::max(std::abs(xa), std::abs(xb))) {
      x0 = std::abs(fa) < std::abs(fb) ? xa : xb;
      break;
    }
  }
  if (it >= maxit) throw_error(ErrorCode::no_convergence, "bracket_root: no convergence in 200 iterations");
  return {x0, it};
}

}  // namespace detail

}  // namespace afm
