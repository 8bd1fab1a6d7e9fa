#include "afm/afm_core.hpp"

#include <cmath>
#include <string>

namespace afm {

Kinematics parse_kinematics(std::string_view text) {
  if (text == "nr" || text == "nonrelativistic") return Kinematics::nonrelativistic;
  if (text == "ur" || text == "ultrarelativistic") return Kinematics::ultrarelativistic;
  if (text == "sr" || text == "general" || text == "general_sr") return Kinematics::general_sr;
  if (text == "sigma" || text == "sigma_sr") return Kinematics::sigma_sr;
  throw_error(ErrorCode::parse_error, "unknown kinematics '" + std::string(text) + "' (nr|ur|sr|sigma)");
}

void SystemSpec::validate() const {
  if (!one_body && !two_body) throw_error(ErrorCode::invalid_argument, "SystemSpec: at least one potential required");
  if (!std::isfinite(m) || m < 0) throw_error(ErrorCode::invalid_argument, "SystemSpec: m must be finite and >= 0");
  switch (flavor) {
    case Kinematics::ultrarelativistic:
      if (m != 0) throw_error(ErrorCode::invalid_argument, "SystemSpec: ultrarelativistic flavor requires m = 0");
      break;
    case Kinematics::general_sr:
    case Kinematics::nonrelativistic:
      if (!(m > 0)) throw_error(ErrorCode::invalid_argument, "SystemSpec: this flavor requires m > 0");
      break;
    case Kinematics::sigma_sr:
      if (!(sigma > 0)) throw_error(ErrorCode::invalid_argument, "SystemSpec: sigma must be > 0");
      if (one_body) throw_error(ErrorCode::invalid_argument, "SystemSpec: sigma_sr takes a two-body potential only");
      if (!two_body) throw_error(ErrorCode::invalid_argument, "SystemSpec: sigma_sr requires the two-body potential");
      break;
  }
  if (flavor != Kinematics::sigma_sr && N < 2)
    throw_error(ErrorCode::invalid_argument, "SystemSpec: N must be >= 2");
}

namespace {

// K(r) = U'(r)/(2r), L(r) = V'(r)/(2r), absent potential contributes zero.
double aux_fun(const std::optional<PotentialSpec>& p, double r) {
  return p ? p->deriv(r) / (2.0 * r) : 0.0;
}

double pot_val(const std::optional<PotentialSpec>& p, double r) { return p ? p->eval(r) : 0.0; }

}  // namespace

AFMSolution solve_afm(const SystemSpec& spec, double Q) {
  spec.validate();
  if (!(Q > 0)) throw_error(ErrorCode::invalid_argument, "solve_afm: Q must be > 0");
  AFMSolution sol;

  if (spec.flavor == Kinematics::sigma_sr) {
    // sigma Q = r0^2 sqrt(1 + (m r0/Q)^2) V'(r0)
    const auto& V = *spec.two_body;
    auto f = [&](double r) {
      double g = spec.m * r / Q;
      return spec.sigma * Q - r * r * std::sqrt(1.0 + g * g) * V.deriv(r);
    };
    auto rr = detail::bracket_root(f);
    double r0 = rr.x;
    double g = spec.m * r0 / Q;
    sol.x0 = 2.0 * Q / (r0 * r0);  // matches the N=2 correspondence X0 = 2Q/r0^2
    sol.r0_twobody = r0;
    sol.value = spec.sigma * Q / r0 * std::sqrt(1.0 + g * g) + V.eval(r0);
    sol.iterations = rr.iterations;
    double lhs = spec.sigma * Q;
    double rhs = r0 * r0 * std::sqrt(1.0 + g * g) * V.deriv(r0);
    sol.residual = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
    return sol;
  }

  const double N = spec.N;
  const double CN = spec.pairs();
  auto r_one = [&](double X) { return std::sqrt(Q / (N * X)); };
  auto r_two = [&](double X) { return std::sqrt(2.0 * Q / ((N - 1.0) * X)); };
  auto kl_sum = [&](double X) {
    return aux_fun(spec.one_body, r_one(X)) + N * aux_fun(spec.two_body, r_two(X));
  };

  double lhs_at = 0, rhs_at = 0;
  detail::RootResult rr;
  switch (spec.flavor) {
    case Kinematics::general_sr: {
      auto f = [&](double X) { return X * X - 2.0 * std::sqrt(spec.m * spec.m + Q / N * X) * kl_sum(X); };
      rr = detail::bracket_root(f);
      lhs_at = rr.x * rr.x;
      rhs_at = 2.0 * std::sqrt(spec.m * spec.m + Q / N * rr.x) * kl_sum(rr.x);
      sol.value = N * std::sqrt(spec.m * spec.m + Q / N * rr.x) + N * pot_val(spec.one_body, r_one(rr.x)) +
                  CN * pot_val(spec.two_body, r_two(rr.x));
      break;
    }
    case Kinematics::ultrarelativistic: {
      auto f = [&](double X) { return std::sqrt(N / Q) * std::pow(X, 1.5) - 2.0 * kl_sum(X); };
      rr = detail::bracket_root(f);
      lhs_at = std::sqrt(N / Q) * std::pow(rr.x, 1.5);
      rhs_at = 2.0 * kl_sum(rr.x);
      sol.value = std::sqrt(N * Q * rr.x) + N * pot_val(spec.one_body, r_one(rr.x)) +
                  CN * pot_val(spec.two_body, r_two(rr.x));
      break;
    }
    case Kinematics::nonrelativistic: {
      auto f = [&](double X) { return X * X - 2.0 * spec.m * kl_sum(X); };
      rr = detail::bracket_root(f);
      lhs_at = rr.x * rr.x;
      rhs_at = 2.0 * spec.m * kl_sum(rr.x);
      sol.value = Q * rr.x / (2.0 * spec.m) + N * pot_val(spec.one_body, r_one(rr.x)) +
                  CN * pot_val(spec.two_body, r_two(rr.x));
      break;
    }
    default:
      throw_error(ErrorCode::invalid_argument, "solve_afm: bad flavor");
  }
  sol.x0 = rr.x;
  sol.iterations = rr.iterations;
  sol.residual = std::abs(lhs_at - rhs_at) / std::max(std::abs(lhs_at), std::abs(rhs_at));
  if (spec.one_body) sol.r0_onebody = r_one(rr.x);
  if (spec.two_body) sol.r0_twobody = r_two(rr.x);
  return sol;
}

namespace {

// Inverse of w(r) = r^power * p'(r) at x, with a monotonicity check along the
// scan grid.
double invert_monotone(const PotentialSpec& p, int power, double x) {
  if (!(x > 0)) throw_error(ErrorCode::invalid_argument, "universal function: argument must be > 0");
  auto w = [&](double r) { return std::pow(r, power) * p.deriv(r); };
  double prev = 0;
  bool have_prev = false;
  for (double r = 1e-12; r <= 1e12 * 1.000001; r *= 10.0) {
    double v = w(r);
    if (!std::isfinite(v)) {
      have_prev = false;
      continue;
    }
    if (have_prev && !(v > prev))
      throw_error(ErrorCode::non_monotone, "universal function: r^" + std::to_string(power) +
                                               " p'(r) is not strictly increasing");
    prev = v;
    have_prev = true;
  }
  auto f = [&](double r) { return w(r) - x; };
  return detail::bracket_root(f).x;
}

}  // namespace

double universal_C(const PotentialSpec& p, double x) { return invert_monotone(p, 2, x); }

double universal_F(const PotentialSpec& p, double x) {
  double c = universal_C(p, x);
  return x / c + p.eval(c);
}

double universal_D(const PotentialSpec& p, double x) { return invert_monotone(p, 3, x); }

double universal_G(const PotentialSpec& p, double x) {
  double d = universal_D(p, x);
  return x / (2.0 * d * d) + p.eval(d);
}

namespace {

struct ReducedZ {
  // Z(y) = W(y) + Y(y) with U(x/sqrt(aN)) = C_N W(x), V(sqrt(2/(a(N-1))) x) = N Y(x)
  const SystemSpec& spec;
  double a;
  double su;  // 1/sqrt(aN)
  double sv;  // sqrt(2/(a(N-1)))

  ReducedZ(const SystemSpec& s, double a_) : spec(s), a(a_) {
    if (!(a > 0)) throw_error(ErrorCode::invalid_argument, "compact form: free parameter a must be > 0");
    su = 1.0 / std::sqrt(a * spec.N);
    sv = std::sqrt(2.0 / (a * (spec.N - 1.0)));
  }
  double val(double y) const {
    double CN = spec.pairs();
    double z = 0;
    if (spec.one_body) z += spec.one_body->eval(su * y) / CN;
    if (spec.two_body) z += spec.two_body->eval(sv * y) / spec.N;
    return z;
  }
  double der(double y) const {
    double CN = spec.pairs();
    double z = 0;
    if (spec.one_body) z += su * spec.one_body->deriv(su * y) / CN;
    if (spec.two_body) z += sv * spec.two_body->deriv(sv * y) / spec.N;
    return z;
  }
};

}  // namespace

double compact_ur(const SystemSpec& spec, double Q, double a) {
  spec.validate();
  if (spec.flavor != Kinematics::ultrarelativistic)
    throw_error(ErrorCode::invalid_argument, "compact_ur: flavor must be ultrarelativistic");
  ReducedZ z(spec, a);
  const double CN = spec.pairs();
  const double xarg = std::sqrt(a * spec.N) * Q / (spec.N * CN);
  auto f = [&](double y) { return y * y * z.der(y) - xarg; };
  double y = detail::bracket_root(f).x;
  return spec.N * CN * (xarg / y + z.val(y));
}

double compact_nr(const SystemSpec& spec, double Q, double a) {
  spec.validate();
  if (spec.flavor != Kinematics::nonrelativistic)
    throw_error(ErrorCode::invalid_argument, "compact_nr: flavor must be nonrelativistic");
  ReducedZ z(spec, a);
  const double CN = spec.pairs();
  const double xarg = a * Q * Q / (spec.m * spec.N * CN);
  auto f = [&](double y) { return y * y * y * z.der(y) - xarg; };
  double y = detail::bracket_root(f).x;
  return spec.N * CN * (xarg / (2.0 * y * y) + z.val(y));
}

double closed_powerlaw(const SystemSpec& spec, double Q) {
  spec.validate();
  if (!(Q > 0)) throw_error(ErrorCode::invalid_argument, "closed_powerlaw: Q must be > 0");
  if (spec.flavor != Kinematics::nonrelativistic && spec.flavor != Kinematics::ultrarelativistic)
    throw_error(ErrorCode::invalid_argument, "closed_powerlaw: flavor must be nr or ur");
  double a = 0, b = 0, lambda = 0;
  bool have = false;
  auto grab = [&](const std::optional<PotentialSpec>& p, double& coeff) {
    if (!p) return;
    double lam, c;
    switch (p->kind()) {
      case PotentialKind::linear:
        lam = 1.0;
        c = p->a();
        break;
      case PotentialKind::quadratic:
        lam = 2.0;
        c = p->k();
        break;
      case PotentialKind::coulomb:
        lam = -1.0;
        c = p->a();
        break;
      case PotentialKind::powerlaw:
        lam = p->lambda();
        c = p->a();
        break;
      default:
        throw_error(ErrorCode::invalid_argument, "closed_powerlaw: potentials must be power laws");
    }
    if (have && lam != lambda)
      throw_error(ErrorCode::invalid_argument, "closed_powerlaw: exponents of U and V differ");
    lambda = lam;
    coeff = c;
    have = true;
  };
  grab(spec.one_body, a);
  grab(spec.two_body, b);
  if (!have) throw_error(ErrorCode::invalid_argument, "closed_powerlaw: no potential");

  const double N = spec.N;
  const double al = std::abs(lambda);
  const double Al = a * al * std::pow(N / Q, (2.0 - lambda) / 2.0);
  const double Bl = b * al * N * std::pow((N - 1.0) / (2.0 * Q), (2.0 - lambda) / 2.0);
  const double AB = Al + Bl;
  if (spec.flavor == Kinematics::nonrelativistic)
    return (lambda + 2.0) / (2.0 * lambda) * Q * std::pow(AB * AB / std::pow(spec.m, lambda), 1.0 / (lambda + 2.0));
  return (lambda + 1.0) / lambda *
         std::pow(std::pow(Q, lambda + 2.0) * std::pow(N, lambda) * AB * AB, 1.0 / (2.0 * (lambda + 1.0)));
}

}  // namespace afm
