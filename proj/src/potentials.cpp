#include "afm/potentials.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace afm {

namespace {

double sgn(double x) { return x < 0 ? -1.0 : 1.0; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw_error(ErrorCode::invalid_argument, msg);
}

}  // namespace

PotentialSpec PotentialSpec::make_linear(double a) {
  require(a > 0, "linear: a must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::linear;
  p.a_ = a;
  return p;
}

PotentialSpec PotentialSpec::make_quadratic(double k) {
  require(k > 0, "quadratic: k must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::quadratic;
  p.k_ = k;
  return p;
}

PotentialSpec PotentialSpec::make_coulomb(double a) {
  require(a > 0, "coulomb: a must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::coulomb;
  p.a_ = a;
  return p;
}

PotentialSpec PotentialSpec::make_powerlaw(double a, double lambda) {
  require(a > 0, "powerlaw: a must be > 0");
  require(lambda >= -1.0 && lambda <= 2.0 && lambda != 0.0,
          "powerlaw: lambda must lie in [-1,2] and be nonzero");
  PotentialSpec p;
  p.kind_ = PotentialKind::powerlaw;
  p.a_ = a;
  p.lambda_ = lambda;
  return p;
}

PotentialSpec PotentialSpec::make_funnel(double a, double b) {
  require(a > 0 && b > 0, "funnel: a and b must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::funnel;
  p.a_ = a;
  p.b_ = b;
  return p;
}

PotentialSpec PotentialSpec::make_sqrtwell(double a) {
  require(a >= 0, "sqrtwell: a must be >= 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::sqrtwell;
  p.a_ = a;
  return p;
}

PotentialSpec PotentialSpec::make_sqrt_transformed(PotentialSpec inner, double alpha) {
  require(alpha > 0, "sqrt_transformed: alpha must be > 0");
  PotentialSpec p;
  p.kind_ = PotentialKind::sqrt_transformed;
  p.alpha_ = alpha;
  p.inner_ = std::make_shared<PotentialSpec>(std::move(inner));
  return p;
}

const PotentialSpec& PotentialSpec::inner() const {
  if (!inner_) throw_error(ErrorCode::invalid_argument, "potential has no inner spec");
  return *inner_;
}

bool PotentialSpec::finite_at_origin() const {
  switch (kind_) {
    case PotentialKind::linear:
    case PotentialKind::quadratic:
    case PotentialKind::sqrtwell:
      return true;
    default:
      return false;
  }
}

void PotentialSpec::check_radius(double r) const {
  if (r < 0 || !std::isfinite(r)) throw_error(ErrorCode::domain_error, "potential: r must be >= 0 and finite");
  if (r == 0 && !finite_at_origin())
    throw_error(ErrorCode::domain_error, "potential: r = 0 not allowed for this kind");
}

double PotentialSpec::eval(double r) const {
  check_radius(r);
  switch (kind_) {
    case PotentialKind::linear:
      return a_ * r;
    case PotentialKind::quadratic:
      return k_ * r * r;
    case PotentialKind::coulomb:
      return -a_ / r;
    case PotentialKind::powerlaw:
      return sgn(lambda_) * a_ * std::pow(r, lambda_);
    case PotentialKind::funnel:
      return -a_ / r + b_ * r;
    case PotentialKind::sqrtwell:
      return std::sqrt(r * r + a_);
    case PotentialKind::sqrt_transformed:
      return inner_->eval(alpha_ * std::sqrt(r));
  }
  throw_error(ErrorCode::invalid_argument, "unknown potential kind");
}

double PotentialSpec::deriv(double r) const {
  if (r <= 0 || !std::isfinite(r)) throw_error(ErrorCode::domain_error, "potential deriv: r must be > 0 and finite");
  switch (kind_) {
    case PotentialKind::linear:
      return a_;
    case PotentialKind::quadratic:
      return 2.0 * k_ * r;
    case PotentialKind::coulomb:
      return a_ / (r * r);
    case PotentialKind::powerlaw:
      return sgn(lambda_) * a_ * lambda_ * std::pow(r, lambda_ - 1.0);
    case PotentialKind::funnel:
      return a_ / (r * r) + b_;
    case PotentialKind::sqrtwell:
      return r / std::sqrt(r * r + a_);
    case PotentialKind::sqrt_transformed: {
      double s = std::sqrt(r);
      return alpha_ / (2.0 * s) * inner_->deriv(alpha_ * s);
    }
  }
  throw_error(ErrorCode::invalid_argument, "unknown potential kind");
}

bool PotentialSpec::operator==(const PotentialSpec& o) const {
  if (kind_ != o.kind_) return false;
  if (a_ != o.a_ || b_ != o.b_ || k_ != o.k_ || lambda_ != o.lambda_ || alpha_ != o.alpha_) return false;
  if (bool(inner_) != bool(o.inner_)) return false;
  return !inner_ || *inner_ == *o.inner_;
}

PotentialSpec sqrt_transform(const PotentialSpec& p, double alpha) {
  if (!(alpha > 0)) throw_error(ErrorCode::invalid_argument, "sqrt_transform: alpha must be > 0");
  // p(alpha sqrt(r)) for the pure power members collapses analytically.
  switch (p.kind()) {
    case PotentialKind::linear:
      // a * alpha * r^(1/2)
      return PotentialSpec::make_powerlaw(p.a() * alpha, 0.5);
    case PotentialKind::quadratic:
      // k alpha^2 r
      return PotentialSpec::make_linear(p.k() * alpha * alpha);
    case PotentialKind::coulomb:
      // -(a/alpha) r^(-1/2)
      return PotentialSpec::make_powerlaw(p.a() / alpha, -0.5);
    case PotentialKind::powerlaw:
      return PotentialSpec::make_powerlaw(p.a() * std::pow(alpha, p.lambda()), p.lambda() / 2.0);
    default:
      return PotentialSpec::make_sqrt_transformed(p, alpha);
  }
}

PotentialSpec scale_coefficients(const PotentialSpec& p, double c) {
  if (!(c > 0)) throw_error(ErrorCode::invalid_argument, "scale_coefficients: c must be > 0");
  switch (p.kind()) {
    case PotentialKind::linear:
      return PotentialSpec::make_linear(c * p.a());
    case PotentialKind::quadratic:
      return PotentialSpec::make_quadratic(c * p.k());
    case PotentialKind::coulomb:
      return PotentialSpec::make_coulomb(c * p.a());
    case PotentialKind::powerlaw:
      return PotentialSpec::make_powerlaw(c * p.a(), p.lambda());
    case PotentialKind::funnel:
      return PotentialSpec::make_funnel(c * p.a(), c * p.b());
    default:
      throw_error(ErrorCode::unsupported, "scale_coefficients: kind not closed under a prefactor");
  }
}

PotentialSpec two_body_equivalent(const PotentialSpec& u) {
  // V(r) = 2 U(r/2)
  switch (u.kind()) {
    case PotentialKind::linear:
      return u;
    case PotentialKind::quadratic:
      return PotentialSpec::make_quadratic(u.k() / 2.0);
    case PotentialKind::coulomb:
      return PotentialSpec::make_coulomb(4.0 * u.a());
    case PotentialKind::powerlaw:
      return PotentialSpec::make_powerlaw(u.a() * std::pow(2.0, 1.0 - u.lambda()), u.lambda());
    case PotentialKind::funnel:
      return PotentialSpec::make_funnel(4.0 * u.a(), u.b());
    case PotentialKind::sqrtwell:
      return PotentialSpec::make_sqrtwell(4.0 * u.a());
    default:
      throw_error(ErrorCode::unsupported, "two_body_equivalent: unsupported for sqrt_transformed");
  }
}

namespace {

struct Parsed {
  std::string kind;
  std::map<std::string, double> nums;
  std::string inner;
};

Parsed split_spec(std::string_view text) {
  Parsed out;
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw_error(ErrorCode::parse_error, "potential: expected 'kind:key=value[,...]' in '" + std::string(text) + "'");
  out.kind = std::string(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    auto eq = rest.find('=', pos);
    if (eq == std::string_view::npos)
      throw_error(ErrorCode::parse_error, "potential: expected key=value at position " + std::to_string(pos));
    std::string key(rest.substr(pos, eq - pos));
    size_t vstart = eq + 1;
    size_t vend;
    if (vstart < rest.size() && rest[vstart] == '(') {
      int depth = 0;
      vend = vstart;
      for (; vend < rest.size(); ++vend) {
        if (rest[vend] == '(') depth++;
        if (rest[vend] == ')' && --depth == 0) break;
      }
      if (depth != 0) throw_error(ErrorCode::parse_error, "potential: unbalanced parentheses");
      out.inner = std::string(rest.substr(vstart + 1, vend - vstart - 1));
      if (key != "inner") throw_error(ErrorCode::parse_error, "potential: parenthesized value only valid for 'inner'");
      vend++;
    } else {
      vend = rest.find(',', vstart);
      if (vend == std::string_view::npos) vend = rest.size();
      std::string val(rest.substr(vstart, vend - vstart));
      char* endp = nullptr;
      double x = std::strtod(val.c_str(), &endp);
      if (endp == val.c_str() || *endp != '\0')
        throw_error(ErrorCode::parse_error, "potential: bad numeric value '" + val + "' for key '" + key + "'");
      out.nums[key] = x;
    }
    pos = vend;
    if (pos < rest.size()) {
      if (rest[pos] != ',')
        throw_error(ErrorCode::parse_error, "potential: expected ',' at position " + std::to_string(pos));
      pos++;
    }
  }
  return out;
}

double take(Parsed& p, const std::string& key) {
  auto it = p.nums.find(key);
  if (it == p.nums.end())
    throw_error(ErrorCode::parse_error, "potential " + p.kind + ": missing parameter '" + key + "'");
  double v = it->second;
  p.nums.erase(it);
  return v;
}

void expect_drained(const Parsed& p) {
  if (!p.nums.empty())
    throw_error(ErrorCode::parse_error, "potential " + p.kind + ": unknown parameter '" + p.nums.begin()->first + "'");
}

}  // namespace

PotentialSpec parse_potential(std::string_view text) {
  Parsed ps = split_spec(text);
  auto finish = [&](PotentialSpec out) {
    expect_drained(ps);
    return out;
  };
  if (ps.kind == "linear") return finish(PotentialSpec::make_linear(take(ps, "a")));
  if (ps.kind == "quadratic") return finish(PotentialSpec::make_quadratic(take(ps, "k")));
  if (ps.kind == "coulomb") return finish(PotentialSpec::make_coulomb(take(ps, "a")));
  if (ps.kind == "powerlaw") {
    double a = take(ps, "a");
    return finish(PotentialSpec::make_powerlaw(a, take(ps, "lambda")));
  }
  if (ps.kind == "funnel") {
    double a = take(ps, "a");
    return finish(PotentialSpec::make_funnel(a, take(ps, "b")));
  }
  if (ps.kind == "sqrtwell") return finish(PotentialSpec::make_sqrtwell(take(ps, "a")));
  if (ps.kind == "sqrt_transformed") {
    double alpha = take(ps, "alpha");
    if (ps.inner.empty()) throw_error(ErrorCode::parse_error, "sqrt_transformed: missing inner=(...)");
    return finish(PotentialSpec::make_sqrt_transformed(parse_potential(ps.inner), alpha));
  }
  throw_error(ErrorCode::parse_error, "potential: unknown kind '" + ps.kind + "'");
}

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string format_potential(const PotentialSpec& p) {
  switch (p.kind()) {
    case PotentialKind::linear:
      return "linear:a=" + fmt_num(p.a());
    case PotentialKind::quadratic:
      return "quadratic:k=" + fmt_num(p.k());
    case PotentialKind::coulomb:
      return "coulomb:a=" + fmt_num(p.a());
    case PotentialKind::powerlaw:
      return "powerlaw:a=" + fmt_num(p.a()) + ",lambda=" + fmt_num(p.lambda());
    case PotentialKind::funnel:
      return "funnel:a=" + fmt_num(p.a()) + ",b=" + fmt_num(p.b());
    case PotentialKind::sqrtwell:
      return "sqrtwell:a=" + fmt_num(p.a());
    case PotentialKind::sqrt_transformed:
      return "sqrt_transformed:alpha=" + fmt_num(p.alpha()) + ",inner=(" + format_potential(p.inner()) + ")";
  }
  throw_error(ErrorCode::invalid_argument, "unknown potential kind");
}

}  // namespace afm
