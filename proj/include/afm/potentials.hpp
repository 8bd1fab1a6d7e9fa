#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "afm/errors.hpp"

namespace afm {

enum class PotentialKind {
  linear,           // V(r) = a r, a > 0
  quadratic,        // V(r) = k r^2, k > 0
  coulomb,          // V(r) = -a / r, a > 0
  powerlaw,         // V(r) = sgn(lambda) a r^lambda, a > 0, lambda in [-1,2]\{0}
  funnel,           // V(r) = -a/r + b r, a, b > 0
  sqrtwell,         // V(r) = sqrt(r^2 + a), a >= 0
  sqrt_transformed, // V(r) = inner(alpha sqrt(r)), alpha > 0
};

/// A member of the radial potential family. Immutable after construction;
/// safe to share across threads.
class PotentialSpec {
 public:
  static PotentialSpec make_linear(double a);
  static PotentialSpec make_quadratic(double k);
  static PotentialSpec make_coulomb(double a);
  static PotentialSpec make_powerlaw(double a, double lambda);
  static PotentialSpec make_funnel(double a, double b);
  static PotentialSpec make_sqrtwell(double a);
  static PotentialSpec make_sqrt_transformed(PotentialSpec inner, double alpha);

  PotentialKind kind() const { return kind_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double k() const { return k_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  const PotentialSpec& inner() const;

  double eval(double r) const;
  double deriv(double r) const;

  /// True when V(0) is finite (linear, quadratic, sqrtwell).
  bool finite_at_origin() const;

  bool operator==(const PotentialSpec& o) const;

 private:
  PotentialSpec() = default;
  void check_radius(double r) const;

  PotentialKind kind_ = PotentialKind::linear;
  double a_ = 0, b_ = 0, k_ = 0, lambda_ = 0, alpha_ = 0;
  std::shared_ptr<const PotentialSpec> inner_;
};

inline double eval_potential(const PotentialSpec& p, double r) { return p.eval(r); }
inline double deriv_potential(const PotentialSpec& p, double r) { return p.deriv(r); }

/// W(r) = p(alpha sqrt(r)). Power-law family members collapse back to a
/// power law with halved exponent; other kinds stay wrapped.
PotentialSpec sqrt_transform(const PotentialSpec& p, double alpha);

/// Parses the `kind:key=value[,key=value...]` mini-language. A nested inner
/// spec is written in parentheses: `sqrt_transformed:alpha=2,inner=(quadratic:k=1)`.
PotentialSpec parse_potential(std::string_view text);
std::string format_potential(const PotentialSpec& p);

/// c * V(r), for kinds whose family is closed under a positive prefactor.
PotentialSpec scale_coefficients(const PotentialSpec& p, double c);

/// The two-body potential V(r) = 2 U(r/2) equivalent to one-body U in a
/// two-body system. Closed within the family for every kind except
/// sqrt_transformed wrappers.
PotentialSpec two_body_equivalent(const PotentialSpec& u);

}  // namespace afm
