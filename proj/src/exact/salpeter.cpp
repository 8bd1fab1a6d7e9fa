#include "afm/exact/salpeter.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "afm/exact/oscillator.hpp"

namespace afm::exact {

namespace {

using Eigen::MatrixXd;

// Eigenvalues of sigma*K + V in an nb-state oscillator basis of length b.
// Momentum and position integrals run over the same dimensionless grid
// (x = b p and x = r/b respectively); the momentum-space oscillator functions
// equal the position ones up to the (-1)^n phase.
Eigen::VectorXd spectrum(double sigma, double m, const PotentialSpec& V, int l, int nb, double b,
                         const QuadGrid& grid) {
  const int np = static_cast<int>(grid.x.size());
  MatrixXd R(nb, np);
  for (int n = 0; n < nb; ++n)
    for (int i = 0; i < np; ++i) R(n, i) = radial_ho(n, l, grid.x[i]);
  Eigen::VectorXd wk(np), wv(np);
  for (int i = 0; i < np; ++i) {
    double x = grid.x[i], w = grid.w[i] * x * x;
    wk[i] = std::sqrt((x / b) * (x / b) + m * m) * w;
    wv[i] = V.eval(b * x) * w;
  }
  MatrixXd K = R * wk.asDiagonal() * R.transpose();
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if ((i + j) & 1) K(i, j) = -K(i, j);
  MatrixXd H = sigma * K + R * wv.asDiagonal() * R.transpose();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double best_over_length(double sigma, double m, const PotentialSpec& V, int n, int l, int nb,
                        double fixed_b, double* b_out) {
  QuadGrid grid(std::max(250, 8 * nb), 8.0);
  auto target = [&](double b) { return spectrum(sigma, m, V, l, nb, b, grid)[n]; };
  if (fixed_b > 0) {
    if (b_out) *b_out = fixed_b;
    return target(fixed_b);
  }
  double best_b = 0, best_e = 0;
  bool first = true;
  for (int i = 0; i < 31; ++i) {
    double b = 0.05 * std::pow(20.0 / 0.05, i / 30.0);
    double e = target(b);
    if (!std::isfinite(e)) continue;
    if (first || e < best_e) {
      best_e = e;
      best_b = b;
      first = false;
    }
  }
  if (first) throw_error(ErrorCode::no_convergence, "salpeter: length scan failed");
  double lo = best_b / 1.5, hi = best_b * 1.5;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 24; ++it) {
    double b1 = hi - gr * (hi - lo);
    double b2 = lo + gr * (hi - lo);
    if (target(b1) < target(b2))
      hi = b2;
    else
      lo = b1;
  }
  double b = 0.5 * (lo + hi);
  if (b_out) *b_out = b;
  return target(b);
}

}  // namespace

double solve_salpeter_2b(double sigma, double m, const PotentialSpec& V, int n, int l,
                         const SalpeterConfig& cfg) {
  if (!(sigma > 0)) throw_error(ErrorCode::invalid_argument, "salpeter: sigma must be > 0");
  if (m < 0) throw_error(ErrorCode::invalid_argument, "salpeter: m must be >= 0");
  if (n < 0 || l < 0) throw_error(ErrorCode::invalid_argument, "salpeter: n, l must be >= 0");
  if (cfg.basis_size < 30) throw_error(ErrorCode::invalid_argument, "salpeter: basis_size must be >= 30");
  double e1 = best_over_length(sigma, m, V, n, l, cfg.basis_size, cfg.b, nullptr);
  if (!cfg.check_convergence) return e1;
  int nb2 = cfg.basis_size + (cfg.basis_size + 1) / 2;
  double e2 = best_over_length(sigma, m, V, n, l, nb2, cfg.b, nullptr);
  double denom = std::max({std::abs(e1), std::abs(e2), 1e-30});
  if (std::abs(e1 - e2) / denom > 1e-4) {
    std::ostringstream os;
    os << "salpeter: not converged, E(" << cfg.basis_size << ")=" << e1 << " vs E(" << nb2 << ")=" << e2;
    throw_error(ErrorCode::no_convergence, os.str());
  }
  return e2;
}

}  // namespace afm::exact
