#include "afm/exact/oscillator.hpp"

#include <cmath>

#include "afm/exact/wigner.hpp"

namespace afm::exact {

double radial_ho(int n, int l, double x) {
  // recurrence on L_k^(l+1/2)(x^2); cut off deep in the Gaussian tail where
  // the polynomial would overflow long after the function is zero
  const double xmax = 2.0 * std::sqrt(2.0 * (2 * n + l + 1.5)) + 12.0;
  if (x >= xmax) return 0.0;
  const double u = x * x;
  const double a = l + 0.5;
  double lkm1 = 0.0, lk = 1.0;
  for (int k = 0; k < n; ++k) {
    double lkp1 = ((2 * k + 1 + a - u) * lk - (k + a) * lkm1) / (k + 1);
    lkm1 = lk;
    lk = lkp1;
  }
  double lognorm = 0.5 * (std::log(2.0) + log_factorial(n) - std::lgamma(n + l + 1.5));
  return std::exp(lognorm + l * std::log(x > 0 ? x : 1e-300) - 0.5 * u) * lk;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton on Legendre polynomials.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

QuadGrid::QuadGrid(int npts, double map_scale) {
  std::vector<double> t, wt;
  gauss_legendre(npts, t, wt);
  x.resize(npts);
  w.resize(npts);
  for (int i = 0; i < npts; ++i) {
    double u = 0.5 * (t[i] + 1.0);  // (0,1)
    double du = 0.5 * wt[i];
    x[i] = map_scale * u / (1.0 - u);
    w[i] = du * map_scale / ((1.0 - u) * (1.0 - u));
  }
}

QuadGrid finite_grid(int npts, double xmax) {
  QuadGrid g(2, 1.0);
  std::vector<double> t, wt;
  gauss_legendre(npts, t, wt);
  g.x.resize(npts);
  g.w.resize(npts);
  for (int i = 0; i < npts; ++i) {
    g.x[i] = 0.5 * (t[i] + 1.0) * xmax;
    g.w[i] = 0.5 * wt[i] * xmax;
  }
  return g;
}

Eigen::MatrixXd radial_integrals(int l, int nmax, const QuadGrid& grid, const std::vector<double>& f) {
  const int np = static_cast<int>(grid.x.size());
  Eigen::MatrixXd R(nmax + 1, np);
  for (int n = 0; n <= nmax; ++n)
    for (int i = 0; i < np; ++i) R(n, i) = radial_ho(n, l, grid.x[i]);
  Eigen::VectorXd wv(np);
  for (int i = 0; i < np; ++i) wv[i] = f[i] * grid.x[i] * grid.x[i] * grid.w[i];
  return R * wv.asDiagonal() * R.transpose();
}

double adag_reduced_up(int n, int l) { return std::sqrt((l + 1.0) * (n + l + 1.5) / (l + 1.5)); }

double adag_reduced_down(int n, int l) {
  if (l == 0) return 0.0;
  return std::sqrt(2.0 * l * (n + 1.0) / (2.0 * l - 1.0));
}

namespace {

// <n' l' m'|adag_mu|n l m>, mu = m' - m
double adag_elem(int np, int lp, int mp, int n, int l, int m) {
  int mu = mp - m;
  if (mu < -1 || mu > 1) return 0.0;
  double red;
  if (lp == l + 1 && np == n)
    red = adag_reduced_up(n, l);
  else if (lp == l - 1 && np == n + 1)
    red = adag_reduced_down(n, l);
  else
    return 0.0;
  return clebsch(l, m, 1, mu, lp, mp) * red;
}

// <n' l' m'|a_nu|n l m> for the annihilation vector, nu = m' - m
double annih_elem(int np, int lp, int mp, int n, int l, int m) {
  int nu = mp - m;
  if (nu < -1 || nu > 1) return 0.0;
  double sign = (nu & 1) ? -1.0 : 1.0;
  return sign * adag_elem(n, l, m, np, lp, mp);
}

}  // namespace

double rotation_generator_elem(const Ho2& bra, const Ho2& ket, int L) {
  if (bra.band() != ket.band()) return 0.0;
  double tot = 0.0;
  const int M = 0;
  for (int m1 = -ket.l1; m1 <= ket.l1; ++m1) {
    const int m2 = M - m1;
    if (std::abs(m2) > ket.l2) continue;
    const double c1 = clebsch(ket.l1, m1, ket.l2, m2, L, M);
    if (std::abs(c1) < 1e-15) continue;
    for (int mu = -1; mu <= 1; ++mu) {
      // adag.b: raise oscillator 1 by mu, lower oscillator 2
      {
        const int m1p = m1 + mu, m2p = m2 - mu;
        if (std::abs(m1p) <= bra.l1 && std::abs(m2p) <= bra.l2) {
          const double c2 = clebsch(bra.l1, m1p, bra.l2, m2p, L, M);
          if (std::abs(c2) > 1e-15) {
            const double sign = (mu & 1) ? -1.0 : 1.0;
            tot += c1 * c2 * sign * adag_elem(bra.n1, bra.l1, m1p, ket.n1, ket.l1, m1) *
                   annih_elem(bra.n2, bra.l2, m2p, ket.n2, ket.l2, m2);
          }
        }
      }
      // -bdag.a: raise oscillator 2 by mu, lower oscillator 1
      {
        const int m1p = m1 - mu, m2p = m2 + mu;
        if (std::abs(m1p) <= bra.l1 && std::abs(m2p) <= bra.l2) {
          const double c2 = clebsch(bra.l1, m1p, bra.l2, m2p, L, M);
          if (std::abs(c2) > 1e-15) {
            const double sign = (mu & 1) ? -1.0 : 1.0;
            tot -= c1 * c2 * sign * adag_elem(bra.n2, bra.l2, m2p, ket.n2, ket.l2, m2) *
                   annih_elem(bra.n1, bra.l1, m1p, ket.n1, ket.l1, m1);
          }
        }
      }
    }
  }
  return tot;
}

std::vector<Ho2> shell_states(int B, int L, int parity) {
  std::vector<Ho2> out;
  for (int l1 = 0; l1 <= B; ++l1) {
    for (int l2 = 0; l2 <= B - l1; ++l2) {
      if (((l1 + l2) % 2 == 0 ? 1 : -1) != parity) continue;
      if (L < std::abs(l1 - l2) || L > l1 + l2) continue;
      int rem = B - l1 - l2;
      if (rem % 2) continue;
      for (int n1 = 0; n1 <= rem / 2; ++n1) out.push_back({n1, l1, rem / 2 - n1, l2});
    }
  }
  return out;
}

std::vector<Ho2> sector_states(int L, int parity, int Bmax) {
  std::vector<Ho2> out;
  for (int B = 0; B <= Bmax; ++B) {
    auto shell = shell_states(B, L, parity);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    squarings++;
  }
  Eigen::MatrixXd as = a * scale;
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd term = result;
  for (int k = 1; k <= 18; ++k) {
    term = (term * as) / double(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::MatrixXd rotation_block(const std::vector<Ho2>& states, int L, double theta) {
  const int dim = static_cast<int>(states.size());
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rotation_generator_elem(states[i], states[j], L);
  return expm(theta * g);
}

}  // namespace afm::exact
