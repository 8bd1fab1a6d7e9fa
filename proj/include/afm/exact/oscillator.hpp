#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "afm/potentials.hpp"

namespace afm::exact {

/// Normalized 3D radial oscillator function R_{nl}(x), unit length parameter,
/// positive-leading-Laguerre convention: R ~ x^l L_n^(l+1/2)(x^2) e^(-x^2/2).
double radial_ho(int n, int l, double x);

/// Mapped Gauss-Legendre grid on (0, L*t/(1-t)), t in (0,1).
struct QuadGrid {
  std::vector<double> x;
  std::vector<double> w;
  QuadGrid(int npts, double map_scale);
};

/// Fixed-interval Gauss-Legendre grid on (0, xmax); exact for smooth
/// integrands that die off before xmax.
QuadGrid finite_grid(int npts, double xmax);

/// I[n',n] = int R_{n'l}(x) R_{nl}(x) f(x) x^2 dx over the given grid.
Eigen::MatrixXd radial_integrals(int l, int nmax, const QuadGrid& grid,
                                 const std::vector<double>& f_on_grid);

/// Reduced creation-operator elements in the CG convention
/// <n'l'm'|adag_mu|nlm> = <l m 1 mu|l' m'> * red(n'l' <- nl).
double adag_reduced_up(int n, int l);    // (n, l) -> (n, l+1)
double adag_reduced_down(int n, int l);  // (n, l) -> (n+1, l-1)

/// Two-oscillator coupled state (n1 l1 n2 l2; L).
struct Ho2 {
  int n1, l1, n2, l2;
  int band() const { return 2 * (n1 + n2) + l1 + l2; }
  std::array<int, 4> key() const { return {n1, l1, n2, l2}; }
  Ho2 conjugate() const { return {n2, l2, n1, l1}; }
  bool operator==(const Ho2& o) const = default;
};

/// States of one (B, L, parity) shell; parity = (-1)^(l1+l2).
std::vector<Ho2> shell_states(int B, int L, int parity);
/// All states with band <= Bmax in a (L, parity) sector, band-major order.
std::vector<Ho2> sector_states(int L, int parity, int Bmax);

/// <bra; L|adag.b - bdag.a|ket; L>: generator of flavor rotations between the
/// two oscillators; band-conserving.
double rotation_generator_elem(const Ho2& bra, const Ho2& ket, int L);

/// exp(theta * G) on one (B, L, parity) shell, rows/cols ordered as `states`.
Eigen::MatrixXd rotation_block(const std::vector<Ho2>& states, int L, double theta);

/// Dense matrix exponential by scaling-and-squaring (Taylor core); exact
/// orthogonality for antisymmetric input up to roundoff.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

}  // namespace afm::exact
