#pragma once

#include <vector>

#include "afm/potentials.hpp"

namespace afm::exact {

/// Regularized Lagrange-Laguerre mesh for the radial Schrodinger problem.
struct MeshConfig {
  int points = 100;
  double scale = 0.0;        // mesh scaling h; 0 selects it automatically
  bool check_convergence = true;  // redo at 2x points, require 1e-6 relative
};

/// n-th eigenvalue (n radial nodes) of H = p^2/m + V(r) in partial wave l.
/// The Hamiltonian convention matches a two-body system of particle mass m
/// (reduced mass m/2).
double solve_radial_2b(double m, const PotentialSpec& V, int n, int l, const MeshConfig& cfg = {});

/// Universal ground-state function f(m): lowest eigenvalue of p^2/m + V(r).
double universal_f_fn(const PotentialSpec& V, double m, const MeshConfig& cfg = {});

/// Lowest eigenvalues of p^2/(2 mu) + V(r) + l(l+1)/(2 mu r^2) on the mesh;
/// building block shared by the solvers above.
std::vector<double> mesh_eigenvalues(double mu, const PotentialSpec& V, int l, int points, double h,
                                     int count);

/// Golden-section choice of the mesh scale minimizing the ground eigenvalue.
double choose_mesh_scale(double mu, const PotentialSpec& V, int l, int points);

}  // namespace afm::exact
