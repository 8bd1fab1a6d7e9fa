#pragma once

#include "afm/potentials.hpp"

namespace afm::exact {

struct SalpeterConfig {
  int basis_size = 50;
  double b = 0.0;  // oscillator length; 0 optimizes the target eigenvalue
  bool check_convergence = true;  // redo at 1.5x basis, require 1e-4 relative
};

/// n-th eigenvalue (partial wave l) of H = sigma sqrt(p^2 + m^2) + V(r) in an
/// oscillator basis; the kinetic matrix is built by momentum-space quadrature.
double solve_salpeter_2b(double sigma, double m, const PotentialSpec& V, int n, int l,
                         const SalpeterConfig& cfg = {});

}  // namespace afm::exact
