#pragma once

#include <array>
#include <string>
#include <vector>

#include "afm/exact/oscillator.hpp"
#include "afm/potentials.hpp"

namespace afm::exact {

enum class Symmetrization {
  all,      // full product space (every permutation-symmetry species)
  bosonic,  // fully symmetric states only
};

struct ThreeBodyBasisConfig {
  double b = 0.0;  // oscillator length; 0 selects it by scanning around the AFM mean radius
  int Bmax = 20;
  Symmetrization symmetry = Symmetrization::all;
  int max_states = 30;
  double degeneracy_tol = 1e-7;  // relative; eigenvalues closer than this merge into one entry
};

struct SpectrumEntry {
  std::array<int, 4> labels{};  // main component (n1, l1, n2, l2)
  bool bracketed = false;       // conjugate component equally present
  int band = 0;                 // B of the main component
  double energy = 0;
  double main_amplitude = 0;
  int multiplicity = 1;  // merged degenerate states
};

struct Spectrum {
  int L = 0;
  int parity = 1;
  double b_used = 0;
  int dimension = 0;
  std::vector<SpectrumEntry> entries;  // energies ascending
};

/// Lowest states of H = sum_i p_i^2/(2m) + sum_{i<j} V(r_ij) for three equal
/// masses in the (L, parity) sector, expanded on a two-oscillator HO basis
/// with bands <= Bmax. The two rotated pair interactions enter through the
/// flavor-rotation (Moshinsky) transformation of the x-pair interaction.
Spectrum solve_3b(double m, const PotentialSpec& V, int L, int parity, const ThreeBodyBasisConfig& cfg = {});

/// Transformation bracket <bra; L|R(angle)|ket; L> between two-oscillator
/// states under a flavor rotation; zero unless bands match and angular
/// momenta couple. The equal-mass Jacobi rotation for pair (13)/(23) uses
/// angle = +-pi/3.
double moshinsky_bracket(const Ho2& bra, const Ho2& ket, int L, double angle);

/// Cached per-(band, L) rotation blocks at a fixed angle.
class MoshinskyTable {
 public:
  MoshinskyTable(int L, int parity, int Bmax, double angle);
  double coefficient(const Ho2& bra, const Ho2& ket) const;
  const Eigen::MatrixXd& block(int band) const;
  const std::vector<Ho2>& block_states(int band) const;
  int bmax() const { return static_cast<int>(blocks_.size()) - 1; }

 private:
  std::vector<std::vector<Ho2>> states_;
  std::vector<Eigen::MatrixXd> blocks_;
};

/// Bosonic (S3-symmetric) projector on a (L, parity) sector, block diagonal
/// over bands; idempotent up to roundoff.
Eigen::MatrixXd bosonic_projector(const std::vector<Ho2>& states, int L);

/// Dense sector Hamiltonian in the basis `sector_states(L, parity, Bmax)`,
/// for unit tests and the projector path.
Eigen::MatrixXd sector_hamiltonian(double m, const PotentialSpec& V, int L, int parity, int Bmax,
                                   double b);

}  // namespace afm::exact
