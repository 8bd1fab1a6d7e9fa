#include "afm/exact/threebody.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "afm/afm_core.hpp"

namespace afm::exact {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int band_of(const Ho2& s) { return s.band(); }

std::map<int, std::pair<int, int>> band_ranges(const std::vector<Ho2>& states) {
  // states are band-major; record [begin, end) per band
  std::map<int, std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) {
    int b = band_of(states[i]);
    auto it = out.find(b);
    if (it == out.end())
      out[b] = {i, i + 1};
    else
      it->second.second = i + 1;
  }
  return out;
}

}  // namespace

MoshinskyTable::MoshinskyTable(int L, int parity, int Bmax, double angle) {
  states_.resize(Bmax + 1);
  blocks_.resize(Bmax + 1);
  for (int B = 0; B <= Bmax; ++B) {
    states_[B] = shell_states(B, L, parity);
    if (!states_[B].empty()) blocks_[B] = rotation_block(states_[B], L, angle);
  }
}

double MoshinskyTable::coefficient(const Ho2& bra, const Ho2& ket) const {
  if (bra.band() != ket.band()) return 0.0;
  int B = bra.band();
  if (B >= static_cast<int>(states_.size())) throw_error(ErrorCode::invalid_argument, "band beyond table");
  const auto& st = states_[B];
  auto find = [&](const Ho2& s) {
    for (int i = 0; i < static_cast<int>(st.size()); ++i)
      if (st[i] == s) return i;
    return -1;
  };
  int i = find(bra), j = find(ket);
  if (i < 0 || j < 0) return 0.0;
  return blocks_[B](i, j);
}

const MatrixXd& MoshinskyTable::block(int band) const { return blocks_.at(band); }
const std::vector<Ho2>& MoshinskyTable::block_states(int band) const { return states_.at(band); }

double moshinsky_bracket(const Ho2& bra, const Ho2& ket, int L, double angle) {
  if (bra.band() != ket.band()) return 0.0;
  int par = (bra.l1 + bra.l2) % 2 == 0 ? 1 : -1;
  if (((ket.l1 + ket.l2) % 2 == 0 ? 1 : -1) != par) return 0.0;
  auto states = shell_states(bra.band(), L, par);
  MatrixXd block = rotation_block(states, L, angle);
  auto find = [&](const Ho2& s) {
    for (int i = 0; i < static_cast<int>(states.size()); ++i)
      if (states[i] == s) return i;
    return -1;
  };
  int i = find(bra), j = find(ket);
  if (i < 0 || j < 0) return 0.0;
  return block(i, j);
}

namespace {

// Pair potential V(sqrt(2) * b * xi) on the x oscillator: diagonal in
// (l1, n2, l2), dense in (n1, n1').
MatrixXd pair_potential_matrix(const std::vector<Ho2>& states, const PotentialSpec& V, double b,
                               int Bmax) {
  const int dim = static_cast<int>(states.size());
  const int nmax = Bmax / 2;
  const double c = std::sqrt(2.0) * b;
  // radial integral tables per l
  QuadGrid grid = finite_grid(300, 2.0 * std::sqrt(2.0 * (2.0 * nmax + Bmax + 1.5)) + 14.0);
  std::vector<double> f(grid.x.size());
  for (size_t i = 0; i < grid.x.size(); ++i) f[i] = V.eval(c * grid.x[i]);
  std::vector<MatrixXd> table(Bmax + 1);
  for (int l = 0; l <= Bmax; ++l) table[l] = radial_integrals(l, nmax, grid, f);

  MatrixXd out = MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Ho2 &a = states[i], &k = states[j];
      if (a.l1 == k.l1 && a.l2 == k.l2 && a.n2 == k.n2) out(i, j) = table[a.l1](a.n1, k.n1);
    }
  return out;
}

MatrixXd kinetic_matrix(const std::vector<Ho2>& states, double m, double b) {
  const int dim = static_cast<int>(states.size());
  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < dim; ++i) index[states[i].key()] = i;
  MatrixXd out = MatrixXd::Zero(dim, dim);
  auto put = [&](int i, const Ho2& t, double v) {
    auto it = index.find(t.key());
    if (it == index.end()) return;
    out(i, it->second) += v;
    out(it->second, i) += v;
  };
  for (int i = 0; i < dim; ++i) {
    const Ho2& s = states[i];
    out(i, i) = (2.0 * s.n1 + s.l1 + 1.5) + (2.0 * s.n2 + s.l2 + 1.5);
    put(i, {s.n1 + 1, s.l1, s.n2, s.l2}, std::sqrt((s.n1 + 1.0) * (s.n1 + s.l1 + 1.5)));
    put(i, {s.n1, s.l1, s.n2 + 1, s.l2}, std::sqrt((s.n2 + 1.0) * (s.n2 + s.l2 + 1.5)));
  }
  return out / (2.0 * m * b * b);
}

// block-diagonal rotation over bands assembled into the sector matrix
MatrixXd sector_rotation(const std::vector<Ho2>& states, int L, double angle) {
  const int dim = static_cast<int>(states.size());
  MatrixXd T = MatrixXd::Zero(dim, dim);
  auto ranges = band_ranges(states);
  for (auto& [B, be] : ranges) {
    std::vector<Ho2> shell(states.begin() + be.first, states.begin() + be.second);
    MatrixXd blk = rotation_block(shell, L, angle);
    T.block(be.first, be.first, blk.rows(), blk.cols()) = blk;
  }
  return T;
}

}  // namespace

MatrixXd sector_hamiltonian(double m, const PotentialSpec& V, int L, int parity, int Bmax, double b) {
  auto states = sector_states(L, parity, Bmax);
  MatrixXd H = kinetic_matrix(states, m, b);
  MatrixXd V12 = pair_potential_matrix(states, V, b, Bmax);
  MatrixXd T = sector_rotation(states, L, std::numbers::pi / 3.0);
  H += V12;
  H += T.transpose() * V12 * T;  // V(r13)
  H += T * V12 * T.transpose();  // V(r23)
  return H;
}

Eigen::MatrixXd bosonic_projector(const std::vector<Ho2>& states, int L) {
  const int dim = static_cast<int>(states.size());
  MatrixXd P = MatrixXd::Zero(dim, dim);
  auto ranges = band_ranges(states);
  const double th = 2.0 * std::numbers::pi / 3.0;
  for (auto& [B, be] : ranges) {
    std::vector<Ho2> shell(states.begin() + be.first, states.begin() + be.second);
    const int n = static_cast<int>(shell.size());
    MatrixXd rp = rotation_block(shell, L, th);
    MatrixXd rm = rotation_block(shell, L, -th);
    MatrixXd m12 = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m12(i, i) = (shell[i].l1 & 1) ? -1.0 : 1.0;
    MatrixXd sum = MatrixXd::Identity(n, n) + rp + rm + m12 + rp * m12 * rm + rm * m12 * rp;
    P.block(be.first, be.first, n, n) = sum / 6.0;
  }
  return P;
}

namespace {

double auto_length(double m, const PotentialSpec& V, int L, int parity, int Bmax) {
  // AFM mean radius of the three-body ground state sets the scale
  SystemSpec spec;
  spec.flavor = Kinematics::nonrelativistic;
  spec.N = 3;
  spec.m = m;
  spec.two_body = V;
  double r0 = solve_afm(spec, 3.0).r0_twobody.value();
  int bscan = std::min(Bmax, 12);
  auto ground = [&](double b) {
    MatrixXd H = sector_hamiltonian(m, V, L, parity, bscan, b);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(H, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
  };
  // 7-point scan around r0, then a short golden refinement
  const std::array<double, 7> fracs{0.20, 0.28, 0.38, 0.52, 0.70, 0.95, 1.30};
  double best_b = fracs[0] * r0, best_e = ground(best_b);
  for (size_t i = 1; i < fracs.size(); ++i) {
    double b = fracs[i] * r0;
    double e = ground(b);
    if (e < best_e) {
      best_e = e;
      best_b = b;
    }
  }
  double lo = best_b / 1.4, hi = best_b * 1.4;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 10; ++it) {
    double b1 = hi - gr * (hi - lo);
    double b2 = lo + gr * (hi - lo);
    if (ground(b1) < ground(b2))
      hi = b2;
    else
      lo = b1;
  }
  return 0.5 * (lo + hi);
}

std::array<int, 4> canonical_bracket(const Ho2& s) {
  Ho2 c = s.conjugate();
  int q1 = 2 * s.n1 + s.l1, q2 = 2 * c.n1 + c.l1;
  if (q2 > q1 || (q2 == q1 && c.l1 > s.l1)) return c.key();
  return s.key();
}

}  // namespace

Spectrum solve_3b(double m, const PotentialSpec& V, int L, int parity, const ThreeBodyBasisConfig& cfg) {
  if (!(m > 0)) throw_error(ErrorCode::invalid_argument, "solve_3b: m must be > 0");
  if (L < 0 || std::abs(parity) != 1) throw_error(ErrorCode::invalid_argument, "solve_3b: bad L or parity");
  if (cfg.Bmax < L) throw_error(ErrorCode::invalid_argument, "solve_3b: Bmax must be >= L");
  Spectrum out;
  out.L = L;
  out.parity = parity;
  double b = cfg.b > 0 ? cfg.b : auto_length(m, V, L, parity, cfg.Bmax);
  out.b_used = b;

  auto states = sector_states(L, parity, cfg.Bmax);
  if (states.empty()) throw_error(ErrorCode::invalid_argument, "solve_3b: empty sector");
  MatrixXd H = sector_hamiltonian(m, V, L, parity, cfg.Bmax, b);

  MatrixXd basis;  // columns: sector basis in the symmetric subspace (bosonic mode)
  if (cfg.symmetry == Symmetrization::bosonic) {
    MatrixXd P = bosonic_projector(states, L);
    // rank-revealing eigendecomposition of the projector, per band so a
    // deficiency can be pinned to its band
    Eigen::SelfAdjointEigenSolver<MatrixXd> pe(P);
    int rank = 0;
    for (int i = 0; i < pe.eigenvalues().size(); ++i) {
      double ev = pe.eigenvalues()[i];
      if (ev > 0.5)
        rank++;
      else if (ev > 1e-6 && ev < 1.0 - 1e-6) {
        auto ranges = band_ranges(states);
        int offending = -1;
        for (auto& [B, be] : ranges) {
          double w = pe.eigenvectors().col(i).segment(be.first, be.second - be.first).squaredNorm();
          if (w > 0.5) offending = B;
        }
        std::ostringstream os;
        os << "solve_3b: symmetrizer rank deficiency (projector eigenvalue " << ev << ") in band "
           << offending;
        throw_error(ErrorCode::no_convergence, os.str());
      }
    }
    if (rank == 0) throw_error(ErrorCode::invalid_argument, "solve_3b: no symmetric state in this sector");
    basis.resize(H.rows(), rank);
    int col = 0;
    for (int i = 0; i < pe.eigenvalues().size(); ++i)
      if (pe.eigenvalues()[i] > 0.5) basis.col(col++) = pe.eigenvectors().col(i);
    H = basis.transpose() * H * basis;
  }

  Eigen::SelfAdjointEigenSolver<MatrixXd> es(H);
  out.dimension = static_cast<int>(H.rows());
  const VectorXd& w = es.eigenvalues();
  const double scale = std::max(1.0, std::abs(w[0]));

  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) index[states[i].key()] = i;

  int i = 0;
  while (i < w.size() && static_cast<int>(out.entries.size()) < cfg.max_states) {
    int j = i;
    while (j + 1 < w.size() && std::abs(w[j + 1] - w[i]) < cfg.degeneracy_tol * scale) ++j;
    // summed weights of the (near-)degenerate group in the full basis
    VectorXd weight = VectorXd::Zero(states.size());
    for (int k = i; k <= j; ++k) {
      VectorXd v = es.eigenvectors().col(k);
      if (basis.size()) v = basis * v;
      weight += v.cwiseProduct(v);
    }
    int kmax = 0;
    weight.maxCoeff(&kmax);
    const Ho2& main = states[kmax];
    SpectrumEntry e;
    e.energy = w[i];
    e.multiplicity = j - i + 1;
    e.main_amplitude = std::sqrt(weight[kmax] / e.multiplicity);
    Ho2 conj = main.conjugate();
    bool bracket = false;
    if (!(conj == main)) {
      auto it = index.find(conj.key());
      if (it != index.end() && std::abs(weight[it->second] - weight[kmax]) <= 0.02 * weight[kmax])
        bracket = true;
    }
    e.bracketed = bracket;
    e.labels = bracket ? canonical_bracket(main) : main.key();
    e.band = main.band();
    out.entries.push_back(e);
    i = j + 1;
  }
  return out;
}

}  // namespace afm::exact
