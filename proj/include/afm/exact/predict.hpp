#pragma once

#include "afm/exact/mesh2b.hpp"
#include "afm/exact/threebody.hpp"
#include "afm/quantum_numbers.hpp"

namespace afm::exact {

enum class EffMassKind { two_body, n_body, big_M };

/// Effective masses of the duality-based spectrum predictors:
///   two_body: m (Q2 / Q(n,l))^2
///   n_body:   m (Q_N / Q({n_i,l_i}))^2
///   big_M:    (2m/N) (C_N Q2 / Q({n_i,l_i}))^2 with Q2 = 3/2
/// Q values come from the supplied prescription; ground-state Q uses the
/// all-zero labels.
double effective_mass(EffMassKind kind, double m, const StateLabels& labels, const QPrescription& presc,
                      int N);

enum class PredictMode { two_body_f, n_body_gs, n_body_via_f, gs_link };

struct PredictConfig {
  MeshConfig mesh{};
  ThreeBodyBasisConfig three_body{};
};

/// Duality-based spectrum predictions:
///   two_body_f:  f(bar m)                for the two-body spectrum
///   n_body_gs:   eps^(N)(bar m; ground)  via the three-body solver (N = 3)
///   n_body_via_f: C_N f(M(m; labels))
///   gs_link:     C_N f(N m / 2)
double predict_spectrum(PredictMode mode, double m, const StateLabels& labels, const QPrescription& presc,
                        int N, const PotentialSpec& V, const PredictConfig& cfg = {});

}  // namespace afm::exact
