#include "afm/exact/predict.hpp"

#include <cmath>

namespace afm::exact {

double effective_mass(EffMassKind kind, double m, const StateLabels& labels, const QPrescription& presc,
                      int N) {
  if (!(m > 0)) throw_error(ErrorCode::invalid_argument, "effective_mass: m must be > 0");
  const double q = q_custom(presc, labels);
  switch (kind) {
    case EffMassKind::two_body: {
      if (labels.pairs.size() != 1)
        throw_error(ErrorCode::invalid_argument, "effective_mass two_body: labels must have one pair");
      const double q2 = q_custom(presc, StateLabels::ground(2));
      return m * (q2 / q) * (q2 / q);
    }
    case EffMassKind::n_body: {
      if (labels.n_body() != N)
        throw_error(ErrorCode::invalid_argument, "effective_mass n_body: labels must have N-1 pairs");
      const double qn = q_custom(presc, StateLabels::ground(N));
      return m * (qn / q) * (qn / q);
    }
    case EffMassKind::big_M: {
      if (labels.n_body() != N)
        throw_error(ErrorCode::invalid_argument, "effective_mass big_M: labels must have N-1 pairs");
      const double cn = 0.5 * N * (N - 1);
      const double q2 = 1.5;  // two-body HO ground, Q_N = rho (N-1) with rho = 3/2
      const double r = cn * q2 / q;
      return 2.0 * m / N * r * r;
    }
  }
  throw_error(ErrorCode::invalid_argument, "effective_mass: unknown kind");
}

double predict_spectrum(PredictMode mode, double m, const StateLabels& labels, const QPrescription& presc,
                        int N, const PotentialSpec& V, const PredictConfig& cfg) {
  const double cn = 0.5 * N * (N - 1);
  switch (mode) {
    case PredictMode::two_body_f:
      return universal_f_fn(V, effective_mass(EffMassKind::two_body, m, labels, presc, 2), cfg.mesh);
    case PredictMode::n_body_gs: {
      if (N != 3)
        throw_error(ErrorCode::unsupported, "predict_spectrum n_body_gs: only N = 3 is implemented");
      const double mbar = effective_mass(EffMassKind::n_body, m, labels, presc, N);
      auto spec = solve_3b(mbar, V, 0, 1, cfg.three_body);
      return spec.entries.at(0).energy;
    }
    case PredictMode::n_body_via_f:
      return cn * universal_f_fn(V, effective_mass(EffMassKind::big_M, m, labels, presc, N), cfg.mesh);
    case PredictMode::gs_link:
      return cn * universal_f_fn(V, 0.5 * N * m, cfg.mesh);
  }
  throw_error(ErrorCode::invalid_argument, "predict_spectrum: unknown mode");
}

}  // namespace afm::exact
