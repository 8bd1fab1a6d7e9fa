#include "afm/tables.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "afm/exact/predict.hpp"

namespace afm::tables {

namespace {

using exact::MeshConfig;
using exact::PredictMode;

const PotentialSpec& linear_unit() {
  static const PotentialSpec p = PotentialSpec::make_linear(1.0);
  return p;
}

}  // namespace

const std::vector<Table1Ref>& table1_reference() {
  // published values: exact, f(bar m) under HO and improved prescriptions,
  // absolute percent deviations in parentheses
  static const std::vector<Table1Ref> ref = {
      {0, 0, 1.473, 1.473, 0.0, 1.473, 0.0},   {1, 0, 2.575, 2.591, 0.6, 2.567, 0.3},
      {2, 0, 3.478, 3.502, 0.7, 3.461, 0.5},   {3, 0, 4.275, 4.307, 0.7, 4.251, 0.5},
      {0, 1, 2.117, 2.071, 2.2, 2.120, 0.1},   {1, 1, 3.077, 3.064, 0.4, 3.083, 0.2},
      {2, 1, 3.911, 3.915, 0.1, 3.913, 0.05},  {3, 1, 4.665, 4.682, 0.3, 4.662, 0.06},
      {0, 2, 2.676, 2.591, 3.2, 2.680, 1.5},   {1, 2, 3.546, 3.502, 1.2, 3.559, 0.4},
      {2, 2, 4.327, 4.307, 0.5, 4.339, 0.3},   {3, 2, 5.046, 5.042, 0.08, 5.055, 0.2},
      {0, 3, 3.182, 3.064, 3.7, 3.186, 0.1},   {1, 3, 3.989, 3.915, 1.8, 4.005, 0.4},
      {2, 3, 4.728, 4.682, 1.0, 4.746, 0.4},   {3, 3, 5.416, 5.390, 0.5, 5.434, 0.3},
  };
  return ref;
}

std::vector<Table1Row> table1() {
  const double m = 4.0;
  const auto& V = linear_unit();
  QPrescription ho = preset(QPreset::ho, 2);
  QPrescription imp = preset(QPreset::improved2b, 2);
  std::vector<Table1Row> rows;
  for (int l = 0; l <= 3; ++l) {
    for (int n = 0; n <= 3; ++n) {
      Table1Row r;
      r.n = n;
      r.l = l;
      r.exact = exact::solve_radial_2b(m, V, n, l, MeshConfig{});
      StateLabels st(std::vector<std::pair<int, int>>{{n, l}});
      r.pred_ho = exact::predict_spectrum(PredictMode::two_body_f, m, st, ho, 2, V);
      r.pred_improved = exact::predict_spectrum(PredictMode::two_body_f, m, st, imp, 2, V);
      r.dev_ho_pct = 100.0 * std::abs(r.pred_ho - r.exact) / r.exact;
      r.dev_improved_pct = 100.0 * std::abs(r.pred_improved - r.exact) / r.exact;
      rows.push_back(r);
    }
  }
  return rows;
}

const std::vector<Table2Ref>& table2_reference() {
  // The rows reproduce the published selection: per (L, parity) sector, the
  // index counts merged (degeneracy-folded) states from the bottom. Labels
  // are the published main components; for mixed high-band states the leading
  // component depends on the basis length, so the published label is part of
  // the row definition rather than recomputed.
  static const std::vector<Table2Ref> ref = {
      {0, "0,0,0,0", 0, 0, 0, 0, 0, +1, 0, 4.867, 4.867, 4.867},
      {1, "[0,1,0,0]", 0, 1, 0, 0, 1, -1, 0, 5.934, 5.896, 5.896},
      {2, "[1,0,0,0]", 1, 0, 0, 0, 0, +1, 1, 6.704, 6.842, 6.671},
      {2, "0,1,0,1", 0, 1, 0, 1, 0, +1, 2, 6.846, 6.842, 6.842},
      {2, "[0,2,0,0]", 0, 2, 0, 0, 2, +1, 0, 6.874, 6.842, 6.842},
      {3, "[1,1,0,0]", 1, 1, 0, 0, 1, -1, 1, 7.608, 7.726, 7.566},
      {3, "1,0,0,1", 1, 0, 0, 1, 1, -1, 2, 7.702, 7.726, 7.566},
      {3, "[0,2,0,1]", 0, 2, 0, 1, 1, -1, 4, 7.854, 7.726, 7.726},
      {4, "[2,0,0,0]", 2, 0, 0, 0, 0, +1, 3, 8.309, 8.562, 8.256},
      {4, "1,1,0,1", 1, 1, 0, 1, 0, +1, 4, 8.391, 8.562, 8.410},
      {4, "[1,2,0,0]", 1, 2, 0, 0, 2, +1, 2, 8.426, 8.562, 8.410},
      {4, "0,1,1,1", 0, 1, 1, 1, 0, +1, 5, 8.572, 8.562, 8.410},
      {4, "0,2,0,2", 0, 2, 0, 2, 0, +1, 6, 8.707, 8.562, 8.562},
  };
  return ref;
}

std::vector<Table2Row> table2(int Bmax) {
  const double m = 2.0;
  const auto& V = linear_unit();
  using std::numbers::pi;

  exact::ThreeBodyBasisConfig cfg;
  cfg.Bmax = Bmax;
  cfg.max_states = 12;

  // sector spectra used by the published rows
  std::map<std::pair<int, int>, exact::Spectrum> sectors;
  for (auto key : {std::pair{0, +1}, std::pair{1, -1}, std::pair{2, +1}})
    sectors[key] = exact::solve_3b(m, V, key.first, key.second, cfg);

  // ground-state predictor eps(bar m) cached per Q
  exact::ThreeBodyBasisConfig gcfg;
  gcfg.Bmax = Bmax;
  gcfg.max_states = 1;
  std::map<long long, double> eps_cache;
  auto eps_at_q = [&](double q) {
    long long key = std::llround(q * 1e12);
    auto it = eps_cache.find(key);
    if (it != eps_cache.end()) return it->second;
    double mbar = m * (3.0 / q) * (3.0 / q);
    double e = exact::solve_3b(mbar, V, 0, +1, gcfg).entries.at(0).energy;
    eps_cache[key] = e;
    return e;
  };

  std::vector<Table2Row> rows;
  for (const auto& ref : table2_reference()) {
    Table2Row r;
    r.band = ref.band;
    r.label = ref.label;
    r.n1 = ref.n1;
    r.l1 = ref.l1;
    r.n2 = ref.n2;
    r.l2 = ref.l2;
    r.L = ref.L;
    r.parity = ref.parity;
    const auto& spec = sectors.at({ref.L, ref.parity});
    r.exact = spec.entries.at(ref.index).energy;
    const int nsum = ref.n1 + ref.n2, lsum = ref.l1 + ref.l2;
    const double q_ho_val = 2.0 * nsum + lsum + 3.0;
    const double q_wkb_val = pi / std::sqrt(3.0) * nsum + lsum + 3.0;
    r.pred_qho = eps_at_q(q_ho_val);
    r.pred_qwkb = eps_at_q(q_wkb_val);
    r.dev_qho_pct = 100.0 * std::abs(r.pred_qho - r.exact) / r.exact;
    r.dev_qwkb_pct = 100.0 * std::abs(r.pred_qwkb - r.exact) / r.exact;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace afm::tables
