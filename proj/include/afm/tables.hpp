#pragma once

#include <string>
#include <vector>

#include "afm/exact/threebody.hpp"

namespace afm::tables {

/// Spectrum of H = p^2/m + r at m = 4 with the duality predictions
/// f(bar m(4; n,l)) under the HO and improved prescriptions. Deviations are
/// absolute percentages against the exact column.
struct Table1Row {
  int n = 0, l = 0;
  double exact = 0;
  double pred_ho = 0, dev_ho_pct = 0;
  double pred_improved = 0, dev_improved_pct = 0;
};

std::vector<Table1Row> table1();

/// Reference values (for self-checking table output): exact, pred_ho,
/// dev_ho, pred_improved, dev_improved per (n, l), row-major in n then l.
struct Table1Ref {
  int n, l;
  double exact, pred_ho, dev_ho, pred_imp, dev_imp;
};
const std::vector<Table1Ref>& table1_reference();

/// Low eigenvalues of the three-body linear system at m = 2 with duality
/// predictions from the ground state under Q_HO and Q_WKB prescriptions.
struct Table2Row {
  int band = 0;
  std::string label;  // e.g. "[1,0,0,0]" or "0,1,0,1"
  int n1 = 0, l1 = 0, n2 = 0, l2 = 0;
  int L = 0, parity = 1;
  double exact = 0;
  double pred_qho = 0, dev_qho_pct = 0;
  double pred_qwkb = 0, dev_qwkb_pct = 0;
};

std::vector<Table2Row> table2(int Bmax = 20);

struct Table2Ref {
  int band;
  const char* label;
  int n1, l1, n2, l2;
  int L, parity, index;  // sector and merged-state index the row refers to
  double exact;
  double pred_qho, pred_qwkb;
};
const std::vector<Table2Ref>& table2_reference();

}  // namespace afm::tables
