#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "afm/errors.hpp"

namespace afm {

/// Radial/orbital quantum numbers of the N-1 internal coordinates.
struct StateLabels {
  std::vector<std::pair<int, int>> pairs;  // (n_i, l_i)

  StateLabels() = default;
  explicit StateLabels(std::vector<std::pair<int, int>> p);
  int n_body() const { return static_cast<int>(pairs.size()) + 1; }
  int n_sum() const;
  int l_sum() const;
  static StateLabels ground(int N);
};

/// Affine map Q = sum(alpha_i n_i + beta_i l_i) + gamma.
struct QPrescription {
  std::vector<double> alpha;
  std::vector<double> beta;
  double gamma = 0;

  void validate() const;
};

enum class QPreset { ho, improved2b, wkb3b, ur2b, ur3b };

double q_ho(const StateLabels& labels);
double q_custom(const QPrescription& p, const StateLabels& labels);

QPrescription preset(QPreset name, int N);
QPreset parse_preset(std::string_view name);

/// Parses `ho|improved2b|wkb3b|ur2b|ur3b|custom:alpha=...,beta=...,gamma=...`
/// (custom lists are `;`-separated per coordinate, or one value for all).
QPrescription parse_prescription(std::string_view text, int N);

}  // namespace afm
