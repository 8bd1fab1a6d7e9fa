#include "afm/quantum_numbers.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace afm {

StateLabels::StateLabels(std::vector<std::pair<int, int>> p) : pairs(std::move(p)) {
  if (pairs.empty()) throw_error(ErrorCode::invalid_argument, "StateLabels: need at least one (n,l) pair");
  for (auto& [n, l] : pairs)
    if (n < 0 || l < 0) throw_error(ErrorCode::invalid_argument, "StateLabels: entries must be >= 0");
}

int StateLabels::n_sum() const {
  int s = 0;
  for (auto& [n, l] : pairs) s += n;
  return s;
}

int StateLabels::l_sum() const {
  int s = 0;
  for (auto& [n, l] : pairs) s += l;
  return s;
}

StateLabels StateLabels::ground(int N) {
  if (N < 2) throw_error(ErrorCode::invalid_argument, "StateLabels::ground: N must be >= 2");
  return StateLabels(std::vector<std::pair<int, int>>(N - 1, {0, 0}));
}

void QPrescription::validate() const {
  if (alpha.size() != beta.size() || alpha.empty())
    throw_error(ErrorCode::invalid_argument, "QPrescription: alpha/beta lengths must match and be nonempty");
  for (double a : alpha)
    if (!(a > 0)) throw_error(ErrorCode::invalid_argument, "QPrescription: alpha_i must be > 0");
  for (double b : beta)
    if (!(b > 0)) throw_error(ErrorCode::invalid_argument, "QPrescription: beta_i must be > 0");
}

double q_ho(const StateLabels& labels) {
  double q = 1.5 * static_cast<double>(labels.pairs.size());
  for (auto& [n, l] : labels.pairs) q += 2.0 * n + l;
  return q;
}

double q_custom(const QPrescription& p, const StateLabels& labels) {
  p.validate();
  if (p.alpha.size() != labels.pairs.size())
    throw_error(ErrorCode::invalid_argument, "q_custom: prescription length does not match labels");
  double q = p.gamma;
  for (size_t i = 0; i < labels.pairs.size(); ++i)
    q += p.alpha[i] * labels.pairs[i].first + p.beta[i] * labels.pairs[i].second;
  return q;
}

QPrescription preset(QPreset name, int N) {
  if (N < 2) throw_error(ErrorCode::invalid_argument, "preset: N must be >= 2");
  const int nc = N - 1;
  QPrescription p;
  using std::numbers::pi;
  switch (name) {
    case QPreset::ho:
      p.alpha.assign(nc, 2.0);
      p.beta.assign(nc, 1.0);
      p.gamma = 1.5 * nc;
      return p;
    case QPreset::improved2b:
      if (N != 2) throw_error(ErrorCode::invalid_argument, "preset improved2b is defined for N=2");
      p.alpha = {1.789};
      p.beta = {1.0};
      p.gamma = 1.375;
      return p;
    case QPreset::wkb3b:
      if (N != 3) throw_error(ErrorCode::invalid_argument, "preset wkb3b is defined for N=3");
      p.alpha.assign(2, pi / std::sqrt(3.0));
      p.beta.assign(2, 1.0);
      p.gamma = 3.0;
      return p;
    case QPreset::ur2b:
      if (N != 2) throw_error(ErrorCode::invalid_argument, "preset ur2b is defined for N=2");
      p.alpha = {pi / 2.0};
      p.beta = {1.0};
      p.gamma = 4.0 / pi;
      return p;
    case QPreset::ur3b:
      if (N != 3) throw_error(ErrorCode::invalid_argument, "preset ur3b is defined for N=3");
      p.alpha.assign(2, pi / 2.0);
      p.beta.assign(2, 1.0);
      p.gamma = 3.0;
      return p;
  }
  throw_error(ErrorCode::invalid_argument, "unknown preset");
}

QPreset parse_preset(std::string_view name) {
  if (name == "ho") return QPreset::ho;
  if (name == "improved2b") return QPreset::improved2b;
  if (name == "wkb3b") return QPreset::wkb3b;
  if (name == "ur2b") return QPreset::ur2b;
  if (name == "ur3b") return QPreset::ur3b;
  throw_error(ErrorCode::parse_error, "unknown Q prescription preset '" + std::string(name) + "'");
}

namespace {

std::vector<double> parse_list(const std::string& text, int nc, const std::string& what) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto sep = text.find(';', pos);
    std::string tok = text.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
    char* endp = nullptr;
    double v = std::strtod(tok.c_str(), &endp);
    if (endp == tok.c_str() || *endp != '\0')
      throw_error(ErrorCode::parse_error, "prescription: bad " + what + " value '" + tok + "'");
    out.push_back(v);
    if (sep == std::string::npos) break;
    pos = sep + 1;
  }
  if (out.size() == 1) out.assign(nc, out[0]);
  if (static_cast<int>(out.size()) != nc)
    throw_error(ErrorCode::parse_error, "prescription: " + what + " needs 1 or N-1 values");
  return out;
}

}  // namespace

QPrescription parse_prescription(std::string_view text, int N) {
  if (text.rfind("custom:", 0) != 0) return preset(parse_preset(text), N);
  std::string rest(text.substr(7));
  std::string alpha_s, beta_s, gamma_s;
  size_t pos = 0;
  while (pos < rest.size()) {
    auto eq = rest.find('=', pos);
    if (eq == std::string::npos) throw_error(ErrorCode::parse_error, "prescription: expected key=value");
    std::string key = rest.substr(pos, eq - pos);
    auto end = rest.find(',', eq + 1);
    if (end == std::string::npos) end = rest.size();
    std::string val = rest.substr(eq + 1, end - eq - 1);
    if (key == "alpha")
      alpha_s = val;
    else if (key == "beta")
      beta_s = val;
    else if (key == "gamma")
      gamma_s = val;
    else
      throw_error(ErrorCode::parse_error, "prescription: unknown key '" + key + "'");
    pos = end + (end < rest.size() ? 1 : 0);
  }
  if (alpha_s.empty() || beta_s.empty() || gamma_s.empty())
    throw_error(ErrorCode::parse_error, "prescription custom: need alpha=, beta=, gamma=");
  QPrescription p;
  p.alpha = parse_list(alpha_s, N - 1, "alpha");
  p.beta = parse_list(beta_s, N - 1, "beta");
  p.gamma = parse_list(gamma_s, 1, "gamma")[0];
  p.validate();
  return p;
}

}  // namespace afm
