#include "afm/exact/wigner.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace afm::exact {

double log_factorial(int n) {
  static std::vector<double> table{0.0};
  static std::mutex mu;
  if (n < 0) return 0.0;
  if (static_cast<size_t>(n) >= table.size()) {
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<size_t>(n) >= table.size())
      table.push_back(table.back() + std::log(static_cast<double>(table.size())));
  }
  return table[n];
}

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0.0;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;
  const int t1 = j2 - m1 - j3;
  const int t2 = j1 + m2 - j3;
  const int t3 = j1 + j2 - j3;
  const int t4 = j1 - m1;
  const int t5 = j2 + m2;
  const int tmin = std::max(0, std::max(t1, t2));
  const int tmax = std::min(t3, std::min(t4, t5));
  double sum = 0.0;
  for (int t = tmin; t <= tmax; ++t) {
    double lg = log_factorial(t) + log_factorial(t - t1) + log_factorial(t - t2) + log_factorial(t3 - t) +
                log_factorial(t4 - t) + log_factorial(t5 - t);
    sum += ((t & 1) ? -1.0 : 1.0) * std::exp(-lg);
  }
  double delta = 0.5 * (log_factorial(j1 + j2 - j3) + log_factorial(j1 - j2 + j3) +
                        log_factorial(-j1 + j2 + j3) - log_factorial(j1 + j2 + j3 + 1));
  double pref = 0.5 * (log_factorial(j1 + m1) + log_factorial(j1 - m1) + log_factorial(j2 + m2) +
                       log_factorial(j2 - m2) + log_factorial(j3 + m3) + log_factorial(j3 - m3));
  double phase = ((j1 - j2 - m3) & 1) ? -1.0 : 1.0;
  return phase * std::exp(delta + pref) * sum;
}

double clebsch(int j1, int m1, int j2, int m2, int J, int M) {
  double phase = ((j1 - j2 + M) & 1) ? -1.0 : 1.0;
  return phase * std::sqrt(2.0 * J + 1.0) * wigner3j(j1, j2, J, m1, m2, -M);
}

}  // namespace afm::exact
