#pragma once

namespace afm::exact {

/// log(n!), cached.
double log_factorial(int n);

/// Wigner 3j symbol for integer angular momenta.
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

/// Clebsch-Gordan <j1 m1 j2 m2 | J M>, integer arguments.
double clebsch(int j1, int m1, int j2, int m2, int J, int M);

}  // namespace afm::exact
