#pragma once

#include <complex>

namespace cvqkd {

// Largest order covered by the factorial table. Polynomial sums that need
// factorials of higher order are rejected (all shipped use cases have
// k, l <= 1, so the bound is generous).
inline constexpr int kMaxFactorialOrder = 64;

// n! as a double for n in [0, kMaxFactorialOrder]; throws DomainError beyond.
double factorial(int n);

// Laguerre polynomial L_n(x), evaluated by the three-term recurrence
// (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}. Stable for n <= 64, |x| <= 100.
double laguerre(int n, double x);

// Bivariate Hermite polynomial
//   H_{p,q}(e1, e2) = sum_{r=0}^{min(p,q)}
//       (-1)^r p! q! / (r! (p-r)! (q-r)!) * e1^{p-r} * e2^{q-r}.
std::complex<double> bivariate_hermite(int p, int q, std::complex<double> e1,
                                       std::complex<double> e2);

// Physicists' Hermite polynomial H_n(x) via H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_phys(int n, double x);

}  // namespace cvqkd
