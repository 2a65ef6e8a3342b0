// Test-only reference implementations, kept independent of the library's
// computation paths: brute-force conjugates, exact-coefficient Hermite
// polynomials, and high-precision quadrature.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

// sup_{u >= 0} [u v - phi(u)] by dense long-double scan with one refinement.
inline long double brute_force_conjugate(const std::function<long double(long double)>& phi,
                                         long double v, long double u_max, int points = 400000) {
  long double best = -std::numeric_limits<long double>::infinity();
  long double arg = 0;
  for (int i = 0; i <= points; ++i) {
    long double u = u_max * i / points;
    long double val = u * v - phi(u);
    if (val > best) {
      best = val;
      arg = u;
    }
  }
  long double lo = std::max<long double>(0, arg - u_max / points);
  long double hi = arg + u_max / points;
  for (int i = 0; i <= 4000; ++i) {
    long double u = lo + (hi - lo) * i / 4000;
    best = std::max(best, u * v - phi(u));
  }
  return best;
}

// Physicists' Hermite polynomial coefficients (exact integers via the
// three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}).
inline std::vector<std::int64_t> hermite_poly_coeffs(int n) {
  std::vector<std::int64_t> prev = {1}, cur = {0, 2};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    std::vector<std::int64_t> next(k + 2, 0);
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= 2 * k * prev[j];
    prev = cur;
    cur = next;
  }
  return cur;
}

// h_n(x) from the exact polynomial coefficients (valid for small n).
inline double hermite_rodrigues(int n, double x) {
  auto c = hermite_poly_coeffs(n);
  long double p = 0;
  for (size_t j = c.size(); j-- > 0;) p = p * x + static_cast<long double>(c[j]);
  long double norm = std::pow(std::acos(-1.0L), -0.25L);
  long double lf = 0;
  for (int k = 2; k <= n; ++k) lf += std::log(static_cast<long double>(k));
  long double scale = std::exp(-0.5L * (n * std::log(2.0L) + lf) - 0.5L * x * x);
  return static_cast<double>(p * norm * scale);
}

// Adaptive-free composite Simpson on [a, b] in long double.
inline std::complex<long double> simpson(
    const std::function<std::complex<long double>(long double)>& f, long double a, long double b,
    int intervals = 200000) {
  if (intervals % 2) ++intervals;
  long double h = (b - a) / intervals;
  std::complex<long double> acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    acc += f(a + i * h) * static_cast<long double>(i % 2 ? 4 : 2);
  }
  return acc * (h / 3.0L);
}

// H(e^{-b x^2}, n) by high-precision quadrature against the exact-coefficient
// Hermite functions (n small enough for the integer coefficients).
inline double gaussian_width_coeff(double b, int n, double R = 30.0) {
  auto f = [&](long double x) -> std::complex<long double> {
    return std::exp(-static_cast<long double>(b) * x * x) *
           static_cast<long double>(hermite_rodrigues(n, static_cast<double>(x)));
  };
  return static_cast<double>(simpson(f, -R, R).real());
}

}  // namespace oracles
