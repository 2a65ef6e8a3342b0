#pragma once

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "tfd/error.hpp"
#include "tfd/logdomain.hpp"

namespace tfd::hermite {

using MultiIndex = std::vector<int>;

inline int order(const MultiIndex& a) {
  int s = 0;
  for (int k : a) s += k;
  return s;
}

// Graded lexicographic: by |alpha| first, then lex. All series iteration is
// in this order, so outputs are deterministic across runs.
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int oa = order(a), ob = order(b);
    if (oa != ob) return oa < ob;
    return a < b;
  }
};

double log_factorial(int n);
double log_multi_factorial(const MultiIndex& a);  // log(alpha!)

// Sparse multi-index -> coefficient map in log-magnitude + phase form.
struct HermiteSeries {
  int dim = 1;
  int max_order = 0;
  // A complete series IS the function (finite support by construction);
  // otherwise it truncates an infinite expansion and synthesized samples
  // carry a truncation-tail channel.
  bool complete = false;
  std::map<MultiIndex, LogComplex, GradedLex> coeffs;

  void set(const MultiIndex& a, LogComplex c);
  LogComplex get(const MultiIndex& a) const;

  double sum_sq_log() const;  // log of sum |H(f,alpha)|^2
  int support_max_order() const;
};

// Tensor-grid samples on [-R, R]^d, identical symmetric axis for every
// coordinate; delta * (points - 1) = 2R and points is odd so 0 is a node.
struct SampledFunction {
  int dim = 1;
  double R = 0.0;
  int points = 0;
  std::vector<double> axis;                  // the shared per-axis nodes
  std::vector<std::complex<double>> values;  // row-major, axis 0 slowest
  // When produced by synthesize: sum of |coefficient * basis| per point.
  // |values[i]| << abs_sum[i] marks catastrophic cancellation; certification
  // treats such samples as numerically void. Empty for external samples.
  std::vector<double> abs_sum;
  // Contribution of the top two populated degrees per point: a proxy for the
  // series-truncation error. Samples with |values[i]| below a few multiples
  // of this no longer represent the underlying function.
  std::vector<double> tail_bound;

  static SampledFunction make(int dim, double R, int points);
  double delta() const { return axis.size() > 1 ? axis[1] - axis[0] : 0.0; }
  size_t index(const std::vector<int>& idx) const;
};

// Normalized Hermite function h_n(x); three-term recurrence in a scaled
// mantissa/exponent representation, total for n <= 1e4, |x| <= 200.
double hermite_eval(int n, double x);
// h_0..h_N at x in one sweep.
void hermite_values(int N, double x, std::vector<double>& out);

// Gauss-Hermite nodes (zeros of h_m) and companion weights such that
// int f(x) h_n(x) dx ~= sum_i weight_i * f(node_i) * h_n(node_i) for
// f = (polynomial) * e^{-x^2/2}.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // 1 / (m * h_{m-1}(node)^2)
};
GaussHermiteRule gauss_hermite(int m);

// Hermite analysis of grid samples by tensorized trapezoid quadrature.
// Guards: boundary decay below 1e-14 * max|f| (TruncationError) and the
// Nyquist-type spacing bound delta <= pi / (2 sqrt(2N+1)) (AliasError).
HermiteSeries analyze(const SampledFunction& f, int N);

// Analysis of a callable via Gauss-Hermite quadrature (d <= 3).
HermiteSeries analyze(const std::function<std::complex<double>(const std::vector<double>&)>& f,
                      int dim, int N, int quad_points = 0);

SampledFunction synthesize(const HermiteSeries& s, double R, int points);

// hat(h_alpha) = (-i)^{|alpha|} h_alpha: rotate phases, magnitudes unchanged.
HermiteSeries fourier_series(const HermiteSeries& s);

// All multi-indices with |alpha| <= N in graded-lex order.
std::vector<MultiIndex> enumerate_indices(int dim, int N);

}  // namespace tfd::hermite
