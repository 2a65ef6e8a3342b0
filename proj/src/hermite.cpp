#include "tfd/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tfd::hermite {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_multi_factorial(const MultiIndex& a) {
  double s = 0.0;
  for (int k : a) s += log_factorial(k);
  return s;
}

void HermiteSeries::set(const MultiIndex& a, LogComplex c) {
  if (static_cast<int>(a.size()) != dim) fail(ErrorKind::BadInput, "multi-index dimension mismatch");
  coeffs[a] = c;
  max_order = std::max(max_order, order(a));
}

LogComplex HermiteSeries::get(const MultiIndex& a) const {
  auto it = coeffs.find(a);
  return it == coeffs.end() ? LogComplex{} : it->second;
}

double HermiteSeries::sum_sq_log() const {
  std::vector<double> terms;
  terms.reserve(coeffs.size());
  for (const auto& [a, c] : coeffs) terms.push_back(2.0 * c.log_mag);
  return log_sum_exp(terms);
}

int HermiteSeries::support_max_order() const {
  int m = -1;
  for (const auto& [a, c] : coeffs) {
    if (!c.is_zero()) m = std::max(m, order(a));
  }
  return m;
}

SampledFunction SampledFunction::make(int dim, double R, int points) {
  if (points < 3 || points % 2 == 0) fail(ErrorKind::BadInput, "points must be odd and >= 3");
  if (dim < 1 || dim > 3) fail(ErrorKind::BadInput, "dim must be 1..3");
  SampledFunction f;
  f.dim = dim;
  f.R = R;
  f.points = points;
  f.axis.resize(points);
  double delta = 2.0 * R / (points - 1);
  for (int i = 0; i < points; ++i) f.axis[i] = -R + i * delta;
  f.axis[(points - 1) / 2] = 0.0;
  size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= points;
  f.values.assign(total, {0.0, 0.0});
  return f;
}

size_t SampledFunction::index(const std::vector<int>& idx) const {
  size_t r = 0;
  for (int k = 0; k < dim; ++k) r = r * points + idx[k];
  return r;
}

// --- evaluation ----------------------------------------------------------------

namespace {

constexpr double kPiQuarterRoot = 0.7511255444649425;  // pi^{-1/4}

// One recurrence sweep in the scaled representation:
// h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}.
template <typename Sink>
void hermite_sweep(int N, double x, Sink&& sink) {
  ScaledReal hm1{};  // h_{-1} = 0
  ScaledReal h0 = ScaledReal::from_log(-0.25 * std::log(std::numbers::pi) - 0.5 * x * x, 1.0);
  sink(0, h0);
  ScaledReal prev = hm1, cur = h0;
  for (int n = 0; n < N; ++n) {
    double a = std::sqrt(2.0 / (n + 1)) * x;
    double b = -std::sqrt(static_cast<double>(n) / (n + 1));
    ScaledReal next = scaled_fma(a, cur, b, prev);
    sink(n + 1, next);
    prev = cur;
    cur = next;
  }
}

}  // namespace

double hermite_eval(int n, double x) {
  double out = 0.0;
  hermite_sweep(n, x, [&](int k, const ScaledReal& v) {
    if (k == n) out = v.to_double();
  });
  return out;
}

void hermite_values(int N, double x, std::vector<double>& out) {
  out.resize(N + 1);
  hermite_sweep(N, x, [&](int k, const ScaledReal& v) { out[k] = v.to_double(); });
}

GaussHermiteRule gauss_hermite(int m) {
  if (m < 1) fail(ErrorKind::BadInput, "gauss_hermite needs m >= 1");
  GaussHermiteRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  // Newton on h_m with classic initial guesses for the upper half, mirrored.
  std::vector<double> h;
  double z = 0.0;
  for (int i = 0; i < (m + 1) / 2; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(m), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    for (int it = 0; it < 100; ++it) {
      hermite_values(m, z, h);
      double dz = h[m] / (std::sqrt(2.0 * m) * h[m - 1] - z * h[m]);
      z -= dz;
      if (std::fabs(dz) < 1e-14 * std::max(1.0, std::fabs(z))) break;
    }
    hermite_values(m, z, h);
    rule.nodes[i] = z;
    rule.weights[i] = 1.0 / (m * h[m - 1] * h[m - 1]);
  }
  // mirror to the lower half (nodes are symmetric about 0)
  for (int i = 0; i < m / 2; ++i) {
    rule.nodes[m - 1 - i] = -rule.nodes[i];
    rule.weights[m - 1 - i] = rule.weights[i];
  }
  if (m % 2 == 1) {
    rule.nodes[m / 2] = 0.0;
    hermite_values(m, 0.0, h);
    rule.weights[m / 2] = 1.0 / (m * h[m - 1] * h[m - 1]);
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());
  // weights are even in the node, so sorting does not disturb the pairing
  for (int i = 0; i < m / 2; ++i) rule.weights[m - 1 - i] = rule.weights[i];
  return rule;
}

std::vector<MultiIndex> enumerate_indices(int dim, int N) {
  std::vector<MultiIndex> out;
  MultiIndex idx(dim, 0);
  while (true) {
    if (order(idx) <= N) out.push_back(idx);
    int k = dim - 1;
    while (k >= 0) {
      if (++idx[k] <= N) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

// --- analysis ------------------------------------------------------------------

namespace {

void alias_guard(double delta, int N) {
  double bound = std::numbers::pi / (2.0 * std::sqrt(2.0 * N + 1.0));
  if (delta > bound) {
    fail(ErrorKind::AliasError, "grid spacing " + std::to_string(delta) +
                                    " exceeds the order-" + std::to_string(N) +
                                    " bound " + std::to_string(bound));
  }
}

void truncation_guard(const SampledFunction& f) {
  double maxabs = 0.0;
  for (const auto& v : f.values) maxabs = std::max(maxabs, std::abs(v));
  if (maxabs == 0.0) return;
  // inspect all faces of the cube
  double boundary = 0.0;
  std::vector<int> idx(f.dim, 0);
  size_t total = f.values.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    bool on_boundary = false;
    for (int k = f.dim - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % f.points);
      rem /= f.points;
      if (idx[k] == 0 || idx[k] == f.points - 1) on_boundary = true;
    }
    if (on_boundary) boundary = std::max(boundary, std::abs(f.values[flat]));
  }
  if (boundary > 1e-14 * maxabs) {
    fail(ErrorKind::TruncationError, "boundary mass " + std::to_string(boundary / maxabs) +
                                         " of max|f|: enlarge R");
  }
}

}  // namespace

HermiteSeries analyze(const SampledFunction& f, int N) {
  if (f.dim > 3) fail(ErrorKind::BadInput, "dense analysis capped at d <= 3");
  alias_guard(f.delta(), N);
  truncation_guard(f);

  const int G = f.points;
  const double delta = f.delta();
  // per-axis quadrature matrix A[n][i] = h_n(x_i) * delta
  std::vector<std::vector<double>> A(N + 1, std::vector<double>(G));
  std::vector<double> col;
  for (int i = 0; i < G; ++i) {
    hermite_values(N, f.axis[i], col);
    for (int n = 0; n <= N; ++n) A[n][i] = col[n] * delta;
  }

  HermiteSeries s;
  s.dim = f.dim;
  s.max_order = N;
  if (f.dim == 1) {
    for (int n = 0; n <= N; ++n) {
      std::complex<double> acc{0, 0};
      for (int i = 0; i < G; ++i) acc += f.values[i] * A[n][i];
      s.coeffs[{n}] = LogComplex::from(acc);
    }
  } else if (f.dim == 2) {
    // contract axis 1 first: B[n2][i1] = sum_{i2} f[i1][i2] A[n2][i2]
    std::vector<std::vector<std::complex<double>>> B(N + 1, std::vector<std::complex<double>>(G));
    for (int n2 = 0; n2 <= N; ++n2) {
      for (int i1 = 0; i1 < G; ++i1) {
        std::complex<double> acc{0, 0};
        const std::complex<double>* row = &f.values[static_cast<size_t>(i1) * G];
        for (int i2 = 0; i2 < G; ++i2) acc += row[i2] * A[n2][i2];
        B[n2][i1] = acc;
      }
    }
    for (int n1 = 0; n1 <= N; ++n1) {
      for (int n2 = 0; n2 + n1 <= N; ++n2) {
        std::complex<double> acc{0, 0};
        for (int i1 = 0; i1 < G; ++i1) acc += B[n2][i1] * A[n1][i1];
        s.coeffs[{n1, n2}] = LogComplex::from(acc);
      }
    }
  } else {
    // d = 3: contract one axis at a time
    std::vector<std::complex<double>> B(static_cast<size_t>(N + 1) * G * G);
    for (int n3 = 0; n3 <= N; ++n3) {
      for (int i1 = 0; i1 < G; ++i1) {
        for (int i2 = 0; i2 < G; ++i2) {
          std::complex<double> acc{0, 0};
          const std::complex<double>* row = &f.values[(static_cast<size_t>(i1) * G + i2) * G];
          for (int i3 = 0; i3 < G; ++i3) acc += row[i3] * A[n3][i3];
          B[(static_cast<size_t>(n3) * G + i1) * G + i2] = acc;
        }
      }
    }
    std::vector<std::complex<double>> C(static_cast<size_t>(N + 1) * (N + 1) * G);
    for (int n3 = 0; n3 <= N; ++n3) {
      for (int n2 = 0; n2 + n3 <= N; ++n2) {
        for (int i1 = 0; i1 < G; ++i1) {
          std::complex<double> acc{0, 0};
          for (int i2 = 0; i2 < G; ++i2) {
            acc += B[(static_cast<size_t>(n3) * G + i1) * G + i2] * A[n2][i2];
          }
          C[(static_cast<size_t>(n3) * (N + 1) + n2) * G + i1] = acc;
        }
      }
    }
    for (int n1 = 0; n1 <= N; ++n1) {
      for (int n2 = 0; n2 + n1 <= N; ++n2) {
        for (int n3 = 0; n3 + n2 + n1 <= N; ++n3) {
          std::complex<double> acc{0, 0};
          for (int i1 = 0; i1 < G; ++i1) {
            acc += C[(static_cast<size_t>(n3) * (N + 1) + n2) * G + i1] * A[n1][i1];
          }
          s.coeffs[{n1, n2, n3}] = LogComplex::from(acc);
        }
      }
    }
  }
  return s;
}

HermiteSeries analyze(const std::function<std::complex<double>(const std::vector<double>&)>& f,
                      int dim, int N, int quad_points) {
  if (dim < 1 || dim > 3) fail(ErrorKind::BadInput, "dense analysis capped at d <= 3");
  int m = quad_points > 0 ? quad_points : 2 * N + 64;
  auto rule = gauss_hermite(m);
  // per-axis h_n values at the nodes
  std::vector<std::vector<double>> H(m);
  for (int i = 0; i < m; ++i) hermite_values(N, rule.nodes[i], H[i]);

  HermiteSeries s;
  s.dim = dim;
  s.max_order = N;
  auto indices = enumerate_indices(dim, N);
  std::vector<double> x(dim);
  std::vector<int> ii(dim, 0);
  // accumulate over the tensor rule; for desk-scale m^d this is fine
  std::vector<std::complex<double>> acc(indices.size(), {0, 0});
  size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= m;
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    double wprod = 1.0;
    for (int k = dim - 1; k >= 0; --k) {
      ii[k] = static_cast<int>(rem % m);
      rem /= m;
      x[k] = rule.nodes[ii[k]];
      wprod *= rule.weights[ii[k]];
    }
    std::complex<double> fv = f(x);
    if (fv == std::complex<double>{0, 0}) continue;
    for (size_t j = 0; j < indices.size(); ++j) {
      double hp = 1.0;
      for (int k = 0; k < dim; ++k) hp *= H[ii[k]][indices[j][k]];
      acc[j] += fv * hp * wprod;
    }
  }
  for (size_t j = 0; j < indices.size(); ++j) s.coeffs[indices[j]] = LogComplex::from(acc[j]);
  return s;
}

SampledFunction synthesize(const HermiteSeries& s, double R, int points) {
  SampledFunction f = SampledFunction::make(s.dim, R, points);
  f.abs_sum.assign(f.values.size(), 0.0);
  if (!s.complete) f.tail_bound.assign(f.values.size(), 0.0);
  const int G = points;
  int N = std::max(s.max_order, s.support_max_order());
  // top two populated degrees feed the truncation proxy (truncated series only)
  int top = s.complete ? N + 2 : s.support_max_order();
  std::vector<std::vector<double>> H(G);
  std::vector<double> col;
  for (int i = 0; i < G; ++i) {
    hermite_values(std::max(N, 0), f.axis[i], col);
    H[i] = col;
  }
  for (const auto& [a, c] : s.coeffs) {
    if (c.is_zero()) continue;
    std::complex<double> cv = c.value();
    double av = std::abs(cv);
    bool is_tail = order(a) >= top - 1;
    if (s.dim == 1) {
      for (int i = 0; i < G; ++i) {
        f.values[i] += cv * H[i][a[0]];
        double m = av * std::fabs(H[i][a[0]]);
        f.abs_sum[i] += m;
        if (is_tail) f.tail_bound[i] += m;
      }
    } else if (s.dim == 2) {
      for (int i1 = 0; i1 < G; ++i1) {
        double h1 = H[i1][a[0]];
        if (h1 == 0.0) continue;
        std::complex<double> ch = cv * h1;
        double ah = av * std::fabs(h1);
        std::complex<double>* row = &f.values[static_cast<size_t>(i1) * G];
        double* arow = &f.abs_sum[static_cast<size_t>(i1) * G];
        double* trow = &f.tail_bound[static_cast<size_t>(i1) * G];
        for (int i2 = 0; i2 < G; ++i2) {
          row[i2] += ch * H[i2][a[1]];
          double m = ah * std::fabs(H[i2][a[1]]);
          arow[i2] += m;
          if (is_tail) trow[i2] += m;
        }
      }
    } else {
      for (int i1 = 0; i1 < G; ++i1) {
        double h1 = H[i1][a[0]];
        if (h1 == 0.0) continue;
        for (int i2 = 0; i2 < G; ++i2) {
          std::complex<double> ch = cv * h1 * H[i2][a[1]];
          double ah = av * std::fabs(h1 * H[i2][a[1]]);
          std::complex<double>* row = &f.values[(static_cast<size_t>(i1) * G + i2) * G];
          double* arow = &f.abs_sum[(static_cast<size_t>(i1) * G + i2) * G];
          double* trow = &f.tail_bound[(static_cast<size_t>(i1) * G + i2) * G];
          for (int i3 = 0; i3 < G; ++i3) {
            row[i3] += ch * H[i3][a[2]];
            double m = ah * std::fabs(H[i3][a[2]]);
            arow[i3] += m;
            if (is_tail) trow[i3] += m;
          }
        }
      }
    }
  }
  return f;
}

HermiteSeries fourier_series(const HermiteSeries& s) {
  // (-i)^{|alpha| mod 4} in exact phase arithmetic
  static const std::complex<double> rot[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  HermiteSeries out = s;
  for (auto& [a, c] : out.coeffs) {
    if (c.is_zero()) continue;
    c.phase *= rot[order(a) % 4];
  }
  return out;
}

}  // namespace tfd::hermite
