#include "tfd/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tfd::bargmann {

EntireSeries bargmann_from_hermite(const HermiteSeries& s) {
  EntireSeries F;
  F.dim = s.dim;
  F.max_order = s.max_order;
  for (const auto& [a, c] : s.coeffs) {
    LogComplex t = c;
    if (!t.is_zero()) t.log_mag -= 0.5 * hermite::log_multi_factorial(a);
    F.taylor[a] = t;
  }
  return F;
}

HermiteSeries hermite_from_bargmann(const EntireSeries& F) {
  HermiteSeries s;
  s.dim = F.dim;
  s.max_order = F.max_order;
  for (const auto& [a, c] : F.taylor) {
    LogComplex t = c;
    if (!t.is_zero()) t.log_mag += 0.5 * hermite::log_multi_factorial(a);
    s.coeffs[a] = t;
  }
  return s;
}

SeriesValue evaluate(const EntireSeries& F, const std::vector<std::complex<double>>& z) {
  if (static_cast<int>(z.size()) != F.dim) fail(ErrorKind::BadInput, "z dimension mismatch");
  std::vector<double> log_z(z.size());
  std::vector<std::complex<double>> phase_z(z.size());
  for (size_t k = 0; k < z.size(); ++k) {
    double a = std::abs(z[k]);
    log_z[k] = a == 0.0 ? kNegInf : std::log(a);
    phase_z[k] = a == 0.0 ? std::complex<double>{1, 0} : z[k] / a;
  }
  // per-degree accumulation with a common exponent per degree
  int N = F.max_order;
  std::vector<double> deg_log(N + 1, kNegInf);          // max log-term per degree
  std::vector<std::vector<std::pair<double, std::complex<double>>>> deg_terms(N + 1);
  for (const auto& [a, c] : F.taylor) {
    if (c.is_zero()) continue;
    double lm = c.log_mag;
    std::complex<double> ph = c.phase;
    bool zero = false;
    for (size_t k = 0; k < z.size(); ++k) {
      if (a[k] == 0) continue;
      if (log_z[k] == kNegInf) {
        zero = true;
        break;
      }
      lm += a[k] * log_z[k];
      ph *= std::pow(phase_z[k], a[k]);
    }
    if (zero) continue;
    int n = hermite::order(a);
    deg_terms[n].push_back({lm, ph});
    deg_log[n] = std::max(deg_log[n], lm);
  }
  // compensated per-degree sums in linear domain, then a global scaled sum
  double gmax = kNegInf;
  for (int n = 0; n <= N; ++n) gmax = std::max(gmax, deg_log[n]);
  std::complex<double> total{0, 0};
  std::vector<double> deg_sum_log(N + 1, kNegInf);
  if (gmax != kNegInf) {
    for (int n = 0; n <= N; ++n) {
      std::complex<double> acc{0, 0}, comp{0, 0};
      for (const auto& [lm, ph] : deg_terms[n]) {
        std::complex<double> term = std::exp(lm - gmax) * ph;
        std::complex<double> y = term - comp;
        std::complex<double> t = acc + y;
        comp = (t - acc) - y;
        acc = t;
      }
      total += acc;
      double am = std::abs(acc);
      deg_sum_log[n] = am == 0.0 ? kNegInf : gmax + std::log(am);
    }
  }
  SeriesValue out;
  out.value = gmax == kNegInf ? std::complex<double>{0, 0} : std::exp(gmax) * total;
  // tail estimate: extrapolate the last per-degree magnitudes geometrically
  out.log_tail_bound = kNegInf;
  int last = N;
  while (last >= 0 && deg_sum_log[last] == kNegInf) --last;
  if (last >= 2 && deg_sum_log[last - 1] != kNegInf) {
    double q = deg_sum_log[last] - deg_sum_log[last - 1];
    if (q < -0.05) {
      out.log_tail_bound = deg_sum_log[last] + q - std::log(1.0 - std::exp(q));
    } else {
      out.log_tail_bound = kInf;  // not summable by ratio test at this truncation
    }
  }
  return out;
}

std::complex<double> stft_gaussian(const SampledFunction& f, const std::vector<double>& x,
                                   const std::vector<double>& xi) {
  if (static_cast<int>(x.size()) != f.dim || xi.size() != x.size()) {
    fail(ErrorKind::BadInput, "stft point dimension mismatch");
  }
  const int G = f.points;
  const double delta = f.delta();
  const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * f.dim) *
                      std::pow(std::numbers::pi, -0.25 * f.dim);
  // window phi(t - x) = pi^{-d/4} e^{-|t-x|^2/2}; per-axis factor tables
  std::vector<std::vector<std::complex<double>>> fac(f.dim, std::vector<std::complex<double>>(G));
  for (int k = 0; k < f.dim; ++k) {
    for (int i = 0; i < G; ++i) {
      double t = f.axis[i];
      double g = std::exp(-0.5 * (t - x[k]) * (t - x[k]));
      fac[k][i] = g * std::exp(std::complex<double>(0.0, -t * xi[k]));
    }
  }
  std::complex<double> acc{0, 0};
  std::vector<int> ii(f.dim, 0);
  size_t total = f.values.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    std::complex<double> w{1, 0};
    for (int k = f.dim - 1; k >= 0; --k) {
      ii[k] = static_cast<int>(rem % G);
      rem /= G;
      w *= fac[k][ii[k]];
    }
    acc += f.values[flat] * w;
  }
  return acc * norm * std::pow(delta, f.dim);
}

double check_bargmann_stft(const HermiteSeries& s,
                           const std::vector<std::vector<std::complex<double>>>& z_samples,
                           double R, int points) {
  EntireSeries F = bargmann_from_hermite(s);
  SampledFunction f = hermite::synthesize(s, R, points);
  double worst = 0.0;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (const auto& z : z_samples) {
    if (static_cast<int>(z.size()) != s.dim) fail(ErrorKind::BadInput, "z sample dimension mismatch");
    std::vector<double> x(s.dim), xi(s.dim);
    double z2 = 0.0;
    double xdotxi = 0.0;
    std::vector<std::complex<double>> w(s.dim);
    for (int k = 0; k < s.dim; ++k) {
      x[k] = z[k].real();
      xi[k] = z[k].imag();
      z2 += std::norm(z[k]);
      xdotxi += x[k] * xi[k];
      w[k] = std::conj(z[k]) * inv_sqrt2;
    }
    std::complex<double> lhs = stft_gaussian(f, x, xi);
    std::complex<double> rhs = std::pow(2.0 * std::numbers::pi, -0.5 * s.dim) *
                               std::exp(-0.25 * z2) *
                               std::exp(std::complex<double>(0.0, -0.5 * xdotxi)) *
                               evaluate(F, w).value;
    double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

RadialProfile radial_restrict(const EntireSeries& F, const std::vector<double>& u) {
  if (static_cast<int>(u.size()) != F.dim) fail(ErrorKind::BadInput, "direction dimension mismatch");
  double norm2 = 0.0;
  for (double uk : u) norm2 += uk * uk;
  if (std::fabs(norm2 - 1.0) > 1e-12) fail(ErrorKind::BadInput, "direction must be unit length");

  RadialProfile p;
  p.direction = u;
  int N = F.max_order;
  // group terms per degree, Kahan-sum in linear domain under a per-degree shift
  std::vector<std::vector<std::pair<double, double>>> terms(N + 1);  // (log term, sign)
  std::vector<std::vector<std::complex<double>>> phases(N + 1);
  std::vector<double> deg_max(N + 1, kNegInf);
  for (const auto& [a, c] : F.taylor) {
    if (c.is_zero()) continue;
    double lm = c.log_mag;
    double sign = 1.0;
    bool zero = false;
    for (int k = 0; k < F.dim; ++k) {
      if (a[k] == 0) continue;
      if (u[k] == 0.0) {
        zero = true;
        break;
      }
      lm += a[k] * std::log(std::fabs(u[k]));
      if (u[k] < 0 && a[k] % 2 == 1) sign = -sign;
    }
    if (zero) continue;
    int n = hermite::order(a);
    terms[n].push_back({lm, sign});
    phases[n].push_back(c.phase);
    deg_max[n] = std::max(deg_max[n], lm);
  }
  p.coeffs.assign(N + 1, LogComplex{});
  for (int n = 0; n <= N; ++n) {
    if (deg_max[n] == kNegInf) continue;
    std::complex<double> acc{0, 0}, comp{0, 0};
    for (size_t j = 0; j < terms[n].size(); ++j) {
      std::complex<double> term = terms[n][j].second * std::exp(terms[n][j].first - deg_max[n]) * phases[n][j];
      std::complex<double> y = term - comp;
      std::complex<double> t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    double am = std::abs(acc);
    if (am > 0.0) p.coeffs[n] = LogComplex::from_log(deg_max[n] + std::log(am), acc / am);
  }
  return p;
}

double radial_sup_log(const RadialProfile& p, double t) {
  // 256 equispaced arguments on |z| = t; desk degrees are low-frequency in angle
  const int M = 256;
  double lt = std::log(t);
  double best = kNegInf;
  for (int j = 0; j < M; ++j) {
    double th = 2.0 * std::numbers::pi * j / M;
    // evaluate sum_n coeff_n z^n with z = t e^{i th}, scaled by max log term
    double m = kNegInf;
    for (size_t n = 0; n < p.coeffs.size(); ++n) {
      if (p.coeffs[n].is_zero()) continue;
      m = std::max(m, p.coeffs[n].log_mag + n * lt);
    }
    if (m == kNegInf) continue;
    std::complex<double> acc{0, 0};
    for (size_t n = 0; n < p.coeffs.size(); ++n) {
      if (p.coeffs[n].is_zero()) continue;
      double lm = p.coeffs[n].log_mag + n * lt;
      acc += std::exp(lm - m) * p.coeffs[n].phase *
             std::exp(std::complex<double>(0.0, th * static_cast<double>(n)));
    }
    double am = std::abs(acc);
    if (am > 0.0) best = std::max(best, m + std::log(am));
  }
  return best;
}

DegreeBound cauchy_degree_bound(double log_CF, double lambda, int n, int d,
                                const weights::ConjugateTable& conj) {
  if (!(lambda > 0)) fail(ErrorKind::ParameterOutOfRange, "cauchy_degree_bound needs lambda > 0");
  double v = static_cast<double>(n) / lambda;
  double ps = conj.eval(v);
  DegreeBound b;
  if (!std::isfinite(ps)) {
    // ConjugateCutoff: the envelope forces the coefficient to vanish
    b.log_profile_bound = kNegInf;
    b.log_derivative_bound = kNegInf;
    return b;
  }
  b.log_profile_bound = log_CF - lambda * ps;
  b.log_derivative_bound = b.log_profile_bound + n * std::log(static_cast<double>(d));
  return b;
}

double pl_t2_coefficient(double eta) {
  if (!(eta > 0)) fail(ErrorKind::ParameterOutOfRange, "pl_t2_coefficient needs eta > 0");
  return std::sqrt(eta * eta + 0.5 * eta);
}

}  // namespace tfd::bargmann
