#include "tfd/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tfd::constructions {

using hermite::MultiIndex;

void ConstructionSpec::validate() const {
  if (n_max < 20) fail(ErrorKind::ParameterOutOfRange, "n_max must be >= 20");
  switch (family) {
    case Family::HermiteRate:
      if (!(r > 0)) fail(ErrorKind::ParameterOutOfRange, "hermite_rate needs r > 0");
      break;
    case Family::GaussianWidth:
      if (!(b > 0) || b == 0.5) {
        fail(ErrorKind::ParameterOutOfRange, "gaussian_width needs b in (0,1/2) U (1/2,inf)");
      }
      break;
    case Family::PolyGaussian:
      if (poly.empty()) fail(ErrorKind::ParameterOutOfRange, "poly_gaussian needs coefficients");
      break;
    case Family::DiagCounterexample:
    case Family::DiagSequenceCounterexample:
      if (dim < 2) fail(ErrorKind::ParameterOutOfRange, "counterexamples need d >= 2");
      if (!weight) fail(ErrorKind::ParameterOutOfRange, "diag families need a weight");
      if (!(lambda > 0)) fail(ErrorKind::ParameterOutOfRange, "lambda must be > 0");
      break;
    case Family::PowerCounterexample:
      if (dim < 2) fail(ErrorKind::ParameterOutOfRange, "counterexamples need d >= 2");
      if (!(a > 0) || !(a < 2)) fail(ErrorKind::ParameterOutOfRange, "power family needs 0 < a < 2");
      break;
  }
}

namespace {

MultiIndex diag_index(int d, int n) { return MultiIndex(d, n); }

}  // namespace

GiGapSequence find_gi_gap_sequence(const WeightFunction& w, int d, int k_max, int n_search) {
  GiGapSequence seq;
  double v_max = k_max * d * (n_search + 1.0);
  auto conj = weights::young_conjugate(w, weights::default_v_grid(v_max, 4096));

  auto log_ratio = [&](int n, double r, double eps) {
    double lf = hermite::log_factorial(d * n);
    double pr = conj.eval(r * d * n);
    double pe = conj.eval(eps * d * n);
    return (0.5 * lf - pr / r) / d - (0.5 * lf - pe / eps);
  };

  int n_prev = 0;
  for (int k = 1; k <= k_max; ++k) {
    double target = std::log(static_cast<double>(k));
    int found = -1;
    double best = kNegInf;
    for (int n = n_prev + 1; n <= n_search; ++n) {
      double rho = log_ratio(n, static_cast<double>(k), 1.0 / k);
      best = std::max(best, rho);
      if (rho >= target) {
        found = n;
        break;
      }
    }
    if (found < 0) {
      seq.best_ratio_unreached = best;
      fail(ErrorKind::SearchExhausted,
           "no n <= " + std::to_string(n_search) + " reaches log k for k=" + std::to_string(k) +
               " (best log-ratio " + std::to_string(best) + "); desk-scale limitation");
    }
    seq.n_k.push_back(found);
    seq.k_found = k;
    n_prev = found;
  }
  // step sequence: r_n = 1 before n_1, r_n = k on [n_k, n_{k+1})
  seq.r_n.assign(n_search + 1, 1.0);
  for (size_t k = 0; k < seq.n_k.size(); ++k) {
    int lo = seq.n_k[k];
    int hi = (k + 1 < seq.n_k.size()) ? seq.n_k[k + 1] : n_search + 1;
    for (int n = lo; n < hi && n <= n_search; ++n) seq.r_n[n] = static_cast<double>(k + 1);
  }
  return seq;
}

BuildResult build(const ConstructionSpec& spec) {
  spec.validate();
  BuildResult out;
  HermiteSeries& s = out.series;
  s.dim = spec.dim;
  s.max_order = spec.n_max;

  switch (spec.family) {
    case Family::HermiteRate: {
      for (const auto& a : hermite::enumerate_indices(spec.dim, spec.n_max)) {
        s.coeffs[a] = LogComplex::from_log(-spec.r * hermite::order(a));
      }
      break;
    }
    case Family::GaussianWidth: {
      double b = spec.b;
      auto f = [b](const std::vector<double>& x) {
        return std::complex<double>(std::exp(-b * x[0] * x[0]), 0.0);
      };
      s = hermite::analyze(f, 1, spec.n_max);
      // odd coefficients vanish by parity; zero them exactly
      for (auto& [a, c] : s.coeffs) {
        if (hermite::order(a) % 2 == 1) c = LogComplex{};
      }
      break;
    }
    case Family::PolyGaussian: {
      auto poly = spec.poly;
      auto f = [poly](const std::vector<double>& x) {
        double p = 0.0;
        for (size_t k = poly.size(); k-- > 0;) p = p * x[0] + poly[k];
        return std::complex<double>(p * std::exp(-0.5 * x[0] * x[0]), 0.0);
      };
      int N = static_cast<int>(poly.size()) - 1;
      s = hermite::analyze(f, 1, N);
      s.max_order = N;
      s.complete = true;  // P e^{-|x|^2/2} has exactly this finite expansion
      // prune quadrature dust so the support is exactly deg P
      double peak = kNegInf;
      for (auto& [a, c] : s.coeffs) peak = std::max(peak, c.log_mag);
      for (auto& [a, c] : s.coeffs) {
        if (c.log_mag < peak + std::log(1e-12)) c = LogComplex{};
      }
      break;
    }
    case Family::DiagCounterexample: {
      const auto& w = *spec.weight;
      double alpha = weights::estimate_alpha(w).checked("alpha");
      double alpha2 = weights::estimate_alpha_tau(w, 2.0).checked("alpha_2");
      // strict inequality eta < lambda / (alpha alpha_2), with margin
      out.eta = 0.9 * spec.lambda / (alpha * alpha2);
      double tau = 2.0 * std::sqrt(static_cast<double>(spec.dim));
      double alpha_tau = weights::estimate_alpha_tau(w, tau).checked("alpha_{2 sqrt d}");
      out.lower_bound_r = 1.1 * alpha_tau / out.eta;
      auto conj = weights::young_conjugate(
          w, weights::default_v_grid(spec.n_max / out.eta * 1.1 + 1.0));
      for (int n = 0; n <= spec.n_max; ++n) {
        double ps = conj.eval(n / out.eta);
        double lm = -n * spec.dim * std::numbers::ln2 + 0.5 * hermite::log_factorial(n) -
                    out.eta * ps;
        s.coeffs[diag_index(spec.dim, n)] = LogComplex::from_log(lm);
      }
      break;
    }
    case Family::DiagSequenceCounterexample: {
      const auto& w = *spec.weight;
      double tau = std::pow(2.0, spec.dim) * std::sqrt(static_cast<double>(spec.dim));
      double L = 1.1 * weights::estimate_alpha_tau(w, tau).checked("alpha_{2^d sqrt d}");
      auto seq = find_gi_gap_sequence(w, spec.dim, 2, std::max(1000, spec.n_max));
      out.s_n.resize(spec.n_max + 1);
      double v_max = 1.0;
      for (int n = 0; n <= spec.n_max; ++n) {
        double rn = n < static_cast<int>(seq.r_n.size()) ? seq.r_n[n] : seq.r_n.back();
        out.s_n[n] = rn / L;
        v_max = std::max(v_max, out.s_n[n] * n);
      }
      auto conj = weights::young_conjugate(w, weights::default_v_grid(v_max * 1.1 + 1.0));
      for (int n = 0; n <= spec.n_max; ++n) {
        double sn = out.s_n[n];
        double lm = -n * spec.dim * std::numbers::ln2 + 0.5 * hermite::log_factorial(n) -
                    conj.eval(sn * n) / sn;
        s.coeffs[diag_index(spec.dim, n)] = LogComplex::from_log(lm);
      }
      break;
    }
    case Family::PowerCounterexample: {
      // log_+ 1 = 0 makes the n = 1 term undefined; the series starts at n = 3
      for (int n = 3; n <= spec.n_max; ++n) {
        double lm = -n * std::log(std::log(static_cast<double>(n))) +
                    (0.5 - 1.0 / spec.a) * hermite::log_factorial(n);
        s.coeffs[diag_index(spec.dim, n)] = LogComplex::from_log(lm);
      }
      break;
    }
  }
  return out;
}

double power_ratio_tail_slope(double a, int d, double b, double h, int n_lo, int n_hi) {
  // log of |H(f,(n..n))| (alpha!)^b / h^{dn} with alpha! = (n!)^d
  std::vector<double> xs, ys;
  for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
    double lf = hermite::log_factorial(n);
    double val = -n * std::log(std::log(static_cast<double>(n))) + (0.5 - 1.0 / a) * lf +
                 b * d * lf - d * n * std::log(h);
    xs.push_back(n);
    ys.push_back(val);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double n = static_cast<double>(xs.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConstructionReport verify_construction(const BuildResult& built, const ConstructionSpec& spec,
                                       const FitConfig& cfg, double R, int points,
                                       const std::vector<double>& lambda_list,
                                       const std::vector<double>& eps_list) {
  ConstructionReport rep;
  const HermiteSeries& s = built.series;

  if (spec.family == Family::HermiteRate) {
    rep.exp_rate = certify::certify_hermite_exponential(s).rate;
    return rep;
  }
  if (spec.family == Family::GaussianWidth || spec.family == Family::PolyGaussian) {
    return rep;  // verified by the hermite/certify suites directly
  }

  const WeightFunction w = spec.family == Family::PowerCounterexample
                               ? WeightFunction::power(spec.a)
                               : *spec.weight;

  // (a) coordinate-wise TF certificates of the synthesized function
  auto f = hermite::synthesize(s, R, points);
  auto fh = hermite::synthesize(hermite::fourier_series(s), R, points);
  rep.tf_pass = true;
  for (double lam : lambda_list) {
    auto checks = certify::certify_tf_at(f, fh, w, lam, /*coordinate=*/true, cfg);
    for (const auto& ck : checks) {
      rep.tf_checks.push_back(ck);
      if (ck.worst_violation > 1e-9) rep.tf_pass = false;
    }
    rep.tf_lambda = lam;
  }

  // (b) diagonal lower bound and the divergence of the sup
  int n_max = spec.n_max;
  if (spec.family == Family::DiagCounterexample ||
      spec.family == Family::DiagSequenceCounterexample) {
    double r = built.lower_bound_r > 0 ? built.lower_bound_r : 1.0;
    auto conj = weights::young_conjugate(
        w, weights::default_v_grid(std::max(1.0, r * spec.dim * (n_max + 1.0))));
    std::vector<double> xs, ys;
    for (int n = 1; n <= n_max; ++n) {
      auto c = s.get(hermite::MultiIndex(spec.dim, n));
      if (c.is_zero()) continue;
      double env = (0.5 * hermite::log_factorial(spec.dim * n) -
                    conj.eval(r * spec.dim * n) / r) / spec.dim;
      if (n >= n_max / 2) {
        xs.push_back(n);
        ys.push_back(c.log_mag - env);
      }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    double cnt = static_cast<double>(xs.size());
    rep.diag_lower_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    rep.diag_lower_holds = rep.diag_lower_slope > -0.02;  // bounded below: no downward trend
  }

  // sup_alpha |H| / (sqrt(alpha!) e^{-phi*(eps|alpha|)/eps}) along the diagonal,
  // from the actual built coefficients
  {
    double v_max = 1.0;
    for (double e : eps_list) v_max = std::max(v_max, e * spec.dim * (n_max + 1.0));
    auto conj = weights::young_conjugate(w, weights::default_v_grid(v_max));
    for (double eps : eps_list) {
      std::vector<double> xs, ys;
      for (int n = 1; n <= n_max; ++n) {
        auto c = s.get(hermite::MultiIndex(spec.dim, n));
        if (c.is_zero()) continue;
        double pe = conj.eval(eps * spec.dim * n);
        if (!std::isfinite(pe)) continue;
        double rho = c.log_mag - (0.5 * hermite::log_factorial(spec.dim * n) - pe / eps);
        if (n >= (3 * n_max) / 4) {
          xs.push_back(n);
          ys.push_back(rho);
        }
      }
      certify::GiGapRow row;
      row.epsilon = eps;
      row.tail_slope = 0.0;
      row.last_value = xs.empty() ? kNegInf : ys.back();
      if (xs.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
          sx += xs[i];
          sy += ys[i];
          sxx += xs[i] * xs[i];
          sxy += xs[i] * ys[i];
        }
        double cnt = static_cast<double>(xs.size());
        row.tail_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
      }
      row.diverges = row.tail_slope > 0.0;
      rep.divergence.push_back(row);
    }
  }

  if (spec.family == Family::PowerCounterexample) {
    double b = (1.0 / spec.a - 0.5) / spec.dim + 0.1;
    rep.power_ratio_slope = power_ratio_tail_slope(spec.a, spec.dim, b, 1.0,
                                                   (3 * n_max) / 4, n_max);
  }
  return rep;
}

}  // namespace tfd::constructions
