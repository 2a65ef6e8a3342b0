#include "tfd/certify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tfd::certify {

FitConfig FitConfig::from_file(const std::string& path) {
  FitConfig cfg;
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open config: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string k = line.substr(0, eq);
    double v = std::stod(line.substr(eq + 1));
    if (k == "bulk_max") cfg.bulk_max = v;
    else if (k == "tail_frac") cfg.tail_frac = v;
    else if (k == "theorem_slack") cfg.theorem_slack = v;
    else if (k == "log_floor") cfg.log_floor = v;
    else if (k == "hermite_slack") cfg.hermite_slack = v;
    else if (k == "bulk_order") cfg.bulk_order = static_cast<int>(v);
    else fail(ErrorKind::BadInput, "unknown config key: " + k);
  }
  return cfg;
}

namespace {

// g(x) = log|f(x)| + rho^2/2 at each grid point, where rho is |x| (uniform)
// or |x_j| (coordinate). Points below the log floor are dropped.
struct FitSamples {
  std::vector<double> rho;
  std::vector<double> g;
};

FitSamples collect(const SampledFunction& f, int axis, double log_floor) {
  FitSamples out;
  const int G = f.points;
  for (size_t flat = 0; flat < f.values.size(); ++flat) {
    size_t rem = flat;
    double rho2 = 0.0;
    double rj = 0.0;
    for (int k = f.dim - 1; k >= 0; --k) {
      int i = static_cast<int>(rem % G);
      rem /= G;
      double xk = f.axis[i];
      rho2 += xk * xk;
      if (k == axis) rj = std::fabs(xk);
    }
    double rho = axis < 0 ? std::sqrt(rho2) : rj;
    double a = std::abs(f.values[flat]);
    if (a == 0.0) continue;
    double lg = std::log(a);
    if (lg < log_floor) continue;  // excluded, not clamped: no fake slack
    // synthesized samples destroyed by cancellation carry no information
    if (!f.abs_sum.empty() && a < 1e-12 * f.abs_sum[flat]) continue;
    // where the top populated degrees dominate, a truncated series no longer
    // represents the underlying function
    if (!f.tail_bound.empty() && a < 10.0 * f.tail_bound[flat]) continue;
    out.rho.push_back(rho);
    out.g.push_back(lg + 0.5 * rho * rho);
  }
  return out;
}

struct SideFit {
  double rate;
  double rate_tail;
  double log_constant;
  double residual;
  double min_slack;
  bool no_decay;
};

SideFit fit_side(const FitSamples& samples, const WeightFunction& w, double R,
                 const FitConfig& cfg) {
  double tail_end = cfg.tail_frac * R;
  // fixed point of (C, lambda): C = max_bulk(g - lambda w), lambda = max_tail (g - C)/w
  double lambda = 0.0;
  double C = kNegInf;
  for (int it = 0; it < 40; ++it) {
    double C_new = kNegInf;
    for (size_t i = 0; i < samples.rho.size(); ++i) {
      if (samples.rho[i] > cfg.bulk_max) continue;
      C_new = std::max(C_new, samples.g[i] - lambda * w.eval(samples.rho[i]));
    }
    if (C_new == kNegInf) fail(ErrorKind::BadInput, "no usable bulk samples");
    double lam_new = 0.0;
    for (size_t i = 0; i < samples.rho.size(); ++i) {
      double r = samples.rho[i];
      if (r < cfg.bulk_max || r > tail_end) continue;
      double wv = w.eval(r);
      if (wv <= 0) continue;
      lam_new = std::max(lam_new, (samples.g[i] - C_new) / wv);
    }
    if (std::fabs(lam_new - lambda) <= 1e-12 * std::max(1.0, lam_new) && it > 0) {
      lambda = lam_new;
      C = C_new;
      break;
    }
    lambda = lam_new;
    C = C_new;
  }
  SideFit fit;
  fit.rate = lambda;
  fit.log_constant = C;
  // slack of the claimed envelope over the whole fit region
  double max_slack = -kInf, min_slack = kInf;
  double inner_max = 0.0, outer_max = 0.0;
  for (size_t i = 0; i < samples.rho.size(); ++i) {
    double r = samples.rho[i];
    if (r < cfg.bulk_max || r > tail_end) continue;
    double wv = w.eval(r);
    if (wv <= 0) continue;
    double slack = lambda * wv + C - samples.g[i];
    max_slack = std::max(max_slack, slack);
    min_slack = std::min(min_slack, slack);
    double lam_pt = (samples.g[i] - C) / wv;
    double mid = 0.5 * (cfg.bulk_max + tail_end);
    if (r <= mid) inner_max = std::max(inner_max, lam_pt);
    else outer_max = std::max(outer_max, lam_pt);
  }
  fit.residual = max_slack == -kInf ? 0.0 : max_slack;
  fit.min_slack = min_slack == kInf ? 0.0 : min_slack;
  // NoDecay heuristic: the pointwise rate still climbing steeply at the rim,
  // by an amount that is not just anchor noise
  fit.no_decay = lambda > 0 && outer_max > 1.5 * std::max(inner_max, 1e-12) &&
                 outer_max - inner_max > 0.1;

  // Tail-extrapolated rate: for slowly varying weights the pointwise rate
  // approaches its limsup like 1/log rho, so fit the per-radius maxima
  // quadratically in 1/log rho and take the intercept. For power weights the
  // pointwise rate settles and the intercept reproduces the plain maximum.
  fit.rate_tail = lambda;
  {
    // fit window: past the bulk-anchor influence, 1/log rho <= 0.8
    const int bins = 32;
    double lo = std::max({cfg.bulk_max, 1.7, std::exp(1.25)}), hi = tail_end;
    if (hi > lo * 1.2) {
      std::vector<double> bmax(bins, -kInf);
      for (size_t i = 0; i < samples.rho.size(); ++i) {
        double r = samples.rho[i];
        if (r < lo || r > hi) continue;
        double wv = w.eval(r);
        if (wv <= 0) continue;
        int b = std::min(bins - 1, static_cast<int>(bins * std::log(r / lo) / std::log(hi / lo)));
        bmax[b] = std::max(bmax[b], (samples.g[i] - C) / wv);
      }
      double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
      int used = 0;
      for (int b = 0; b < bins; ++b) {
        if (bmax[b] == -kInf) continue;
        double rc = lo * std::pow(hi / lo, (b + 0.5) / bins);
        double x = 1.0 / std::log(rc);
        double y = bmax[b];
        s0 += 1; s1 += x; s2 += x * x; s3 += x * x * x; s4 += x * x * x * x;
        b0 += y; b1 += x * y; b2 += x * x * y;
        ++used;
      }
      if (used >= 6) {
        double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) +
                     s2 * (s1 * s3 - s2 * s2);
        if (std::fabs(det) > 1e-30) {
          double c0 = (b0 * (s2 * s4 - s3 * s3) - s1 * (b1 * s4 - b2 * s3) +
                       s2 * (b1 * s3 - b2 * s2)) / det;
          fit.rate_tail = std::max(0.0, c0);
        }
      }
    }
  }
  return fit;
}

}  // namespace

std::vector<DecayCertificate> certify_tf(const SampledFunction& f, const SampledFunction& fhat,
                                         const WeightFunction& w, bool coordinate_mode,
                                         const FitConfig& cfg) {
  if (w.eval(cfg.bulk_max + 0.01) <= 0.0) {
    fail(ErrorKind::BadInput, "weight vanishes on the fit region");
  }
  std::vector<DecayCertificate> out;
  int axes = coordinate_mode ? f.dim : 1;
  for (int j = 0; j < axes; ++j) {
    int axis = coordinate_mode ? j : -1;
    SideFit a = fit_side(collect(f, axis, cfg.log_floor), w, f.R, cfg);
    SideFit b = fit_side(collect(fhat, axis, cfg.log_floor), w, fhat.R, cfg);
    if (a.no_decay || b.no_decay) {
      fail(ErrorKind::NoDecay, "tail grows faster than any lambda*omega envelope");
    }
    DecayCertificate c;
    c.kind = coordinate_mode ? CertKind::TfCoordinate : CertKind::TfUniform;
    c.axis = axis;
    c.weight = w.describe();
    c.rate = std::max(a.rate, b.rate);
    c.rate_tail = std::max(a.rate_tail, b.rate_tail);
    c.log_constant = std::max(a.log_constant, b.log_constant);
    c.residual = std::max(a.residual, b.residual);
    c.min_slack = std::min(a.min_slack, b.min_slack);
    // settled when the window rate already agrees with its extrapolated limit
    c.settled = std::fabs(c.rate - c.rate_tail) <= 0.10 * std::max(c.rate, 1e-12);
    out.push_back(c);
  }
  return out;
}

std::vector<EnvelopeCheck> certify_tf_at(const SampledFunction& f, const SampledFunction& fhat,
                                         const WeightFunction& w, double lambda,
                                         bool coordinate_mode, const FitConfig& cfg) {
  std::vector<EnvelopeCheck> out;
  int axes = coordinate_mode ? f.dim : 1;
  for (int j = 0; j < axes; ++j) {
    int axis = coordinate_mode ? j : -1;
    EnvelopeCheck ck;
    ck.axis = axis;
    ck.worst_violation = -kInf;
    ck.log_constant = kNegInf;
    for (const SampledFunction* side : {&f, &fhat}) {
      FitSamples s = collect(*side, axis, cfg.log_floor);
      double C = kNegInf;
      for (size_t i = 0; i < s.rho.size(); ++i) {
        if (s.rho[i] <= cfg.bulk_max) C = std::max(C, s.g[i]);
      }
      double tail_end = cfg.tail_frac * side->R;
      for (size_t i = 0; i < s.rho.size(); ++i) {
        double r = s.rho[i];
        if (r < cfg.bulk_max || r > tail_end) continue;
        ck.worst_violation = std::max(ck.worst_violation, s.g[i] - lambda * w.eval(r) - C);
      }
      ck.log_constant = std::max(ck.log_constant, C);
    }
    out.push_back(ck);
  }
  return out;
}

DecayCertificate certify_hermite(const HermiteSeries& s, const WeightFunction& w,
                                 const std::vector<double>& r_grid, double exponent,
                                 const FitConfig& cfg) {
  if (r_grid.empty()) fail(ErrorKind::BadInput, "empty r_grid");
  DecayCertificate cert;
  cert.kind = CertKind::Hermite;
  cert.weight = w.describe();
  int nmax = s.support_max_order();
  cert.under_determined = nmax < 20;

  double v_max = 0.0;
  for (double r : r_grid) v_max = std::max(v_max, r * (nmax + 1.0));
  auto conj = weights::young_conjugate(w, weights::default_v_grid(std::max(v_max, 1.0)));

  std::vector<double> sorted = r_grid;
  std::sort(sorted.begin(), sorted.end());
  bool found = false;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    double r = *it;
    // D_alpha = log|H| - exponent*(log sqrt(alpha!) - phi*(r|alpha|)/r)
    double C = kNegInf;
    double worst = kNegInf;
    bool cutoff_violated = false;
    for (const auto& [a, c] : s.coeffs) {
      int n = hermite::order(a);
      double ps = conj.eval(r * n);
      double D;
      if (!std::isfinite(ps)) {
        // envelope is exactly zero here: any nonzero coefficient disqualifies r
        if (!c.is_zero()) cutoff_violated = true;
        continue;
      }
      if (c.is_zero()) continue;
      D = c.log_mag - exponent * (0.5 * hermite::log_multi_factorial(a) - ps / r);
      if (n <= cfg.bulk_order) C = std::max(C, D);
      else worst = std::max(worst, D);
    }
    if (cutoff_violated) continue;
    if (C == kNegInf) C = 0.0;
    if (worst == kNegInf || worst <= C + cfg.hermite_slack) {
      cert.rate = r;
      cert.log_constant = C;
      cert.residual = worst == kNegInf ? 0.0 : worst - C;
      found = true;
      break;
    }
  }
  if (!found) {
    cert.rate = 0.0;
    cert.log_constant = kNegInf;
    cert.residual = kInf;
  }
  if (conj.degenerate && found) {
    cert.cutoff = std::floor(conj.cutoff_v0 / cert.rate + 1e-9);
  }
  return cert;
}

ExponentialRate certify_hermite_exponential(const HermiteSeries& s) {
  int nmax = s.support_max_order();
  if (nmax < 4) fail(ErrorKind::UnderDetermined, "support too small for a tail slope");
  // per-degree max log|H|
  std::vector<double> m(nmax + 1, kNegInf);
  for (const auto& [a, c] : s.coeffs) {
    if (c.is_zero()) continue;
    int n = hermite::order(a);
    m[n] = std::max(m[n], c.log_mag);
  }
  // least squares over the upper half of the populated degrees
  std::vector<std::pair<double, double>> pts;
  for (int n = nmax / 2; n <= nmax; ++n) {
    if (m[n] != kNegInf) pts.push_back({static_cast<double>(n), m[n]});
  }
  if (pts.size() < 2) fail(ErrorKind::UnderDetermined, "tail has fewer than two populated degrees");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double icpt = (sy - slope * sx) / n;
  ExponentialRate out;
  out.rate = -slope;
  out.residual = 0.0;
  for (auto& [x, y] : pts) out.residual = std::max(out.residual, std::fabs(icpt + slope * x - y));
  return out;
}

ImplicationReport verify_implication(Direction dir, const WeightFunction& w, int d,
                                     const Instance& instance, const FitConfig& cfg) {
  ImplicationReport rep;
  SampledFunction f = hermite::synthesize(instance.series, instance.R, instance.points);
  SampledFunction fh = hermite::synthesize(hermite::fourier_series(instance.series),
                                           instance.R, instance.points);
  const bool is_t2 = w.family() == weights::Family::GaussianLimit ||
                     (w.family() == weights::Family::Power && w.param() == 2.0);

  switch (dir) {
    case Direction::TfToHermite: {
      double lambda = 0.0;
      for (const SampledFunction* side : {&f, &fh}) {
        auto certs = certify_tf(*side, *side, w, /*coordinate=*/false, cfg);
        lambda = std::max(lambda, std::min(certs[0].rate, certs[0].rate_tail));
      }
      rep.input_rate = lambda;
      if (is_t2) {
        rep.test_id = "t2:tf->hermite(d=" + std::to_string(d) + ")";
        if (lambda >= 0.25) {
          fail(ErrorKind::ParameterOutOfRange,
               "tf->hermite (t^2) requires lambda < 1/4; measured " + std::to_string(lambda));
        }
        rep.paper_bound = 2.0 * std::sqrt(static_cast<double>(d)) *
                          std::pow(4.0 * lambda * lambda + 0.5 * lambda, 0.25);
        rep.measured = std::exp(-certify_hermite_exponential(instance.series).rate);
        rep.slack = rep.paper_bound / std::max(rep.measured, 1e-300);
        rep.pass = rep.measured <= rep.paper_bound * (1.0 + cfg.theorem_slack);
      } else {
        rep.test_id = "gen:tf->hermite(" + w.describe() + ",d=" + std::to_string(d) + ")";
        auto tc = weights::theorem_constants(w, d);
        double h1d = tc.h1_d.checked("H1_d");
        double r_bound = 1.0 / (h1d * std::max(lambda, 1e-12));
        rep.paper_bound = r_bound;
        double r_test = 0.9 * r_bound;
        auto cert = certify_hermite(instance.series, w, {r_test}, 1.0, cfg);
        rep.measured = cert.rate;
        rep.slack = cert.rate > 0 ? cfg.hermite_slack - cert.residual : 0.0;
        rep.pass = cert.rate == r_test;
      }
      break;
    }
    case Direction::HermiteToTf: {
      if (is_t2) {
        rep.test_id = "t2:hermite->tf(d=" + std::to_string(d) + ")";
        double h = instance.rate_hint ? std::exp(-*instance.rate_hint)
                                      : std::exp(-certify_hermite_exponential(instance.series).rate);
        rep.input_rate = h;
        if (!(h < 1.0 / std::sqrt(4.0 * d))) {
          fail(ErrorKind::ParameterOutOfRange, "hermite->tf (t^2) requires h < 1/sqrt(4d)");
        }
        rep.paper_bound = 4.0 * d * h * h;  // envelope valid for lambda above this
        double lam = instance.lambda_check ? *instance.lambda_check
                                           : rep.paper_bound * (1.0 + cfg.theorem_slack);
        auto checks = certify_tf_at(f, fh, w, lam, /*coordinate=*/false, cfg);
        rep.measured = checks[0].worst_violation;
        rep.slack = -rep.measured;
        rep.pass = lam > rep.paper_bound && rep.measured <= 1e-9;
      } else {
        rep.test_id = "gen:hermite->tf(" + w.describe() + ",d=" + std::to_string(d) + ")";
        double r = instance.rate_hint.value_or(1.0);
        rep.input_rate = r;
        auto tc = weights::theorem_constants(w, d);
        double h2 = tc.h2.checked("H2");
        rep.paper_bound = h2 / r;  // lambda must exceed this
        // per side, the limsup lies between the window maximum and the
        // 1/log-extrapolated value (the window max overshoots when the
        // pointwise rate falls toward its limit, undershoots when it rises);
        // min(rate, rate_tail) is the bracket end consistent with both
        rep.measured = 0.0;
        for (const SampledFunction* side : {&f, &fh}) {
          auto certs = certify_tf(*side, *side, w, /*coordinate=*/false, cfg);
          rep.measured = std::max(rep.measured, std::min(certs[0].rate, certs[0].rate_tail));
        }
        rep.slack = rep.paper_bound * (1.0 + cfg.theorem_slack) - rep.measured;
        rep.pass = rep.measured <= rep.paper_bound * (1.0 + cfg.theorem_slack);
      }
      break;
    }
    case Direction::CoordinateToHermite: {
      double lambda = 0.0;
      for (const SampledFunction* side : {&f, &fh}) {
        auto certs = certify_tf(*side, *side, w, /*coordinate=*/true, cfg);
        for (const auto& c : certs) lambda = std::max(lambda, std::min(c.rate, c.rate_tail));
      }
      rep.input_rate = lambda;
      if (is_t2) {
        rep.test_id = "t2:coord->hermite(d=" + std::to_string(d) + ")";
        if (lambda >= 0.25) {
          fail(ErrorKind::ParameterOutOfRange, "coord->hermite (t^2) requires lambda < 1/4");
        }
        rep.paper_bound = std::pow(2.0, 1.0 / d) *
                          std::pow(4.0 * lambda * lambda + 0.5 * lambda, 0.25 / d);
        rep.measured = std::exp(-certify_hermite_exponential(instance.series).rate);
        rep.slack = rep.paper_bound / std::max(rep.measured, 1e-300);
        rep.pass = rep.measured <= rep.paper_bound * (1.0 + cfg.theorem_slack);
      } else {
        rep.test_id = "gen:coord->hermite(" + w.describe() + ",d=" + std::to_string(d) + ")";
        auto tc = weights::theorem_constants(w, d);
        double h1 = tc.h1_coord.checked("H1");
        double r_bound = 1.0 / (h1 * std::max(lambda, 1e-12));
        rep.paper_bound = r_bound;
        double r_test = 0.9 * r_bound;
        auto cert = certify_hermite(instance.series, w, {r_test}, 1.0 / d, cfg);
        rep.measured = cert.rate;
        rep.slack = cert.rate > 0 ? cfg.hermite_slack - cert.residual : 0.0;
        rep.pass = cert.rate == r_test;
      }
      break;
    }
  }
  return rep;
}

std::vector<GiGapRow> check_gi_sequence_gap(const WeightFunction& w, int d, double r,
                                            const std::vector<double>& eps_list, int n_max) {
  double v_max = 0.0;
  for (double e : eps_list) v_max = std::max(v_max, e * d * (n_max + 1.0));
  v_max = std::max(v_max, r * d * (n_max + 1.0));
  auto conj = weights::young_conjugate(w, weights::default_v_grid(v_max));

  std::vector<GiGapRow> rows;
  for (double eps : eps_list) {
    std::vector<double> xs, ys;
    for (int n = 1; n <= n_max; ++n) {
      double lf = hermite::log_factorial(d * n);
      double pr = conj.eval(r * d * n);
      double pe = conj.eval(eps * d * n);
      if (!std::isfinite(pr) || !std::isfinite(pe)) continue;
      double rho = (0.5 * lf - pr / r) / d - (0.5 * lf - pe / eps);
      if (n >= (3 * n_max) / 4) {
        xs.push_back(n);
        ys.push_back(rho);
      }
    }
    GiGapRow row;
    row.epsilon = eps;
    if (xs.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
      }
      double n = static_cast<double>(xs.size());
      row.tail_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      row.last_value = ys.back();
    } else {
      row.tail_slope = 0.0;
      row.last_value = kNegInf;
    }
    row.diverges = row.tail_slope > 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tfd::certify
