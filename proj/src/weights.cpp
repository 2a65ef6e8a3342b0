#include "tfd/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tfd::weights {

namespace {

constexpr double kTailStart = 10.0;  // discard t < 10: absorbs the additive C
constexpr int kPointsPerDecade = 64;

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> g;
  double decades = std::log10(hi / lo);
  int n = std::max(2, static_cast<int>(std::lround(decades * per_decade)) + 1);
  for (int i = 0; i < n; ++i) {
    g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  }
  return g;
}

// Least-squares fit y ~ c0 + c1 x + c2 x^2 returning c0 (the extrapolated
// limit as x -> 0). Used with x = 1/log t to realize tail limsups: for power
// weights the ratios are constant (exact), for logpower they are polynomials
// in 1/log t so the intercept recovers the true limit.
double quad_intercept(const std::vector<double>& x, const std::vector<double>& y) {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
  size_t n = x.size();
  for (size_t i = 0; i < n; ++i) {
    double xi = x[i], xi2 = xi * xi;
    s0 += 1;
    s1 += xi;
    s2 += xi2;
    s3 += xi2 * xi;
    s4 += xi2 * xi2;
    b0 += y[i];
    b1 += xi * y[i];
    b2 += xi2 * y[i];
  }
  // Solve the 3x3 normal equations by Cramer's rule.
  double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) + s2 * (s1 * s3 - s2 * s2);
  if (std::fabs(det) < 1e-30) {  // degenerate (e.g. two distinct x): fall back to mean
    return b0 / s0;
  }
  double d0 = b0 * (s2 * s4 - s3 * s3) - s1 * (b1 * s4 - b2 * s3) + s2 * (b1 * s3 - b2 * s2);
  return d0 / det;
}

struct TailStats {
  double extrapolated;    // 1/log-t quadratic intercept
  double last_decade_max;
  bool settled;           // variation over the last decade <= 10%
  bool divergent;         // per-decade maxima keep growing
};

// ratios[i] paired with ts[i]; ts increasing, all >= kTailStart.
TailStats tail_limsup(const std::vector<double>& ts, const std::vector<double>& ratios) {
  TailStats st{};
  double t_max = ts.back();
  std::vector<double> xs, ys;
  double last_lo = kInf, last_hi = -kInf;
  for (size_t i = 0; i < ts.size(); ++i) {
    xs.push_back(1.0 / std::log(ts[i]));
    ys.push_back(ratios[i]);
    if (ts[i] >= t_max / 10.0) {
      last_lo = std::min(last_lo, ratios[i]);
      last_hi = std::max(last_hi, ratios[i]);
    }
  }
  st.extrapolated = quad_intercept(xs, ys);
  st.last_decade_max = last_hi;
  double mid = 0.5 * (last_lo + last_hi);
  st.settled = (mid <= 0) || ((last_hi - last_lo) / std::max(std::fabs(mid), 1e-12) <= 0.10);

  // Divergence: per-decade maxima strictly increasing over the last four
  // decades and more than doubling overall.
  std::vector<double> decade_max;
  double dlo = kTailStart;
  size_t i = 0;
  while (dlo < t_max * 0.999) {
    double m = -kInf;
    while (i < ts.size() && ts[i] < dlo * 10.0) m = std::max(m, ratios[i++]);
    if (m != -kInf) decade_max.push_back(m);
    dlo *= 10.0;
  }
  if (decade_max.size() >= 4) {
    size_t k = decade_max.size();
    bool increasing = true;
    for (size_t j = k - 3; j < k; ++j) {
      if (decade_max[j] <= decade_max[j - 1] * 1.02) increasing = false;
    }
    if (increasing && decade_max[k - 1] > 2.0 * decade_max[k - 4]) st.divergent = true;
  }
  return st;
}

Estimate clamp_coefficient(const TailStats& st) {
  Estimate e;
  if (st.divergent) {
    e.infinite = true;
    e.value = kInf;
    e.settled = true;
    return e;
  }
  e.value = std::max(1.0, st.extrapolated);
  e.settled = st.settled;
  return e;
}

}  // namespace

// --- WeightFunction ----------------------------------------------------------

WeightFunction WeightFunction::power(double a) {
  if (a <= 0) fail(ErrorKind::ParameterOutOfRange, "power weight needs a > 0");
  WeightFunction w;
  w.family_ = Family::Power;
  w.a_ = a;
  w.claims_concave_ = a <= 1.0;
  w.claims_convex_phi_ = true;
  return w;
}

WeightFunction WeightFunction::logpower(double a) {
  if (a < 0) fail(ErrorKind::ParameterOutOfRange, "logpower weight needs a >= 0");
  WeightFunction w;
  w.family_ = Family::LogPower;
  w.a_ = a;
  w.claims_concave_ = a == 0.0;
  w.claims_convex_phi_ = true;
  return w;
}

WeightFunction WeightFunction::gaussian_limit() {
  WeightFunction w;
  w.family_ = Family::GaussianLimit;
  w.a_ = 2.0;
  w.claims_concave_ = false;
  w.claims_convex_phi_ = true;
  return w;
}

WeightFunction WeightFunction::custom(std::vector<std::pair<double, double>> table,
                                      bool claims_concave, bool claims_convex_phi) {
  if (table.size() < 2) fail(ErrorKind::BadInput, "custom weight table needs >= 2 rows");
  auto lt = std::make_shared<std::vector<std::pair<double, double>>>();
  double prev_t = 0.0, prev_w = -1.0;
  for (auto& [t, om] : table) {
    if (t <= prev_t) fail(ErrorKind::BadInput, "custom weight table: t must be strictly increasing");
    if (om < prev_w) fail(ErrorKind::BadInput, "custom weight table: omega must be non-decreasing");
    prev_t = t;
    prev_w = om;
    lt->emplace_back(std::log(t), om > 0 ? std::log(om) : kNegInf);
  }
  WeightFunction w;
  w.family_ = Family::Custom;
  w.claims_concave_ = claims_concave;
  w.claims_convex_phi_ = claims_convex_phi;
  w.log_table_ = std::move(lt);
  return w;
}

double WeightFunction::log_eval(double t) const {
  switch (family_) {
    case Family::Power:
      return t <= 0 ? kNegInf : a_ * std::log(t);
    case Family::GaussianLimit:
      return t <= 0 ? kNegInf : 2.0 * std::log(t);
    case Family::LogPower: {
      if (t <= 1.0) return kNegInf;
      return (1.0 + a_) * std::log(std::log(t));
    }
    case Family::Custom: {
      const auto& tab = *log_table_;
      if (t <= 0) return tab.front().second;
      double u = std::log(t);
      if (u <= tab.front().first) return tab.front().second;
      auto it = std::lower_bound(tab.begin(), tab.end(), u,
                                 [](const auto& p, double x) { return p.first < x; });
      size_t hi = it == tab.end() ? tab.size() - 1 : static_cast<size_t>(it - tab.begin());
      if (hi == 0) hi = 1;
      size_t lo = hi - 1;
      if (u > tab.back().first) {  // extend with the last segment's slope
        lo = tab.size() - 2;
        hi = tab.size() - 1;
      }
      double u0 = tab[lo].first, u1 = tab[hi].first;
      double w0 = tab[lo].second, w1 = tab[hi].second;
      if (w0 == kNegInf) return w1 == kNegInf ? kNegInf : w1;
      double s = (w1 - w0) / (u1 - u0);
      return w0 + s * (u - u0);
    }
  }
  return kNegInf;
}

double WeightFunction::eval(double t) const {
  double l = log_eval(t);
  return l == kNegInf ? 0.0 : std::exp(l);
}

double WeightFunction::phi(double u) const {
  // omega(e^u); for the power family computed in the log domain so huge u is
  // just +inf rather than NaN.
  switch (family_) {
    case Family::Power:
    case Family::GaussianLimit: {
      double a = family_ == Family::GaussianLimit ? 2.0 : a_;
      double l = a * u;
      return l > 709.0 ? kInf : std::exp(l);
    }
    case Family::LogPower:
      return u <= 0 ? 0.0 : std::pow(u, 1.0 + a_);
    case Family::Custom:
      if (u > 700.0) {
        double l = log_eval(std::exp(700.0)) +
                   (log_eval(std::exp(700.0)) - log_eval(std::exp(690.0))) / 10.0 * (u - 700.0);
        return l > 709.0 ? kInf : std::exp(l);
      }
      return eval(std::exp(u));
  }
  return 0.0;
}

std::string WeightFunction::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Power: os << "power:" << a_; break;
    case Family::LogPower: os << "logpower:" << a_; break;
    case Family::GaussianLimit: os << "gaussian"; break;
    case Family::Custom: os << "custom"; break;
  }
  return os.str();
}

void WeightFunction::check_invariants() const {
  auto probe = log_grid(1e-2, 1e8, 8);
  double prev = -kInf;
  for (double t : probe) {
    double v = eval(t);
    if (v < prev) fail(ErrorKind::BadInput, "weight not non-decreasing at t=" + std::to_string(t));
    prev = v;
  }
  if (!(eval(1e8) > eval(1.0) + 1.0)) {
    fail(ErrorKind::BadInput, "weight fails the unboundedness probe");
  }
  if (claims_convex_phi_) {
    // discrete convexity of u -> omega(e^u) on a uniform grid
    const int n = 1024;
    const double umax = 32.0;
    double scale = 0.0;
    std::vector<double> ph(n);
    for (int i = 0; i < n; ++i) {
      ph[i] = phi(umax * i / (n - 1));
      if (std::isfinite(ph[i])) scale = std::max(scale, std::fabs(ph[i]));
    }
    for (int i = 1; i + 1 < n; ++i) {
      if (!std::isfinite(ph[i - 1]) || !std::isfinite(ph[i]) || !std::isfinite(ph[i + 1])) continue;
      double dd = ph[i + 1] - 2 * ph[i] + ph[i - 1];
      if (dd < -1e-9 * scale) fail(ErrorKind::NonConvexPhi, "phi fails discrete convexity");
    }
  }
}

// --- Young conjugation --------------------------------------------------------

std::vector<double> default_v_grid(double v_max, int points) {
  std::vector<double> g;
  g.push_back(0.0);
  double lo = std::min(1e-3, v_max / points);
  for (int i = 0; i < points; ++i) {
    g.push_back(lo * std::pow(v_max / lo, static_cast<double>(i) / (points - 1)));
  }
  return g;
}

namespace {

// {0} followed by a log-spaced grid. A uniform primal grid cannot resolve
// maximizers spanning [1e-1, 1e4] at the accuracy the biconjugation and
// closed-form checks demand; log spacing keeps the relative bracketing error
// uniform across scales.
std::vector<double> primal_grid(double u_max, int points) {
  std::vector<double> g;
  g.reserve(points);
  g.push_back(0.0);
  const double u_min = 1e-6;
  for (int i = 0; i < points - 1; ++i) {
    g.push_back(u_min * std::pow(u_max / u_min, static_cast<double>(i) / (points - 2)));
  }
  return g;
}

}  // namespace

ConjugateTable conjugate_on_grid(const std::vector<double>& u_grid,
                                 const std::vector<double>& f_values,
                                 const std::vector<double>& v_grid,
                                 bool allow_degenerate, bool full_scan) {
  ConjugateTable tab;
  tab.u_grid = u_grid;
  tab.v_grid = v_grid;
  const size_t n = u_grid.size();

  // Degenerate branch: f(u)/u tends to a finite constant (f ~ c u), so the
  // conjugate is finite only up to the asymptotic slope c.
  double s_hi = f_values[n - 1] / u_grid[n - 1];
  size_t mid = 0;
  while (mid + 1 < n && u_grid[mid] < u_grid[n - 1] / 2.0) ++mid;
  double s_mid = f_values[mid] / u_grid[mid];
  if (allow_degenerate && std::isfinite(s_hi) && s_mid > 0 && s_hi / s_mid < 1.01) {
    tab.degenerate = true;
    tab.cutoff_v0 = s_hi + (s_hi - s_mid);  // Richardson-style nudge toward the limit
  }

  // argmax of uv - f(u) is non-decreasing in v for convex f, so one forward
  // pointer serves the whole (sorted) v grid.
  if (!std::is_sorted(v_grid.begin(), v_grid.end())) {
    fail(ErrorKind::BadInput, "v_grid must be increasing");
  }
  tab.values.resize(v_grid.size());
  size_t p = 0;
  for (size_t k = 0; k < v_grid.size(); ++k) {
    double v = v_grid[k];
    if (tab.degenerate && v > tab.cutoff_v0 * (1.0 + 1e-9)) {
      tab.values[k] = kInf;
      continue;
    }
    auto val = [&](size_t i) {
      return std::isfinite(f_values[i]) ? u_grid[i] * v - f_values[i] : -kInf;
    };
    size_t best;
    double bv;
    if (full_scan) {
      // argmax(v) is monotone but f may be non-convex early on
      best = p;
      bv = val(p);
      for (size_t i = p; i < n; ++i) {
        if (val(i) > bv) {
          bv = val(i);
          best = i;
        }
      }
      p = best;
    } else {
      while (p + 1 < n && val(p + 1) > val(p)) ++p;
      best = p;
      bv = val(p);
      for (size_t i = p; i + 1 < n && i < p + 4; ++i) {
        if (val(i + 1) > bv) {
          bv = val(i + 1);
          best = i + 1;
        }
      }
    }
    if (best == n - 1 && !tab.degenerate) {
      fail(ErrorKind::GridTooSmall, "conjugate maximizer on primal boundary at v=" + std::to_string(v));
    }
    tab.values[k] = bv;
  }
  return tab;
}

ConjugateTable young_conjugate(const WeightFunction& w, const std::vector<double>& v_grid) {
  if (v_grid.empty() || v_grid.front() < 0) {
    fail(ErrorKind::BadInput, "v_grid must be nonnegative increasing");
  }
  // (delta) precondition
  {
    const int n = 512;
    const double umax = 24.0;
    double scale = 1e-12;
    std::vector<double> ph(n);
    for (int i = 0; i < n; ++i) {
      ph[i] = w.phi(umax * i / (n - 1));
      if (std::isfinite(ph[i])) scale = std::max(scale, std::fabs(ph[i]));
    }
    for (int i = 1; i + 1 < n; ++i) {
      if (!std::isfinite(ph[i + 1])) break;
      if (ph[i + 1] - 2 * ph[i] + ph[i - 1] < -1e-9 * scale) {
        fail(ErrorKind::NonConvexPhi, "weight fails (delta): phi not convex");
      }
    }
  }

  const int points = 65536;
  double u_max = 64.0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    auto ug = primal_grid(u_max, points);
    std::vector<double> fv(ug.size());
    for (size_t i = 0; i < ug.size(); ++i) fv[i] = w.phi(ug[i]);
    try {
      return conjugate_on_grid(ug, fv, v_grid, /*allow_degenerate=*/true);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GridTooSmall) throw;
      u_max *= 2.0;  // doubling-and-retry on boundary hits
    }
  }
  fail(ErrorKind::GridTooSmall, "young_conjugate: primal grid exhausted");
}

std::optional<double> conjugate_closed_form(const WeightFunction& w, double v) {
  if (v < 0) return std::nullopt;
  switch (w.family()) {
    case Family::Power:
    case Family::GaussianLimit: {
      // phi(u) = e^{au}: maximizer u* = log(v/a)/a once v >= a
      double a = w.family() == Family::GaussianLimit ? 2.0 : w.param();
      if (v < a) return -1.0;
      return (v / a) * (std::log(v / a) - 1.0);
    }
    case Family::LogPower: {
      double a = w.param();
      if (a == 0.0) return v <= 1.0 ? 0.0 : kInf;  // phi(u) = u
      return a * std::pow(1.0 + a, -(1.0 + a) / a) * std::pow(v, (1.0 + a) / a);
    }
    case Family::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

double ConjugateTable::eval(double v) const {
  if (v < 0) fail(ErrorKind::BadInput, "conjugate argument must be >= 0");
  if (degenerate && v > cutoff_v0 * (1.0 + 1e-9)) return kInf;
  if (v > v_grid.back() * (1.0 + 1e-12)) {
    fail(ErrorKind::GridTooSmall, "conjugate table does not cover v=" + std::to_string(v));
  }
  auto it = std::lower_bound(v_grid.begin(), v_grid.end(), v);
  size_t hi = static_cast<size_t>(it - v_grid.begin());
  if (hi == 0) return values[0];
  if (hi >= v_grid.size()) hi = v_grid.size() - 1;
  size_t lo = hi - 1;
  if (!std::isfinite(values[hi])) return values[lo] == kInf ? kInf : values[lo];
  double t = (v - v_grid[lo]) / (v_grid[hi] - v_grid[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

void ConjugateTable::check_invariants() const {
  // convex and non-decreasing in v; phi*(v)/v non-decreasing where finite
  double prev = -kInf;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) break;
    if (values[i] < prev - 1e-9 * std::max(1.0, std::fabs(prev))) {
      fail(ErrorKind::BadInput, "conjugate values not non-decreasing");
    }
    prev = std::max(prev, values[i]);
  }
  for (size_t i = 1; i + 1 < values.size(); ++i) {
    if (!std::isfinite(values[i + 1])) break;
    double d1 = (values[i] - values[i - 1]) / (v_grid[i] - v_grid[i - 1]);
    double d2 = (values[i + 1] - values[i]) / (v_grid[i + 1] - v_grid[i]);
    double scale = std::max({1.0, std::fabs(values[i - 1]), std::fabs(values[i + 1])});
    if (d2 - d1 < -1e-7 * scale) fail(ErrorKind::BadInput, "conjugate not convex");
  }
  for (size_t i = 1; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || v_grid[i] <= 0 || v_grid[i - 1] <= 0) continue;
    if (values[i - 1] <= 0 || values[i] <= 0) continue;  // ratio meaningful once positive
    double r0 = values[i - 1] / v_grid[i - 1];
    double r1 = values[i] / v_grid[i];
    if (r1 < r0 - 1e-7 * std::fabs(r0)) {
      fail(ErrorKind::BadInput, "phi*(v)/v not non-decreasing");
    }
  }
}

// --- moderateness coefficients -------------------------------------------------

Estimate estimate_alpha_tau(const WeightFunction& w, double tau) {
  if (!(tau > 1.0)) fail(ErrorKind::ParameterOutOfRange, "alpha_tau needs tau > 1");
  auto grid = log_grid(1.0, 1e6, kPointsPerDecade);
  std::vector<double> ts, ratios;
  for (double t : grid) {
    if (t < kTailStart) continue;
    double lw = w.log_eval(t);
    if (lw == kNegInf) continue;
    ratios.push_back(std::exp(w.log_eval(tau * t) - lw));
    ts.push_back(t);
  }
  if (ts.size() < 16) fail(ErrorKind::BadInput, "weight vanishes on the probe tail");
  auto st = tail_limsup(ts, ratios);
  if (st.divergent) {
    Estimate e;
    e.infinite = true;  // DivergentRatio: (alpha) fails for this tau
    e.value = kInf;
    return e;
  }
  return clamp_coefficient(st);
}

Estimate estimate_alpha(const WeightFunction& w) {
  // least L with omega(t+s) <= L(omega(t) + omega(s)) + C over a 2D log grid
  auto grid = log_grid(kTailStart, 1e6, 16);
  double worst = 0.0;
  for (double t : grid) {
    double wt = w.eval(t);
    for (double s : grid) {
      if (s > t) break;  // symmetric
      double ws = w.eval(s);
      double denom = wt + ws;
      if (denom <= 0) continue;
      worst = std::max(worst, w.eval(t + s) / denom);
    }
  }
  Estimate e;
  e.value = std::max(1.0, worst);
  e.settled = true;
  // Divergence check via alpha_2 (NotModerate when even that diverges).
  Estimate a2 = estimate_alpha_tau(w, 2.0);
  if (a2.infinite) fail(ErrorKind::NotModerate, "alpha_2 diverges: weight is not moderate");
  return e;
}

Estimate estimate_alpha_plus(const WeightFunction& w) {
  // alpha_+ = inf_{tau>1} alpha_tau, non-increasing as tau -> 1+
  Estimate best;
  best.value = kInf;
  best.infinite = true;
  for (double tau : {1.01, 1.05, 1.1, 1.5, 2.0}) {
    Estimate e = estimate_alpha_tau(w, tau);
    if (e.infinite) continue;
    if (best.infinite || e.value < best.value) best = e;
  }
  if (best.infinite) fail(ErrorKind::NotModerate, "alpha_tau infinite for every probed tau");
  return best;
}

// --- beta* --------------------------------------------------------------------

namespace {

// sigma * int_1^inf omega(t s) s^{-1-sigma} ds via s = e^u, trapezoid in u,
// with a power-law tail extrapolation. Returns log of the integral.
double beta_star_integral_log(const WeightFunction& w, double sigma, double t) {
  const double du = 1.0 / 256.0;
  double sum = 0.0;  // linear accumulation is fine: integrand <= omega-scale
  double prev = w.eval(t);
  double u = 0.0;
  double inc_prev = kInf;
  int decades_flat = 0;
  for (int i = 1; i < 200000; ++i) {
    u = i * du;
    double cur = w.eval(t * std::exp(u)) * std::exp(-sigma * u);
    sum += 0.5 * (prev + cur) * du;
    prev = cur;
    if (i % 2560 == 0) {  // every delta-u = 10
      double inc = cur * du * 2560;
      if (std::isfinite(inc_prev) && inc > inc_prev * 0.9) {
        ++decades_flat;
        if (decades_flat >= 3) {
          fail(ErrorKind::IntegralDiverges, "beta* integral fails the Cauchy criterion");
        }
      } else {
        decades_flat = 0;
      }
      inc_prev = inc;
      if (cur < 1e-14 * sum / std::max(u, 1.0)) break;
    }
    if (u > 700) break;
  }
  // tail: omega(t e^u) ~ omega(t e^U) e^{p (u-U)} with p the local log-log slope
  double U = u;
  double wU = w.log_eval(t * std::exp(U));
  double wU1 = w.log_eval(t * std::exp(U - 1.0));
  double p = wU - wU1;
  if (p < sigma - 0.1) {
    sum += std::exp(wU - sigma * U) / (sigma - p);
  } else {
    fail(ErrorKind::IntegralDiverges, "beta* tail slope reaches sigma");
  }
  return std::log(sigma * sum);
}

}  // namespace

Estimate estimate_beta_star(const WeightFunction& w, double sigma) {
  if (!(sigma > 0)) fail(ErrorKind::ParameterOutOfRange, "beta* needs sigma > 0");
  // (beta_sigma) plausibility probe: omega(t)/t^sigma non-increasing on the tail
  double prev = kInf;
  for (double t : {1e1, 1e2, 1e3, 1e4, 1e5, 1e6}) {
    double r = std::exp(w.log_eval(t) - sigma * std::log(t));
    if (r > prev * 1.01) {
      fail(ErrorKind::IntegralDiverges, "omega(t)/t^sigma increases: (beta_sigma) fails");
    }
    prev = r;
  }
  auto grid = log_grid(kTailStart, 1e5, 24);
  std::vector<double> ts, ratios;
  for (double t : grid) {
    double lw = w.log_eval(t);
    if (lw == kNegInf) continue;
    ratios.push_back(std::exp(beta_star_integral_log(w, sigma, t) - lw));
    ts.push_back(t);
  }
  auto st = tail_limsup(ts, ratios);
  Estimate e = clamp_coefficient(st);  // TailNotSettled surfaces as settled=false
  return e;
}

// --- Phragmen-Lindelof --------------------------------------------------------

PLSandwich pl_sandwich(const WeightFunction& w, double sigma) {
  Estimate bs;
  try {
    bs = estimate_beta_star(w, sigma);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::IntegralDiverges) {
      fail(ErrorKind::NotAdmissible, "beta*_sigma infinite: PL_{pi/sigma} infinite");
    }
    throw;
  }
  if (bs.infinite) fail(ErrorKind::NotAdmissible, "beta*_sigma infinite: PL infinite");
  Estimate a_sqrt2 = estimate_alpha_tau(w, std::numbers::sqrt2);
  PLSandwich s;
  s.lower.value = bs.value / std::numbers::pi;
  s.lower.settled = bs.settled;
  s.upper.value = (1.0 + 2.0 * bs.value / std::numbers::pi) * a_sqrt2.value;
  s.upper.settled = bs.settled && a_sqrt2.settled;
  return s;
}

std::optional<double> pl_closed_form(const WeightFunction& w, double theta) {
  switch (w.family()) {
    case Family::Power:
    case Family::GaussianLimit: {
      double a = w.family() == Family::GaussianLimit ? 2.0 : w.param();
      if (!(theta > 0) || !(theta < std::numbers::pi / a)) return std::nullopt;
      return 1.0 / std::cos(a * theta / 2.0);
    }
    case Family::LogPower:
      return 1.0;
    case Family::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

// --- Gaussian interpolation -----------------------------------------------------

Estimate gi_coefficient(const WeightFunction& w, int d, double mu) {
  if (d < 2) fail(ErrorKind::ParameterOutOfRange, "gi_coefficient needs d >= 2");
  if (!(mu > 0)) fail(ErrorKind::ParameterOutOfRange, "gi_coefficient needs mu > 0");
  // preconditions: (delta) implicitly via family; omega(t) = o(t^2) probe
  {
    double prev = kInf;
    for (double t : {1e2, 1e3, 1e4, 1e5, 1e6}) {
      double r = std::exp(w.log_eval(t) - 2.0 * std::log(t));
      if (r > prev * 0.999) {
        fail(ErrorKind::ParameterOutOfRange, "gi_coefficient needs omega(t) = o(t^2)");
      }
      prev = r;
    }
  }
  const double pw = 2.0 / (d - 1);
  const double A = (d - 1) / (2.0 * d);
  auto tgrid = log_grid(kTailStart, 1e6, 32);
  std::vector<double> ts, ratios;
  double widen = 10.0;
  for (double t : tgrid) {
    double lw = w.log_eval(t);
    if (lw == kNegInf) continue;
    double s_hi = widen * std::pow(t, d - 1);
    auto sgrid = log_grid(1.0, s_hi, 48);
    double best = kInf;
    size_t best_i = 0;
    for (size_t i = 0; i < sgrid.size(); ++i) {
      double s = sgrid[i];
      double val = A * std::pow(s, pw) + std::exp(w.log_eval(std::pow(t, d) / s)) / (mu * d);
      if (val < best) {
        best = val;
        best_i = i;
      }
    }
    if (best_i == sgrid.size() - 1) {
      fail(ErrorKind::GridBoundaryMinimizer, "gi inner minimizer hit the s-grid boundary");
    }
    ratios.push_back(mu * best / std::exp(lw));
    ts.push_back(t);
  }
  auto st = tail_limsup(ts, ratios);
  // +inf when the ratio still grows across the last two decades
  size_t n = ts.size();
  double m_last = -kInf, m_prev = -kInf, m_prev2 = -kInf;
  for (size_t i = 0; i < n; ++i) {
    if (ts[i] >= ts[n - 1] / 10.0) m_last = std::max(m_last, ratios[i]);
    else if (ts[i] >= ts[n - 1] / 100.0) m_prev = std::max(m_prev, ratios[i]);
    else if (ts[i] >= ts[n - 1] / 1000.0) m_prev2 = std::max(m_prev2, ratios[i]);
  }
  if (m_last > m_prev * 1.10 && m_prev > m_prev2 * 1.10) {
    Estimate e;
    e.infinite = true;
    e.value = kInf;
    return e;
  }
  return clamp_coefficient(st);
}

TheoremConstants theorem_constants(const WeightFunction& w, int d) {
  Estimate alpha = estimate_alpha(w);
  Estimate a_sqrt2 = estimate_alpha_tau(w, std::numbers::sqrt2);
  Estimate a_d = d > 1 ? estimate_alpha_tau(w, static_cast<double>(d))
                       : Estimate{1.0, true, false};  // alpha_1 = 1 identically
  Estimate a_2 = estimate_alpha_tau(w, 2.0);
  Estimate a_plus = estimate_alpha_plus(w);

  double pl;
  if (auto closed = pl_closed_form(w, std::numbers::pi / 2.0)) {
    pl = *closed;
  } else {
    pl = pl_sandwich(w, 2.0).upper.checked("PL upper bound");
  }

  auto product = [](std::initializer_list<Estimate> es, double extra) {
    Estimate r;
    r.value = extra;
    for (const auto& e : es) {
      if (e.infinite) fail(ErrorKind::NotAdmissible, "theorem constant has an infinite factor");
      r.value *= e.value;
      r.settled = r.settled && e.settled;
    }
    return r;
  };
  TheoremConstants tc;
  tc.h1_d = product({alpha, a_sqrt2, a_d}, pl);
  tc.h2 = product({alpha, a_plus, a_2}, 1.0);
  tc.h1_coord = product({alpha, a_plus, a_sqrt2}, 1.0);
  return tc;
}

// --- psi_mu / M_mu ------------------------------------------------------------

GiProfile gi_profile_M(const WeightFunction& w, double mu,
                       const std::vector<double>& v_grid, int d) {
  if (!(mu > 0)) fail(ErrorKind::ParameterOutOfRange, "gi_profile_M needs mu > 0");
  if (d < 2) fail(ErrorKind::ParameterOutOfRange, "gi_profile_M needs d >= 2");
  const double b = 2.0 * d / (d - 1.0);
  const double A = (d - 1.0) / (2.0 * d);

  // inner objective is convex in v (exponential plus convex-composed-affine),
  // so ternary search nails the infimum at machine precision
  auto psi_at = [&](double u) {
    auto g = [&](double v) {
      double pv = w.phi(d * (u - v));
      return A * std::exp(std::min(b * v, 700.0)) + (std::isfinite(pv) ? pv / (mu * d) : kInf);
    };
    double lo = 0.0, hi = u + 4.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (g(m1) < g(m2)) hi = m2;
      else lo = m1;
    }
    return std::min({g(lo), g(0.5 * (lo + hi)), g(hi)});
  };

  double u_max = 64.0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    const int n = 4096;
    GiProfile prof;
    prof.u_grid.resize(n);
    prof.psi.resize(n);
    for (int i = 0; i < n; ++i) {
      prof.u_grid[i] = u_max * i / (n - 1);
      prof.psi[i] = psi_at(prof.u_grid[i]);
    }
    try {
      // psi is only eventually convex: use the exhaustive conjugation
      prof.M = conjugate_on_grid(prof.u_grid, prof.psi, v_grid, /*allow_degenerate=*/true,
                                 /*full_scan=*/true);
      return prof;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GridTooSmall) throw;
      u_max *= 2.0;
    }
  }
  fail(ErrorKind::GridTooSmall, "gi_profile_M: primal grid exhausted");
}

WeightCoefficients compute_weight_coefficients(const WeightFunction& w, int d,
                                               double sigma,
                                               const std::vector<double>& mu_list) {
  WeightCoefficients c;
  c.alpha = estimate_alpha(w);
  c.alpha_plus = estimate_alpha_plus(w);
  for (double tau : {std::numbers::sqrt2, 1.5, 2.0, static_cast<double>(d), 4.0}) {
    if (tau <= 1.0) continue;
    c.alpha_tau[tau] = estimate_alpha_tau(w, tau);
  }
  try {
    c.beta_star[sigma] = estimate_beta_star(w, sigma);
    auto s = pl_sandwich(w, sigma);
    c.pl_lower = s.lower;
    c.pl_upper = s.upper;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IntegralDiverges && e.kind() != ErrorKind::NotAdmissible) throw;
    Estimate inf_e;
    inf_e.infinite = true;
    inf_e.value = kInf;
    c.beta_star[sigma] = inf_e;
    c.pl_lower = inf_e;
    c.pl_upper = inf_e;
  }
  c.pl_closed = pl_closed_form(w, std::numbers::pi / sigma);
  for (double mu : mu_list) {
    try {
      c.gi[{d, mu}] = gi_coefficient(w, d, mu);
    } catch (const Error&) {
      // omega outside the o(t^2) class: leave the entry out
    }
  }
  try {
    auto tc = theorem_constants(w, d);
    c.h1_d = tc.h1_d;
    c.h2 = tc.h2;
    c.h1_coord = tc.h1_coord;
  } catch (const Error&) {
    Estimate inf_e;
    inf_e.infinite = true;
    inf_e.value = kInf;
    c.h1_d = inf_e;
    auto alpha = estimate_alpha(w);
    auto ap = estimate_alpha_plus(w);
    auto a2 = estimate_alpha_tau(w, 2.0);
    auto as = estimate_alpha_tau(w, std::numbers::sqrt2);
    c.h2.value = alpha.value * ap.value * a2.value;
    c.h2.settled = alpha.settled && ap.settled && a2.settled;
    c.h1_coord.value = alpha.value * ap.value * as.value;
    c.h1_coord.settled = alpha.settled && ap.settled && as.settled;
  }
  return c;
}

// --- parsing ------------------------------------------------------------------

namespace {

std::vector<std::pair<double, double>> read_weight_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open weight table: " + path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream ls(line);
    double t, om;
    if (ls >> t >> om) rows.emplace_back(t, om);
  }
  return rows;
}

}  // namespace

WeightFunction parse_weight_flag(const std::string& flag) {
  auto colon = flag.find(':');
  std::string fam = colon == std::string::npos ? flag : flag.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : flag.substr(colon + 1);
  if (fam == "power") return WeightFunction::power(std::stod(rest));
  if (fam == "logpower") return WeightFunction::logpower(rest.empty() ? 0.0 : std::stod(rest));
  if (fam == "gaussian" || fam == "t2") return WeightFunction::gaussian_limit();
  if (fam == "custom") {
    return parse_weight_config("family=custom table=" + rest);
  }
  fail(ErrorKind::BadInput, "unknown weight spec: " + flag);
}

WeightFunction parse_weight_config(const std::string& text) {
  std::string family, table;
  double a = 1.0;
  bool have_a = false;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail(ErrorKind::BadInput, "weight config token needs key=value: " + tok);
    std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
    if (k == "family") family = v;
    else if (k == "a") { a = std::stod(v); have_a = true; }
    else if (k == "table") table = v;
  }
  if (family == "power") {
    if (!have_a) fail(ErrorKind::BadInput, "power weight needs a=");
    return WeightFunction::power(a);
  }
  if (family == "logpower") return WeightFunction::logpower(have_a ? a : 0.0);
  if (family == "gaussian" || family == "gaussian_limit") return WeightFunction::gaussian_limit();
  if (family == "custom") {
    if (table.empty()) fail(ErrorKind::BadInput, "custom weight needs table=<path>");
    return WeightFunction::custom(read_weight_table(table));
  }
  fail(ErrorKind::BadInput, "unknown weight family: " + family);
}

}  // namespace tfd::weights
