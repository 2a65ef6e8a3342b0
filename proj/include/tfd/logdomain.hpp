#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace tfd {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Complex value stored as log|z| plus a unit phase. Magnitudes like
// sqrt(a!) e^{-phi*(r|a|)/r} leave double range near |a| ~ 300, so every
// coefficient comparison happens on log_mag.
struct LogComplex {
  double log_mag = kNegInf;          // log|z|, -inf encodes exact zero
  std::complex<double> phase{1.0, 0.0};  // |phase| = 1 (kept 1 for zero)

  static LogComplex from(std::complex<double> z) {
    double a = std::abs(z);
    if (a == 0.0) return {};
    return {std::log(a), z / a};
  }
  static LogComplex from_log(double log_mag, std::complex<double> phase = {1.0, 0.0}) {
    return {log_mag, phase};
  }

  bool is_zero() const { return log_mag == kNegInf; }

  std::complex<double> value() const {
    if (is_zero()) return {0.0, 0.0};
    return std::exp(log_mag) * phase;
  }
};

// log(sum exp(x_i)) with the usual max shift; -inf entries are skipped.
inline double log_sum_exp(const std::vector<double>& xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : xs) {
    if (x != kNegInf) s += std::exp(x - m);
  }
  return m + std::log(s);
}

// value = mant * 2^exp2. Keeps the Hermite recurrence alive where the seed
// e^{-x^2/2} underflows double (|x| up to 200, n up to 1e4).
struct ScaledReal {
  double mant = 0.0;
  long exp2 = 0;

  static ScaledReal from_log(double ln_value_abs, double sign) {
    if (ln_value_abs == kNegInf || sign == 0.0) return {0.0, 0};
    constexpr double kLog2 = 0.6931471805599453;
    double e = std::floor(ln_value_abs / kLog2);
    ScaledReal r{sign * std::exp(ln_value_abs - e * kLog2), static_cast<long>(e)};
    r.normalize();
    return r;
  }

  void normalize() {
    if (mant == 0.0) {
      exp2 = 0;
      return;
    }
    int k = 0;
    mant = std::frexp(mant, &k);  // mant in [0.5, 1)
    exp2 += k;
  }

  double to_double() const {
    if (mant == 0.0) return 0.0;
    if (exp2 < -1100) return 0.0;  // deep underflow collapses to 0
    return std::ldexp(mant, static_cast<int>(exp2));
  }

  double log_abs() const {
    if (mant == 0.0) return kNegInf;
    constexpr double kLog2 = 0.6931471805599453;
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * kLog2;
  }
};

// a*x + b*y for scaled values, renormalized; the workhorse of the recurrence.
inline ScaledReal scaled_fma(double a, const ScaledReal& x, double b, const ScaledReal& y) {
  ScaledReal r;
  if (x.mant == 0.0 && y.mant == 0.0) return r;
  long e = std::max(x.mant != 0.0 ? x.exp2 : y.exp2, y.mant != 0.0 ? y.exp2 : x.exp2);
  double xm = x.mant == 0.0 ? 0.0 : std::ldexp(x.mant, static_cast<int>(std::max(x.exp2 - e, -1060L)));
  double ym = y.mant == 0.0 ? 0.0 : std::ldexp(y.mant, static_cast<int>(std::max(y.exp2 - e, -1060L)));
  r.mant = a * xm + b * ym;
  r.exp2 = e;
  r.normalize();
  return r;
}

}  // namespace tfd
