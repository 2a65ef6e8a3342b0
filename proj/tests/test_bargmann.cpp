#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tfd/bargmann.hpp"
#include "tfd/suite.hpp"

using namespace tfd;
using namespace tfd::bargmann;
using hermite::HermiteSeries;
using hermite::MultiIndex;

namespace {

HermiteSeries random_series(int dim, int N, unsigned seed, double mag_lo = -3.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> mag(mag_lo, 0.0), ang(0.0, 2.0 * std::numbers::pi);
  HermiteSeries s;
  s.dim = dim;
  s.max_order = N;
  for (const auto& a : hermite::enumerate_indices(dim, N)) {
    double th = ang(rng);
    s.coeffs[a] = LogComplex::from_log(mag(rng), {std::cos(th), std::sin(th)});
  }
  return s;
}

}  // namespace

TEST_CASE("bargmann_from_hermite: c_alpha = H / sqrt(alpha!)") {
  HermiteSeries s;
  s.dim = 2;
  s.max_order = 5;
  s.coeffs[{3, 2}] = LogComplex::from({1.0, 0.0});
  s.coeffs[{0, 0}] = LogComplex::from({1.0, 0.0});
  auto F = bargmann_from_hermite(s);
  CHECK(F.taylor.at({3, 2}).log_mag ==
        doctest::Approx(-0.5 * (std::log(6.0) + std::log(2.0))).epsilon(1e-14));
  CHECK(F.taylor.at({0, 0}).log_mag == doctest::Approx(0.0));
  // inverse relation recovers the series exactly
  auto back = hermite_from_bargmann(F);
  for (const auto& [a, c] : s.coeffs) {
    CHECK(back.get(a).log_mag == doctest::Approx(c.log_mag).epsilon(1e-15));
  }
}

TEST_CASE("isometry proxy: sum |c|^2 alpha! = sum |H|^2 in log domain") {
  auto s = random_series(2, 9, 11);
  auto F = bargmann_from_hermite(s);
  std::vector<double> lhs, rhs;
  for (const auto& [a, c] : F.taylor) {
    lhs.push_back(2.0 * c.log_mag + hermite::log_multi_factorial(a));
  }
  for (const auto& [a, c] : s.coeffs) rhs.push_back(2.0 * c.log_mag);
  CHECK(log_sum_exp(lhs) == doctest::Approx(log_sum_exp(rhs)).epsilon(1e-13));
  // Fock-membership proxy: each |c_alpha| sqrt(alpha!) sits under the
  // l2 mass of the source series
  double l2 = 0.5 * s.sum_sq_log();
  for (const auto& [a, c] : F.taylor) {
    CHECK(c.log_mag + 0.5 * hermite::log_multi_factorial(a) <= l2 + 1e-12);
  }
}

TEST_CASE("stft_gaussian of the window itself") {
  HermiteSeries s;
  s.dim = 1;
  s.max_order = 0;
  s.coeffs[{0}] = LogComplex::from({1.0, 0.0});  // f = h_0 = the window
  auto f = hermite::synthesize(s, 12.0, 241);
  auto v0 = stft_gaussian(f, {0.0}, {0.0});
  CHECK(std::abs(v0 - std::complex<double>(0.3989422804014327, 0.0)) < 1e-10);
  // f = window, xi = 0, x = 2: (2 pi)^{-1/2} e^{-x^2/4}
  auto v2 = stft_gaussian(f, {2.0}, {0.0});
  CHECK(std::abs(v2 - std::complex<double>(std::exp(-1.0) * 0.3989422804014327, 0.0)) < 1e-10);
}

TEST_CASE("stft symmetry V f(x, xi) = e^{-i<x,xi>} V fhat(xi, -x)") {
  auto s = random_series(1, 10, 5);
  auto f = hermite::synthesize(s, 12.0, 241);
  auto fh = hermite::synthesize(hermite::fourier_series(s), 12.0, 241);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> pt(-1.5, 1.5);
  for (int k = 0; k < 5; ++k) {
    double x = pt(rng), xi = pt(rng);
    auto lhs = stft_gaussian(f, {x}, {xi});
    auto rhs = std::exp(std::complex<double>(0.0, -x * xi)) * stft_gaussian(fh, {xi}, {-x});
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("Bargmann/STFT bridge") {
  HermiteSeries gauss;
  gauss.dim = 1;
  gauss.max_order = 0;
  gauss.coeffs[{0}] = LogComplex::from({1.0, 0.0});
  CHECK(check_bargmann_stft(gauss, {{{0.7, -0.3}}}) < 1e-9);

  HermiteSeries h1;
  h1.dim = 1;
  h1.max_order = 1;
  h1.coeffs[{1}] = LogComplex::from({1.0, 0.0});
  CHECK(check_bargmann_stft(h1, {{{1.0, 1.0}}}) < 1e-6);

  auto s = random_series(2, 8, 23);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> pt(-1.5, 1.5);
  std::vector<std::vector<std::complex<double>>> zs;
  for (int k = 0; k < 5; ++k) {
    zs.push_back({{pt(rng), pt(rng)}, {pt(rng), pt(rng)}});
  }
  CHECK(check_bargmann_stft(s, zs, 10.0, 201) < 1e-5);
}

TEST_CASE("radial_restrict") {
  auto s = random_series(2, 6, 3);
  auto F = bargmann_from_hermite(s);
  // coordinate direction picks out the axis coefficients
  auto p = radial_restrict(F, {1.0, 0.0});
  for (int n = 0; n <= 6; ++n) {
    auto expect = F.taylor.at({n, 0});
    CHECK(p.coeffs[n].log_mag == doctest::Approx(expect.log_mag).epsilon(1e-12));
  }
  // diagonal series along u = (1/sqrt d, ..): coeff_{dn} = c_(n..n) d^{-dn/2}
  EntireSeries D;
  D.dim = 2;
  D.max_order = 8;
  for (int n = 0; n <= 4; ++n) D.taylor[MultiIndex{n, n}] = LogComplex::from_log(-0.3 * n);
  auto pd = radial_restrict(D, {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2});
  for (int n = 0; n <= 4; ++n) {
    CHECK(pd.coeffs[2 * n].log_mag ==
          doctest::Approx(-0.3 * n - n * std::log(2.0)).epsilon(1e-12));
    if (2 * n + 1 <= 8) CHECK(pd.coeffs[2 * n + 1].is_zero());
  }
  // exact cancellation
  EntireSeries C;
  C.dim = 2;
  C.max_order = 1;
  C.taylor[{1, 0}] = LogComplex::from({1.0, 0.0});
  C.taylor[{0, 1}] = LogComplex::from({-1.0, 0.0});
  auto pc = radial_restrict(C, {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2});
  CHECK(pc.coeffs[1].is_zero());
  // triangle inequality |coeff_n| <= sum |c_alpha|
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u01(-1.0, 1.0);
  double u1 = u01(rng), u2 = u01(rng);
  double nn = std::hypot(u1, u2);
  auto pr = radial_restrict(F, {u1 / nn, u2 / nn});
  for (int n = 0; n <= 6; ++n) {
    std::vector<double> mags;
    for (const auto& [a, c] : F.taylor) {
      if (hermite::order(a) == n) mags.push_back(c.log_mag);
    }
    CHECK(pr.coeffs[n].log_mag <= log_sum_exp(mags) + 1e-12);
  }
}

TEST_CASE("cauchy_degree_bound") {
  // log_+ weight: bound collapses to -inf exactly past n = lambda * v0
  auto logp = weights::WeightFunction::logpower(0.0);
  auto conj_log = weights::young_conjugate(logp, weights::default_v_grid(10.0));
  double N = 3.0;
  for (int n = 0; n <= 6; ++n) {
    auto b = cauchy_degree_bound(0.0, N, n, 2, conj_log);
    if (n > 3) CHECK(b.log_profile_bound == kNegInf);
    else CHECK(std::isfinite(b.log_profile_bound));
  }
  // (log_+ t)^2, lambda = 1, n = 10: log C_F - phi*(10) = log C_F - 25
  auto w = weights::WeightFunction::logpower(1.0);
  auto conj = weights::young_conjugate(w, weights::default_v_grid(20.0));
  auto b10 = cauchy_degree_bound(1.7, 1.0, 10, 3, conj);
  CHECK(b10.log_profile_bound == doctest::Approx(1.7 - 25.0).epsilon(1e-4));
  CHECK(b10.log_derivative_bound ==
        doctest::Approx(1.7 - 25.0 + 10.0 * std::log(3.0)).epsilon(1e-4));
  // n = 0: phi*(0) = 0 under the omega(1) = 0 normalization
  auto b0 = cauchy_degree_bound(1.7, 1.0, 0, 3, conj);
  CHECK(b0.log_profile_bound == doctest::Approx(1.7).epsilon(1e-9));
}

TEST_CASE("degree-bound consistency for the saturating series") {
  auto w = weights::WeightFunction::logpower(1.0);
  auto s = suite::saturating_series(w, 1.0, 1, 40);
  auto F = bargmann_from_hermite(s);
  auto prof = radial_restrict(F, {1.0});
  double lo = kInf, hi = -kInf;
  for (double t = 1.0; t <= 30.0; t *= 1.25) {
    double g = radial_sup_log(prof, t) - w.eval(t);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  CHECK(hi - lo <= 3.0);
}

TEST_CASE("cauchy degree bound covers the radial coefficients end to end") {
  // measure an envelope |F_u(z)| <= C_F e^{lam omega(|z|)} on the circle sups,
  // then the degree bound C_F e^{-lam phi*(n/lam)} must dominate |coeff_n|
  auto w = weights::WeightFunction::logpower(1.0);
  auto s = suite::saturating_series(w, 1.0, 2, 30);
  auto F = bargmann_from_hermite(s);
  std::vector<double> u = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  auto prof = radial_restrict(F, u);
  double lam = 1.2;  // above alpha_+/r = 1 for this weight
  double log_CF = -kInf;
  for (double t = 1.0; t <= 30.0; t *= 1.2) {
    log_CF = std::max(log_CF, radial_sup_log(prof, t) - lam * w.eval(t));
  }
  auto conj = weights::young_conjugate(w, weights::default_v_grid(80.0));
  for (size_t n = 0; n < prof.coeffs.size(); ++n) {
    if (prof.coeffs[n].is_zero()) continue;
    auto b = cauchy_degree_bound(log_CF, lam, static_cast<int>(n), 2, conj);
    CHECK(prof.coeffs[n].log_mag <= b.log_profile_bound + 1e-9);
    CHECK(b.log_profile_bound <= b.log_derivative_bound);  // Kellogg d^n amplification
  }
}

TEST_CASE("pl_t2_coefficient equals the sector minimum") {
  for (double eta : {0.05, 0.3, 1.0, 4.0}) {
    double direct = pl_t2_coefficient(eta);
    // dense scan plus ternary refinement around the minimum
    double best = kInf, best_th = 0.0;
    for (int i = 1; i < 100000; ++i) {
      double th = (std::numbers::pi / 2.0) * i / 100000.0;
      double v = (eta + 0.25) / std::cos(th) - 0.25 * std::tan(th);
      if (v < best) {
        best = v;
        best_th = th;
      }
    }
    double lo = best_th - 1e-4, hi = best_th + 1e-4;
    for (int it = 0; it < 200; ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      auto f = [&](double th) { return (eta + 0.25) / std::cos(th) - 0.25 * std::tan(th); };
      if (f(m1) < f(m2)) hi = m2;
      else lo = m1;
    }
    double refined = (eta + 0.25) / std::cos(0.5 * (lo + hi)) - 0.25 * std::tan(0.5 * (lo + hi));
    CHECK(direct == doctest::Approx(refined).epsilon(1e-10));
    // the paper's minimizer theta_0 = arcsin(1/(1+4 eta))
    double th0 = std::asin(1.0 / (1.0 + 4.0 * eta));
    CHECK(0.5 * (lo + hi) == doctest::Approx(th0).epsilon(1e-6));
  }
}

TEST_CASE("series evaluation reports a usable tail bound") {
  auto s = random_series(1, 24, 42);
  auto F = bargmann_from_hermite(s);
  auto val = evaluate(F, {{0.4, 0.3}});
  CHECK(std::isfinite(val.value.real()));
  CHECK(val.log_tail_bound < std::log(std::abs(val.value)) + std::log(1e-6));
  // deeper truncation shrinks the reported tail
  auto s2 = random_series(1, 12, 42);
  auto val2 = evaluate(bargmann_from_hermite(s2), {{0.4, 0.3}});
  CHECK(val.log_tail_bound < val2.log_tail_bound);
}
