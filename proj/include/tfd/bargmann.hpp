#pragma once

#include <complex>
#include <vector>

#include "tfd/hermite.hpp"
#include "tfd/weights.hpp"

namespace tfd::bargmann {

using hermite::HermiteSeries;
using hermite::MultiIndex;
using hermite::SampledFunction;

// Taylor coefficients c_alpha = H(f,alpha) / sqrt(alpha!) of the Bargmann
// transform, same sparse log-domain storage as HermiteSeries.
struct EntireSeries {
  int dim = 1;
  int max_order = 0;
  std::map<MultiIndex, LogComplex, hermite::GradedLex> taylor;
};

// Restriction of an entire function to a ray direction u on the real sphere:
// coeffs[n] = sum_{|alpha|=n} c_alpha u^alpha.
struct RadialProfile {
  std::vector<double> direction;
  std::vector<LogComplex> coeffs;
};

EntireSeries bargmann_from_hermite(const HermiteSeries& s);
HermiteSeries hermite_from_bargmann(const EntireSeries& F);

// Series evaluation of B_d f at z, graded-degree accumulation with
// log-domain scaling per degree. tail_bound (log) estimates the dropped
// remainder by ratio extrapolation of the per-degree sums.
struct SeriesValue {
  std::complex<double> value;
  double log_tail_bound;
};
SeriesValue evaluate(const EntireSeries& F, const std::vector<std::complex<double>>& z);

// Gaussian-window STFT V_phi f(x, xi) by trapezoid quadrature on the grid.
std::complex<double> stft_gaussian(const SampledFunction& f, const std::vector<double>& x,
                                   const std::vector<double>& xi);

// Max relative discrepancy of Eq. (Bargmann/STFT bridge):
// V_phi f(x,xi) = (2pi)^{-d/2} e^{-|z|^2/4} e^{-i<x,xi>/2} B_d f(conj(z)/sqrt2).
double check_bargmann_stft(const HermiteSeries& s,
                           const std::vector<std::vector<std::complex<double>>>& z_samples,
                           double R = 12.0, int points = 241);

RadialProfile radial_restrict(const EntireSeries& F, const std::vector<double>& u);

// sup over |z| = t of |profile(z)| (256 equispaced angles), log domain.
double radial_sup_log(const RadialProfile& p, double t);

// Cauchy-type degree bound: given a certified envelope |F_u| <= C_F e^{lam w},
// the degree-n coefficient obeys log|.| <= log C_F - lam phi*(n/lam); the
// Kellogg step amplifies to |F^(alpha)(0)| <= C_F alpha! d^n e^{-lam phi*(n/lam)}.
struct DegreeBound {
  double log_profile_bound;     // log C_F - lam phi*(n/lam); -inf past the cutoff
  double log_derivative_bound;  // + n log d (Kellogg), bound on |F^(a)(0)|/alpha!
};
DegreeBound cauchy_degree_bound(double log_CF, double lambda, int n, int d,
                                const weights::ConjugateTable& conj);

// sqrt(eta^2 + eta/2): the sector-combination exponent for omega = t^2.
double pl_t2_coefficient(double eta);

}  // namespace tfd::bargmann
