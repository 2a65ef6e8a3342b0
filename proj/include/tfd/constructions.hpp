#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfd/certify.hpp"
#include "tfd/hermite.hpp"
#include "tfd/weights.hpp"

namespace tfd::constructions {

using certify::FitConfig;
using hermite::HermiteSeries;
using weights::WeightFunction;

enum class Family {
  HermiteRate,              // H(f,alpha) = e^{-r|alpha|}
  GaussianWidth,            // d=1 coefficients of e^{-b x^2} by quadrature
  PolyGaussian,             // P(x) e^{-|x|^2/2}, finite support
  DiagCounterexample,       // H(f,(n..n)) = 2^{-nd} sqrt(n!) e^{-eta phi*(n/eta)}
  DiagSequenceCounterexample,
  PowerCounterexample,      // H(f,(n..n)) = (log n)^{-n} sqrt(n!) (n!)^{-1/a}, n >= 3
};

struct ConstructionSpec {
  Family family = Family::HermiteRate;
  int dim = 1;
  int n_max = 60;
  double r = 1.0;                      // hermite_rate
  double b = 0.3;                      // gaussian_width, b in (0,1/2) U (1/2,inf)
  std::vector<double> poly;            // poly_gaussian (d=1): monomial coeffs, poly[k] * x^k
  double lambda = 1.0;                 // counterexamples: target coordinate-wise rate
  std::optional<WeightFunction> weight;  // diag families
  double a = 1.0;                      // power_counterexample exponent, 0 < a < 2

  void validate() const;
};

struct BuildResult {
  HermiteSeries series;
  double eta = 0.0;            // diag: chosen from lambda
  double lower_bound_r = 0.0;  // diag: r used in the diagonal lower-bound check
  std::vector<double> s_n;     // diag_sequence: per-degree conjugate scales
};

BuildResult build(const ConstructionSpec& spec);

// First indices n_k where the no-GI log-ratio with (r=k, eps=1/k) reaches
// log k, and the induced step sequence r_n.
struct GiGapSequence {
  std::vector<int> n_k;        // strictly increasing
  std::vector<double> r_n;     // r_n = k on [n_k, n_{k+1})
  int k_found = 0;
  double best_ratio_unreached = 0.0;  // diagnostic when SearchExhausted
};
GiGapSequence find_gi_gap_sequence(const WeightFunction& w, int d, int k_max,
                                   int n_search = 1000);

struct ConstructionReport {
  std::vector<certify::EnvelopeCheck> tf_checks;  // coordinate-wise at spec lambda
  double tf_lambda = 0.0;
  bool tf_pass = false;
  double diag_lower_slope = 0.0;   // trend of log H - (1/d) envelope; >= 0 expected
  bool diag_lower_holds = false;
  std::vector<certify::GiGapRow> divergence;  // Eq. no-GI ratio per epsilon
  double power_ratio_slope = 0.0;  // power family: sup-argument tail slope
  std::optional<double> exp_rate;  // hermite_rate: certified exponential rate
};

ConstructionReport verify_construction(const BuildResult& built, const ConstructionSpec& spec,
                                       const FitConfig& cfg = {}, double R = 10.0,
                                       int points = 161,
                                       const std::vector<double>& lambda_list = {1.0},
                                       const std::vector<double>& eps_list = {1.0});

// Tail slope of log of |H(f,(n..n))| (alpha!)^{b} / h^{dn} over [lo, hi]:
// the sup argument of the power-family failure criterion.
double power_ratio_tail_slope(double a, int d, double b, double h, int n_lo, int n_hi);

}  // namespace tfd::constructions
