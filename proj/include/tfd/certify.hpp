#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfd/hermite.hpp"
#include "tfd/weights.hpp"

namespace tfd::certify {

using hermite::HermiteSeries;
using hermite::SampledFunction;
using weights::ConjugateTable;
using weights::WeightFunction;

// Fit-region and slack knobs; overridable from a key=value config file so
// tolerances are data, not code.
struct FitConfig {
  double bulk_max = 2.0;       // |x| <= bulk_max anchors the constant
  double tail_frac = 0.9;      // fit region ends at tail_frac * R
  double theorem_slack = 0.05; // multiplicative slack on theorem bounds
  double log_floor = -600.0;   // samples below this log|f| are excluded
  double hermite_slack = 1.0;  // additive log-slack for coefficient envelopes
  int bulk_order = 5;          // |alpha| <= bulk_order anchors hermite constants

  static FitConfig from_file(const std::string& path);
};

enum class CertKind { TfUniform, TfCoordinate, Hermite };

struct DecayCertificate {
  CertKind kind = CertKind::TfUniform;
  int axis = -1;               // coordinate mode: which x_j
  std::string weight;          // describe() of the weight used
  double rate = 0.0;           // lambda-hat or certified r
  // limsup of the pointwise rate, extrapolated in 1/log|x|; for slowly
  // varying weights the window maximum overshoots its limit like 1/log R
  // and this is the asymptotically meaningful figure
  double rate_tail = 0.0;
  double log_constant = 0.0;
  double residual = 0.0;       // max slack over the fit region (log units)
  double min_slack = 0.0;      // envelope validity: >= -1e-9 by construction
  bool settled = true;
  bool under_determined = false;  // hermite: support below |alpha| = 20
  double cutoff = kInf;        // log_+ branch: max admissible |alpha|
};

// Minimal lambda-hat with the constant coupled through the bulk:
// C = max_{bulk} (log|f| + |x|^2/2 - lambda w(|x|)), lambda = max_{tail}
// (log|f| + |x|^2/2 - C)/w(|x|), iterated to its (monotone) fixed point.
// Returns one certificate per side and axis; rate = max over f and fhat.
std::vector<DecayCertificate> certify_tf(const SampledFunction& f, const SampledFunction& fhat,
                                         const WeightFunction& w, bool coordinate_mode,
                                         const FitConfig& cfg = {});

// Fixed-lambda envelope check with the lambda-independent bulk anchor
// C = max_{bulk} (log|f| + |x|^2/2). Returns the worst violation in log
// units (<= 0 means the envelope holds).
struct EnvelopeCheck {
  double worst_violation;  // max over tail of g - lambda w - C
  double log_constant;
  int axis;
};
std::vector<EnvelopeCheck> certify_tf_at(const SampledFunction& f, const SampledFunction& fhat,
                                         const WeightFunction& w, double lambda,
                                         bool coordinate_mode, const FitConfig& cfg = {});

// Largest r on r_grid with log|H| - exponent*(log sqrt(alpha!) - phi*(r|alpha|)/r)
// uniformly bounded by a constant anchored at |alpha| <= bulk_order.
// exponent = 1/d gives the coordinate-wise envelope.
DecayCertificate certify_hermite(const HermiteSeries& s, const WeightFunction& w,
                                 const std::vector<double>& r_grid, double exponent = 1.0,
                                 const FitConfig& cfg = {});

// Pure-exponential regime |H| <~ e^{-r|alpha|}: least-squares tail slope of
// -log|H| against |alpha| over the upper half of the support.
struct ExponentialRate {
  double rate;
  double residual;  // max |fit - data| over the tail
};
ExponentialRate certify_hermite_exponential(const HermiteSeries& s);

struct ImplicationReport {
  std::string test_id;
  double input_rate = 0.0;
  double paper_bound = 0.0;
  double measured = 0.0;
  double slack = 0.0;
  bool pass = false;
};

enum class Direction { TfToHermite, HermiteToTf, CoordinateToHermite };

// A measured instance: the series plus grids to synthesize on.
struct Instance {
  HermiteSeries series;
  double R = 12.0;
  int points = 241;
  std::optional<double> lambda_check;  // hermite_to_tf: check at this lambda
  std::optional<double> rate_hint;     // known construction rate
};

ImplicationReport verify_implication(Direction dir, const WeightFunction& w, int d,
                                     const Instance& instance, const FitConfig& cfg = {});

// log-ratio sequence of the no-Gaussian-interpolation criterion:
// rho_n = (1/d)[log sqrt((dn)!) - phi*(r d n)/r] - [log sqrt((dn)!) - phi*(e d n)/e]
// per epsilon; positive tail slope is divergence evidence.
struct GiGapRow {
  double epsilon;
  double tail_slope;       // least-squares slope over the last quarter
  double last_value;
  bool diverges;           // slope > 0
};
std::vector<GiGapRow> check_gi_sequence_gap(const WeightFunction& w, int d, double r,
                                            const std::vector<double>& eps_list, int n_max);

}  // namespace tfd::certify
