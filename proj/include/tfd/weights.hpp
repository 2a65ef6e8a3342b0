#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfd/error.hpp"
#include "tfd/logdomain.hpp"

namespace tfd::weights {

enum class Family { Power, LogPower, GaussianLimit, Custom };

// An estimated coefficient. `infinite` is a deliberate sentinel set by the
// estimators when a ratio demonstrably diverges; it is never the result of
// floating-point overflow. `settled` records whether the tail ratios varied
// by less than 10% over the last probed decade.
struct Estimate {
  double value = 0.0;
  bool settled = true;
  bool infinite = false;

  double checked(const std::string& who) const {
    if (infinite) fail(ErrorKind::NotAdmissible, who + " is infinite");
    if (!settled) fail(ErrorKind::ConstantUnavailable, who + " estimate is unsettled");
    return value;
  }
};

// Non-decreasing unbounded weight omega on [0, inf). Families carry exact
// log-domain evaluators; custom weights interpolate a user table log-log.
class WeightFunction {
 public:
  static WeightFunction power(double a);
  static WeightFunction logpower(double a);  // omega(t) = (log_+ t)^{1+a}
  static WeightFunction gaussian_limit();    // omega(t) = t^2
  // Table of (t, omega(t)) with strictly increasing t > 0.
  static WeightFunction custom(std::vector<std::pair<double, double>> table,
                               bool claims_concave = false,
                               bool claims_convex_phi = false);

  double eval(double t) const;
  double log_eval(double t) const;  // log omega(t); -inf where omega = 0
  double phi(double u) const;       // omega(e^u), defined for all real u

  Family family() const { return family_; }
  double param() const { return a_; }
  bool claims_concave() const { return claims_concave_; }
  bool claims_convex_phi() const { return claims_convex_phi_; }
  std::string describe() const;

  // Type invariants: monotone on a probe grid (tolerance 0), unbounded
  // (omega(1e8) > omega(1) + 1), and discrete convexity of phi when claimed.
  void check_invariants() const;

 private:
  WeightFunction() = default;
  Family family_ = Family::Power;
  double a_ = 1.0;
  bool claims_concave_ = false;
  bool claims_convex_phi_ = true;
  // custom: log t -> log omega, linear interpolation, slope-extended tails
  std::shared_ptr<std::vector<std::pair<double, double>>> log_table_;
};

// Discrete Young conjugate phi*(v) = sup_{u>=0} [uv - phi(u)].
// `values` may hold +inf past the finite cutoff v0 when omega ~ log_+.
struct ConjugateTable {
  std::vector<double> v_grid;
  std::vector<double> values;
  std::vector<double> u_grid;  // primal grid actually used
  bool degenerate = false;     // omega ~ log_+ branch (finite cutoff)
  double cutoff_v0 = kInf;     // phi*(v) = +inf for v > cutoff_v0

  // Piecewise-linear evaluation; +inf past the cutoff in the degenerate
  // case, GridTooSmall beyond the tabulated range otherwise.
  double eval(double v) const;

  void check_invariants() const;
};

ConjugateTable young_conjugate(const WeightFunction& w, const std::vector<double>& v_grid);

// Analytic conjugate for the closed-form families (reference values for
// residual columns and tests); nullopt for custom weights.
std::optional<double> conjugate_closed_form(const WeightFunction& w, double v);

// Conjugate of arbitrary samples (u_grid increasing, f convex-ish); shared by
// young_conjugate and gi_profile_M. Throws GridTooSmall on unexpected
// boundary maximizers.
ConjugateTable conjugate_on_grid(const std::vector<double>& u_grid,
                                 const std::vector<double>& f_values,
                                 const std::vector<double>& v_grid,
                                 bool allow_degenerate, bool full_scan = false);

std::vector<double> default_v_grid(double v_max, int points = 2048);

// --- coefficient estimators -------------------------------------------------
//
// Every inf{L : ... <= L omega(t) + C} coefficient is rendered as the
// tail-limsup of the defining ratio over a log grid t in [1, 1e6]
// (64 points/decade); t < 10 is discarded so the additive C drops out, and
// the limit is extracted by a quadratic fit in 1/log t.

Estimate estimate_alpha_tau(const WeightFunction& w, double tau);
Estimate estimate_alpha(const WeightFunction& w);
Estimate estimate_alpha_plus(const WeightFunction& w);
Estimate estimate_beta_star(const WeightFunction& w, double sigma);

struct PLSandwich {
  Estimate lower;   // beta*_sigma / pi
  Estimate upper;   // (1 + 2 beta*_sigma / pi) alpha_sqrt2
};
PLSandwich pl_sandwich(const WeightFunction& w, double sigma);
// sec(a theta / 2) for power(a) with theta < pi/a; 1 for logpower.
std::optional<double> pl_closed_form(const WeightFunction& w, double theta);

Estimate gi_coefficient(const WeightFunction& w, int d, double mu);

struct TheoremConstants {
  Estimate h1_d;      // alpha * alpha_sqrt2 * alpha_d * PL_{pi/2}
  Estimate h2;        // alpha * alpha_plus * alpha_2
  Estimate h1_coord;  // alpha * alpha_plus * alpha_sqrt2
};
TheoremConstants theorem_constants(const WeightFunction& w, int d);

// psi_mu and its conjugate M_mu used by the Gaussian-interpolation
// sequence bounds.
struct GiProfile {
  std::vector<double> u_grid;
  std::vector<double> psi;   // psi_mu(u)
  ConjugateTable M;          // M_mu = conjugate of psi_mu on v_grid
};
GiProfile gi_profile_M(const WeightFunction& w, double mu,
                       const std::vector<double>& v_grid, int d);

// Bundle of everything `weights` knows how to estimate for one omega.
struct WeightCoefficients {
  Estimate alpha;
  Estimate alpha_plus;
  std::map<double, Estimate> alpha_tau;
  std::map<double, Estimate> beta_star;
  Estimate pl_lower, pl_upper;
  std::optional<double> pl_closed;
  std::map<std::pair<int, double>, Estimate> gi;
  Estimate h1_d, h2, h1_coord;
};
WeightCoefficients compute_weight_coefficients(const WeightFunction& w, int d,
                                               double sigma = 2.0,
                                               const std::vector<double>& mu_list = {1.0});

// Weight-spec parsing: "family=power a=1.5" (config style) or the compact
// CLI form "power:1.5", "logpower:0", "gaussian", "custom:<csv path>".
WeightFunction parse_weight_config(const std::string& text);
WeightFunction parse_weight_flag(const std::string& flag);

}  // namespace tfd::weights
