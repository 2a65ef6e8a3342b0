#pragma once

#include <string>
#include <vector>

#include "tfd/constructions.hpp"
#include "tfd/io.hpp"

namespace tfd::suite {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<CheckResult> checks;
};

// The acceptance gate: one result per criterion, sub-checks attached.
std::vector<CriterionResult> run_acceptance();

// All module invariant/property bullets as named checks (criterion 10 body).
std::vector<CheckResult> run_property_suites();

// Theorem-level verification chains for the CLI:
//   1.2      near-optimal Gaussian decay <-> exponential coefficient decay
//   1.3      weighted decay <-> conjugate-envelope coefficient decay
//   prop-3.1 / prop-3.2 / prop-3.3 / prop-3.4   individual implications
//   thm-4.1  coordinate-wise success under Gaussian interpolation
//   thm-4.2  diagonal counterexample (no Gaussian interpolation)
//   thm-4.3  power-weight counterexample family
std::vector<io::ReportRow> verify_theorem(const std::string& id, int d,
                                          const weights::WeightFunction* w = nullptr);

// Shared instance builders (also used by tests).
hermite::HermiteSeries gaussian_width_series(double b, int n_max);
hermite::HermiteSeries rate_series(double r, int dim, int n_max);
// |H| saturating sqrt(alpha!) e^{-phi*(r|alpha|)/r}.
hermite::HermiteSeries saturating_series(const weights::WeightFunction& w, double r, int dim,
                                         int n_max);

}  // namespace tfd::suite
