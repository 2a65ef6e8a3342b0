#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tfd/weights.hpp"

using namespace tfd;
using namespace tfd::weights;

TEST_CASE("young conjugate: log_+ has the degenerate cutoff at v0 = 1") {
  auto tab = young_conjugate(WeightFunction::logpower(0.0), default_v_grid(10.0));
  CHECK(tab.degenerate);
  CHECK(tab.cutoff_v0 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tab.eval(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(tab.eval(1.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(tab.eval(2.0) == kInf);
}

TEST_CASE("young conjugate: (log_+ t)^2 matches v^2/4, cross-checked by brute force") {
  auto w = WeightFunction::logpower(1.0);
  auto tab = young_conjugate(w, default_v_grid(20.0));
  CHECK(tab.eval(10.0) == doctest::Approx(25.0).epsilon(1e-3));
  double brute = static_cast<double>(oracles::brute_force_conjugate(
      [](long double u) { return u * u; }, 10.0L, 40.0L));
  CHECK(brute == doctest::Approx(25.0).epsilon(1e-9));
  CHECK(tab.eval(10.0) == doctest::Approx(brute).epsilon(1e-4));
}

TEST_CASE("young conjugate: (log_+ t)^{1+a} closed form via calculus oracle") {
  for (double a : {0.5, 1.0, 2.0}) {
    auto tab = young_conjugate(WeightFunction::logpower(a), default_v_grid(120.0));
    for (double v : {2.0, 10.0, 50.0, 100.0}) {
      double closed = a * std::pow(1.0 + a, -(1.0 + a) / a) * std::pow(v, (1.0 + a) / a);
      long double u_star = std::pow(v / (1.0 + a), 1.0 / a);  // stationary point
      double brute = static_cast<double>(oracles::brute_force_conjugate(
          [a](long double u) { return std::pow(u, static_cast<long double>(1.0 + a)); },
          v, 2.0L * u_star + 50.0L));
      CHECK(closed == doctest::Approx(brute).epsilon(1e-6));
      CHECK(tab.eval(v) == doctest::Approx(closed).epsilon(1e-3));
    }
  }
  // a = 1 specializes to v^2/4
  CHECK(*conjugate_closed_form(WeightFunction::logpower(1.0), 10.0) ==
        doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("young conjugate: power family and table invariants") {
  auto w = WeightFunction::power(1.0);
  auto tab = young_conjugate(w, default_v_grid(60.0));
  tab.check_invariants();
  for (double v : {2.0, 10.0, 50.0}) {
    double closed = v * (std::log(v) - 1.0);  // phi(u) = e^u
    CHECK(tab.eval(v) == doctest::Approx(closed).epsilon(1e-4));
  }
  CHECK_FALSE(tab.degenerate);
}

TEST_CASE("young conjugate: non-convex phi is rejected") {
  // omega grows like t up to 100 then flattens to logarithmic growth:
  // phi = e^u then ~linear, concave at the crossover
  std::vector<std::pair<double, double>> rows;
  for (double t = 1.0; t <= 99.0; t += 1.0) rows.push_back({t, t});
  for (double t = 100.0; t <= 1e9; t *= 1.6) rows.push_back({t, 100.0 + 10.0 * std::log(t / 100.0)});
  auto w = WeightFunction::custom(rows);
  CHECK_THROWS_AS(young_conjugate(w, default_v_grid(10.0)), Error);
}

TEST_CASE("alpha_tau closed forms on the power family") {
  CHECK(estimate_alpha_tau(WeightFunction::power(2.0), 2.0).value ==
        doctest::Approx(4.0).epsilon(0.02));
  CHECK(estimate_alpha_tau(WeightFunction::power(1.0), 3.0).value ==
        doctest::Approx(3.0).epsilon(0.02));
  CHECK_THROWS_AS(estimate_alpha_tau(WeightFunction::power(1.0), 1.0), Error);
}

TEST_CASE("alpha_tau((log_+ t)^2, 10) extrapolates to 1") {
  auto e = estimate_alpha_tau(WeightFunction::logpower(1.0), 10.0);
  CHECK(e.value == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("alpha_tau reports +inf for super-moderate growth") {
  // omega = e^{sqrt t} stored as a table
  std::vector<std::pair<double, double>> rows;
  for (double t = 1.0; t <= 3e7; t *= 1.3) rows.push_back({t, std::exp(std::sqrt(t) / 50.0)});
  auto e = estimate_alpha_tau(WeightFunction::custom(rows), 2.0);
  CHECK(e.infinite);
}

TEST_CASE("alpha estimates: t^2 -> 2, t^{1/2} -> 1, log_+ -> 1") {
  CHECK(estimate_alpha(WeightFunction::power(2.0)).value == doctest::Approx(2.0).epsilon(0.02));
  CHECK(estimate_alpha(WeightFunction::power(0.5)).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(estimate_alpha(WeightFunction::logpower(0.0)).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(estimate_alpha_plus(WeightFunction::power(2.0)).value ==
        doctest::Approx(1.0).epsilon(0.03));
  CHECK(estimate_alpha_plus(WeightFunction::logpower(0.0)).value ==
        doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("beta*_sigma against the analytic integral") {
  // omega = t^a: sigma int_1^inf s^{a-1-sigma} ds * t^a = sigma/(sigma-a) omega(t)
  CHECK(estimate_beta_star(WeightFunction::power(1.0), 2.0).value ==
        doctest::Approx(2.0).epsilon(0.02));
  CHECK(estimate_beta_star(WeightFunction::power(1.5), 2.0).value ==
        doctest::Approx(4.0).epsilon(0.02));
  // omega = log_+: integral = log t + 1/2, ratio -> 1
  auto e = estimate_beta_star(WeightFunction::logpower(0.0), 2.0);
  CHECK(e.value == doctest::Approx(1.0).epsilon(0.05));
  // omega = t^2 at sigma = 2 diverges
  CHECK_THROWS_AS(estimate_beta_star(WeightFunction::gaussian_limit(), 2.0), Error);
}

TEST_CASE("pl_sandwich rejects weights with infinite beta*") {
  try {
    pl_sandwich(WeightFunction::gaussian_limit(), 2.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
}

TEST_CASE("estimate_alpha raises NotModerate when even alpha_2 diverges") {
  std::vector<std::pair<double, double>> rows;
  for (double t = 1.0; t <= 3e7; t *= 1.3) rows.push_back({t, std::exp(std::sqrt(t) / 50.0)});
  try {
    estimate_alpha(WeightFunction::custom(rows));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotModerate);
  }
}

TEST_CASE("PL closed forms and the sandwich") {
  CHECK(*pl_closed_form(WeightFunction::power(1.0), std::numbers::pi / 2.0) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(*pl_closed_form(WeightFunction::logpower(0.5), 1.0) == doctest::Approx(1.0));
  CHECK_FALSE(pl_closed_form(WeightFunction::gaussian_limit(), std::numbers::pi / 2.0));

  auto s = pl_sandwich(WeightFunction::power(1.0), 2.0);
  CHECK(s.lower.value == doctest::Approx(2.0 / std::numbers::pi).epsilon(0.02));
  CHECK(s.upper.value ==
        doctest::Approx((1.0 + 4.0 / std::numbers::pi) * std::numbers::sqrt2).epsilon(0.03));
  CHECK(s.lower.value <= std::numbers::sqrt2);
  CHECK(std::numbers::sqrt2 <= s.upper.value);
}

TEST_CASE("gi_coefficient: finite for log weights, infinite for powers") {
  auto log1 = gi_coefficient(WeightFunction::logpower(1.0), 2, 1.0);
  CHECK_FALSE(log1.infinite);
  CHECK(log1.value <= 2.0 * 1.05);

  auto log0 = gi_coefficient(WeightFunction::logpower(0.0), 3, 2.0);
  CHECK_FALSE(log0.infinite);
  CHECK(log0.value == doctest::Approx(1.0).epsilon(0.05));

  CHECK(gi_coefficient(WeightFunction::power(1.0), 2, 1.0).infinite);
  CHECK(gi_coefficient(WeightFunction::power(0.5), 2, 1.0).infinite);
  CHECK_THROWS_AS(gi_coefficient(WeightFunction::gaussian_limit(), 2, 1.0), Error);
}

TEST_CASE("gi_coefficient mu-monotonicity bound") {
  auto w = WeightFunction::logpower(1.0);
  double g1 = gi_coefficient(w, 2, 1.0).value;
  double g2 = gi_coefficient(w, 2, 2.0).value;
  CHECK(g1 <= std::max(1.0, 2.0) * g2 * 1.05);
  CHECK(g2 <= std::max(1.0, 0.5) * g1 * 1.05);
}

TEST_CASE("theorem constants") {
  // logpower: every factor is 1
  auto tc = theorem_constants(WeightFunction::logpower(0.5), 2);
  CHECK(tc.h1_d.value == doctest::Approx(1.0).epsilon(0.05));
  CHECK(tc.h2.value == doctest::Approx(1.0).epsilon(0.05));
  CHECK(tc.h1_coord.value == doctest::Approx(1.0).epsilon(0.05));

  // t^a with 0 < a < 1: H1_d = 2^{a/2} d^a sec(a pi/4)
  double a = 0.5;
  int d = 2;
  auto tp = theorem_constants(WeightFunction::power(a), d);
  double expect = std::pow(2.0, a / 2.0) * std::pow(d, a) / std::cos(a * std::numbers::pi / 4.0);
  CHECK(tp.h1_d.value == doctest::Approx(expect).epsilon(0.05));

  // t^a with 1 < a < 2: H2 = 2^{2a-1}, H1_d = 2^{3a/2-1} d^a sec(a pi/4)
  auto th = theorem_constants(WeightFunction::power(1.5), 2);
  CHECK(th.h2.value == doctest::Approx(std::pow(2.0, 2.0)).epsilon(0.05));
  double h1d_expect = std::pow(2.0, 1.25) * std::pow(2.0, 1.5) / std::cos(1.5 * std::numbers::pi / 4.0);
  CHECK(th.h1_d.value == doctest::Approx(h1d_expect).epsilon(0.05));

  // t^a with 0 < a <= 1: H2 = 2^a
  auto t1 = theorem_constants(WeightFunction::power(1.0), 2);
  CHECK(t1.h2.value == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("two-pointer conjugation agrees with the exhaustive scan") {
  // random convex phi samples: piecewise sums of increasing slopes
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> du(0.01, 0.2);
  std::vector<double> u{0.0}, fv{0.0};
  double slope = 0.0, val = 0.0;
  for (int i = 0; i < 400; ++i) {
    double step = du(rng);
    slope += du(rng);
    val += slope * step;
    u.push_back(u.back() + step);
    fv.push_back(val);
  }
  std::vector<double> vg;
  for (int k = 0; k <= 60; ++k) vg.push_back(0.2 * k);
  auto fast = conjugate_on_grid(u, fv, vg, false, false);
  auto slow = conjugate_on_grid(u, fv, vg, false, true);
  for (size_t k = 0; k < vg.size(); ++k) {
    CHECK(fast.values[k] == doctest::Approx(slow.values[k]).epsilon(1e-14));
  }
}

TEST_CASE("gi_profile_M: conjugate of psi_mu tracks the explicit form") {
  // omega = (log_+ t)^2, d = 2, mu = 1: discrepancy against
  // (v/4) log(v/e) + (1/2) phi*(v) stays bounded over v in [10, 500]
  auto w = WeightFunction::logpower(1.0);
  auto vg = default_v_grid(500.0, 512);
  auto prof = gi_profile_M(w, 1.0, vg, 2);
  auto conj = young_conjugate(w, default_v_grid(520.0));
  double lo = kInf, hi = -kInf;
  for (size_t i = 0; i < vg.size(); ++i) {
    double v = vg[i];
    if (v < 10.0 || v > 500.0) continue;
    if (!std::isfinite(prof.M.values[i])) continue;
    double ref = 0.25 * v * std::log(v / std::numbers::e) + 0.5 * conj.eval(v);
    double disc = prof.M.values[i] - ref;
    lo = std::min(lo, disc);
    hi = std::max(hi, disc);
  }
  CHECK(hi - lo <= 2.0);  // measured spread ~<= 1; bound frozen with margin

  // M_mu(0) = -inf psi_mu <= 0
  auto prof0 = gi_profile_M(w, 1.0, {0.0, 0.5, 1.0}, 2);
  CHECK(prof0.M.values[0] <= 0.0);
}

TEST_CASE("gi_profile_M: log_+ weight degenerates with matching cutoffs") {
  // psi_mu(u) = u + (d-1)/(2d) for omega = log_+, so M_mu truncates at the
  // same v0 = 1/mu slope as phi* itself
  auto w = WeightFunction::logpower(0.0);
  auto prof = gi_profile_M(w, 1.0, default_v_grid(5.0, 256), 2);
  CHECK(prof.M.degenerate);
  CHECK(prof.M.cutoff_v0 == doctest::Approx(1.0).epsilon(0.02));
  auto conj = young_conjugate(w, default_v_grid(5.0));
  CHECK(conj.cutoff_v0 == doctest::Approx(prof.M.cutoff_v0).epsilon(0.02));
}

TEST_CASE("conjugate growth separation (r0 < r1)") {
  auto tab = young_conjugate(WeightFunction::logpower(1.0), default_v_grid(120.0));
  auto log_ratio = [&](double v) { return tab.eval(v) - tab.eval(2.0 * v) / 2.0; };
  CHECK(log_ratio(50.0) < std::log(1e-3) + log_ratio(10.0));
}

TEST_CASE("weight spec parsing") {
  CHECK(parse_weight_flag("power:1.5").describe() == "power:1.5");
  CHECK(parse_weight_flag("logpower:0").describe() == "logpower:0");
  CHECK(parse_weight_config("family=power a=1.5").describe() == "power:1.5");
  CHECK(parse_weight_config("family=logpower a=0").describe() == "logpower:0");
  CHECK_THROWS_AS(parse_weight_flag("bogus:1"), Error);
  CHECK_THROWS_AS(parse_weight_config("family=power"), Error);
}

TEST_CASE("weight invariants: monotone, unbounded, convex phi when claimed") {
  WeightFunction::power(1.5).check_invariants();
  WeightFunction::logpower(0.0).check_invariants();
  WeightFunction::gaussian_limit().check_invariants();
  // decreasing table is rejected on construction
  CHECK_THROWS_AS(WeightFunction::custom({{1.0, 2.0}, {2.0, 1.0}}), Error);
  // bounded weight fails the unboundedness probe
  std::vector<std::pair<double, double>> flat;
  for (double t = 1.0; t < 1e9; t *= 2.0) flat.push_back({t, 1.0 - 1.0 / t});
  CHECK_THROWS_AS(WeightFunction::custom(flat).check_invariants(), Error);
}
