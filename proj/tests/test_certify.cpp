#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "tfd/certify.hpp"
#include "tfd/constructions.hpp"
#include "tfd/suite.hpp"

using namespace tfd;
using namespace tfd::certify;
using hermite::HermiteSeries;
using hermite::MultiIndex;
using hermite::SampledFunction;
using weights::WeightFunction;

namespace {

SampledFunction sample_1d(double R, int points, const std::function<double(double)>& f) {
  auto s = SampledFunction::make(1, R, points);
  for (int i = 0; i < points; ++i) s.values[i] = f(s.axis[i]);
  return s;
}

}  // namespace

TEST_CASE("certify_tf: the standard Gaussian has rate 0 for any admissible weight") {
  auto f = sample_1d(10.0, 201, [](double x) {
    return std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  });
  for (auto w : {WeightFunction::logpower(0.0), WeightFunction::power(1.0),
                 WeightFunction::gaussian_limit()}) {
    auto certs = certify_tf(f, f, w, false, {});
    CHECK(certs[0].rate == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(certs[0].min_slack >= -1e-9);
  }
}

TEST_CASE("certify_tf: (1+x^2) e^{-x^2/2} against log_+ stays below degree 2 + slack") {
  auto f = sample_1d(12.0, 241, [](double x) { return (1.0 + x * x) * std::exp(-0.5 * x * x); });
  auto certs = certify_tf(f, f, WeightFunction::logpower(0.0), false, {});
  CHECK(certs[0].rate <= 2.2);
  CHECK(certs[0].rate > 1.0);
}

TEST_CASE("certify_tf: rate recovery for e^{-(1/2 - lambda)|x|^2}, d = 2") {
  double lambda = 0.1;
  auto f = SampledFunction::make(2, 8.0, 129);
  for (int i = 0; i < f.points; ++i) {
    for (int j = 0; j < f.points; ++j) {
      double x = f.axis[i], y = f.axis[j];
      f.values[f.index({i, j})] = std::exp(-(0.5 - lambda) * (x * x + y * y));
    }
  }
  auto certs = certify_tf(f, f, WeightFunction::gaussian_limit(), false, {});
  CHECK(certs[0].rate == doctest::Approx(lambda).epsilon(0.01));
}

TEST_CASE("certify_tf: NoDecay when the tail outruns every lambda*omega") {
  auto f = sample_1d(12.0, 241, [](double x) { return std::exp(-0.3 * x * x); });
  CHECK_THROWS_AS(certify_tf(f, f, WeightFunction::logpower(0.0), false, {}), Error);
}

TEST_CASE("certify_tf coordinate mode returns one certificate per axis") {
  auto f = SampledFunction::make(2, 8.0, 129);
  for (int i = 0; i < f.points; ++i) {
    for (int j = 0; j < f.points; ++j) {
      double x = f.axis[i], y = f.axis[j];
      f.values[f.index({i, j})] = std::exp(-(0.5 - 0.05) * x * x - (0.5 - 0.15) * y * y);
    }
  }
  auto certs = certify_tf(f, f, WeightFunction::gaussian_limit(), true, {});
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].rate == doctest::Approx(0.05).epsilon(0.05));  // per-axis rates
  CHECK(certs[1].rate == doctest::Approx(0.15).epsilon(0.05));
}

TEST_CASE("certify_hermite: exact exponential line and constructed conjugate envelope") {
  auto s = suite::rate_series(2.0, 1, 50);
  auto rate = certify_hermite_exponential(s);
  CHECK(rate.rate == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(rate.residual < 1e-9);

  auto w = WeightFunction::logpower(1.0);
  auto sat = suite::saturating_series(w, 1.0, 1, 40);
  auto cert = certify_hermite(sat, w, {0.5, 0.75, 1.0, 1.25});
  CHECK(cert.rate == doctest::Approx(1.0));
}

TEST_CASE("certify_hermite: Gaussian width rate matches -log(q)/2") {
  auto s = suite::gaussian_width_series(0.3, 44);
  double rate = certify_hermite_exponential(s).rate;
  CHECK(rate == doctest::Approx(-0.5 * std::log(0.25)).epsilon(0.02));
}

TEST_CASE("certify_hermite flags thin support") {
  HermiteSeries s;
  s.dim = 1;
  s.max_order = 8;
  for (int n = 0; n <= 8; ++n) s.coeffs[{n}] = LogComplex::from_log(-2.0 * n);
  auto cert = certify_hermite(s, WeightFunction::logpower(1.0), {0.5});
  CHECK(cert.under_determined);
}

TEST_CASE("verify_implication: t^2 directions") {
  auto t2 = WeightFunction::gaussian_limit();
  // hermite -> tf at lambda above 4 d h^2
  {
    Instance inst;
    inst.series = suite::rate_series(-std::log(0.3), 1, 60);
    inst.R = 12.0;
    inst.points = 241;
    inst.lambda_check = 0.40;
    inst.rate_hint = -std::log(0.3);
    auto rep = verify_implication(Direction::HermiteToTf, t2, 1, inst);
    CHECK(rep.pass);
    CHECK(rep.paper_bound == doctest::Approx(0.36).epsilon(1e-12));
  }
  // tf -> hermite rejects lambda >= 1/4 instances
  {
    Instance inst;
    inst.series = suite::gaussian_width_series(0.2, 44);  // lambda = 0.3
    inst.R = 13.0;
    inst.points = 161;
    CHECK_THROWS_AS(verify_implication(Direction::TfToHermite, t2, 1, inst), Error);
  }
  // tf -> hermite passes for lambda = 0.15 < 1/4
  {
    Instance inst;
    inst.series = suite::gaussian_width_series(0.35, 44);
    inst.R = 13.0;
    inst.points = 161;
    auto rep = verify_implication(Direction::TfToHermite, t2, 1, inst);
    CHECK(rep.pass);
    CHECK(rep.input_rate == doctest::Approx(0.15).epsilon(0.05));
  }
}

TEST_CASE("verify_implication: weighted hermite -> tf lands under H2/r") {
  auto w = WeightFunction::logpower(1.0);
  Instance inst;
  inst.series = suite::saturating_series(w, 1.0, 2, 24);
  inst.R = 12.0;
  inst.points = 161;
  inst.rate_hint = 1.0;
  auto rep = verify_implication(Direction::HermiteToTf, w, 2, inst);
  CHECK(rep.pass);
  CHECK(rep.paper_bound == doctest::Approx(1.0).epsilon(0.05));  // H2((log+)^2) = 1, r = 1
  CHECK(rep.measured <= 1.05);
}

TEST_CASE("check_gi_sequence_gap: divergence for t, boundedness for the log control") {
  auto rows = check_gi_sequence_gap(WeightFunction::power(1.0), 2, 1.0, {1.0}, 60);
  CHECK(rows[0].diverges);
  CHECK(rows[0].tail_slope > 0.5);

  auto ctrl = check_gi_sequence_gap(WeightFunction::logpower(1.0), 2, 1.0, {0.25}, 60);
  CHECK_FALSE(ctrl[0].diverges);

  // d = 1 degenerate: ratio is identically 1 when r = eps
  auto deg = check_gi_sequence_gap(WeightFunction::logpower(1.0), 1, 1.0, {1.0}, 40);
  CHECK(deg[0].tail_slope == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(deg[0].last_value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("scale equivariance of certify_tf") {
  auto s = suite::gaussian_width_series(0.3, 40);
  auto f = hermite::synthesize(s, 13.0, 161);
  auto fh = hermite::synthesize(hermite::fourier_series(s), 13.0, 161);
  auto t2 = WeightFunction::gaussian_limit();
  auto base = certify_tf(f, fh, t2, false, {})[0];
  auto f2 = f;
  auto fh2 = fh;
  for (auto& v : f2.values) v *= 42.0;
  for (auto& v : fh2.values) v *= 42.0;
  for (auto& v : f2.abs_sum) v *= 42.0;
  for (auto& v : fh2.abs_sum) v *= 42.0;
  for (auto& v : f2.tail_bound) v *= 42.0;
  for (auto& v : fh2.tail_bound) v *= 42.0;
  auto scaled = certify_tf(f2, fh2, t2, false, {})[0];
  CHECK(scaled.rate == doctest::Approx(base.rate).epsilon(1e-12));
  CHECK(scaled.log_constant - base.log_constant == doctest::Approx(std::log(42.0)).epsilon(1e-9));
}

TEST_CASE("FitConfig round trip through a key=value file") {
  auto path = std::string("/tmp/tfd_test_fitcfg.txt");
  {
    std::ofstream out(path);
    out << "# fit config\nbulk_max=1.5\ntail_frac=0.8\ntheorem_slack=0.07\n";
  }
  auto cfg = FitConfig::from_file(path);
  CHECK(cfg.bulk_max == 1.5);
  CHECK(cfg.tail_frac == 0.8);
  CHECK(cfg.theorem_slack == 0.07);
  CHECK(cfg.log_floor == -600.0);  // untouched default
}
