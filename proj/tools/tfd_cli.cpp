// tfd: batch front end for the weight-function calculus, Hermite analysis,
// decay certification, and the construction/verification suites.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>

#include "tfd/bargmann.hpp"
#include "tfd/certify.hpp"
#include "tfd/constructions.hpp"
#include "tfd/io.hpp"
#include "tfd/suite.hpp"

namespace fs = std::filesystem;
using namespace tfd;

namespace {

std::string out_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

certify::FitConfig load_cfg(const std::string& tol_file) {
  if (tol_file.empty()) return {};
  return certify::FitConfig::from_file(tol_file);
}

void echo_config(const std::string& dir, const std::vector<std::string>& lines) {
  if (dir.empty()) return;
  std::ofstream out(fs::path(dir) / "run_config.txt");
  for (const auto& l : lines) out << l << "\n";
}

int run_weights(const std::string& wspec, int d, double sigma, const std::string& dir) {
  auto w = weights::parse_weight_flag(wspec);
  w.check_invariants();
  auto c = weights::compute_weight_coefficients(w, d, sigma, {1.0, 2.0});
  auto show = [](const char* name, const weights::Estimate& e) {
    std::printf("%-18s %s%s\n", name,
                e.infinite ? "inf" : io::format_double(e.value).c_str(),
                e.settled ? "" : "  [unsettled]");
  };
  std::printf("weight %s (d=%d, sigma=%g)\n", w.describe().c_str(), d, sigma);
  show("alpha", c.alpha);
  show("alpha_plus", c.alpha_plus);
  for (const auto& [tau, e] : c.alpha_tau) {
    std::printf("alpha_tau(%-7.4f) %s\n", tau, e.infinite ? "inf" : io::format_double(e.value).c_str());
  }
  for (const auto& [s, e] : c.beta_star) {
    std::printf("beta*_%-12g %s\n", s, e.infinite ? "inf" : io::format_double(e.value).c_str());
  }
  show("PL lower", c.pl_lower);
  show("PL upper", c.pl_upper);
  if (c.pl_closed) std::printf("%-18s %s\n", "PL closed", io::format_double(*c.pl_closed).c_str());
  for (const auto& [key, e] : c.gi) {
    std::printf("GI(d=%d,mu=%g)     %s\n", key.first, key.second,
                e.infinite ? "inf" : io::format_double(e.value).c_str());
  }
  show("H1_d", c.h1_d);
  show("H2", c.h2);
  show("H1_coord", c.h1_coord);
  if (!dir.empty()) {
    std::vector<io::ReportRow> rows;
    auto push = [&](const std::string& id, const weights::Estimate& e) {
      rows.push_back({id, 0, 0, e.infinite ? kInf : e.value, 0, e.settled});
    };
    push("alpha", c.alpha);
    push("alpha_plus", c.alpha_plus);
    for (const auto& [tau, e] : c.alpha_tau) push("alpha_tau:" + io::format_double(tau), e);
    for (const auto& [s, e] : c.beta_star) push("beta_star:" + io::format_double(s), e);
    push("pl_lower", c.pl_lower);
    push("pl_upper", c.pl_upper);
    push("h1_d", c.h1_d);
    push("h2", c.h2);
    push("h1_coord", c.h1_coord);
    io::write_report(out_path(dir, "weights_coefficients.csv"), rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-frequency decay / Hermite-coefficient toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string wspec = "logpower:1", out_dir, tol_file, in_path, in2_path;
  int d = 1, N = 32, points = 241, nmax = 60;
  double R = 12.0, sigma = 2.0, vmax = 100.0, lambda = 1.0, r = 1.0, b = 0.3, a = 1.0;
  std::string mode = "uniform", family = "hermite_rate", theorem = "1.2", rlist = "0.5,1.0";
  std::string poly = "0,0,0,1";

  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--tol", tol_file, "tolerance/fit-region config file");

  auto* cw = app.add_subcommand("weights", "estimate all coefficients of a weight");
  cw->add_option("--weight", wspec)->required();
  cw->add_option("--d", d);
  cw->add_option("--sigma", sigma);

  auto* cc = app.add_subcommand("conjugate", "tabulate the Young conjugate");
  cc->add_option("--weight", wspec)->required();
  cc->add_option("--vmax", vmax);

  auto* ca = app.add_subcommand("analyze", "Hermite-analyze sampled data");
  ca->add_option("--in", in_path)->required();
  ca->add_option("--N", N);

  auto* cs = app.add_subcommand("synthesize", "evaluate a series on a grid");
  cs->add_option("--in", in_path)->required();
  cs->add_option("--R", R);
  cs->add_option("--points", points);

  std::string series_path;
  auto* cf = app.add_subcommand("certify", "fit decay envelopes");
  cf->add_option("--samples", in_path);
  cf->add_option("--fhat", in2_path);
  cf->add_option("--series", series_path);
  cf->add_option("--weight", wspec)->required();
  cf->add_option("--mode", mode)->check(CLI::IsMember({"uniform", "coordinate"}));
  cf->add_option("--rgrid", rlist);

  auto* cb = app.add_subcommand("construct", "build a named series");
  cb->add_option("--family", family)
      ->check(CLI::IsMember({"hermite_rate", "gaussian_width", "poly_gaussian",
                             "diag_counterexample", "diag_sequence_counterexample",
                             "power_counterexample"}));
  cb->add_option("--weight", wspec);
  cb->add_option("--d", d);
  cb->add_option("--nmax", nmax);
  cb->add_option("--r", r);
  cb->add_option("--b", b);
  cb->add_option("--a", a);
  cb->add_option("--lambda", lambda);
  cb->add_option("--poly", poly, "monomial coefficients c0,c1,...");

  auto* cv = app.add_subcommand("verify", "run a theorem-level verification chain");
  cv->add_option("--theorem", theorem)->required();
  cv->add_option("--d", d);
  cv->add_option("--weight", wspec);

  auto* cu = app.add_subcommand("suite", "run the full acceptance suite");
  (void)cu;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto cfg = load_cfg(tol_file);
    // every run with an output directory gets a config echo
    {
      std::vector<std::string> echo;
      for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
      echo_config(out_dir, echo);
    }
    if (cw->parsed()) {
      return run_weights(wspec, d, sigma, out_dir);
    }
    if (cc->parsed()) {
      auto w = weights::parse_weight_flag(wspec);
      auto tab = weights::young_conjugate(w, weights::default_v_grid(vmax));
      std::vector<double> residual;
      if (weights::conjugate_closed_form(w, 1.0)) {
        residual.reserve(tab.v_grid.size());
        for (size_t i = 0; i < tab.v_grid.size(); ++i) {
          double cf = *weights::conjugate_closed_form(w, tab.v_grid[i]);
          double got = tab.values[i];
          residual.push_back(std::isfinite(cf) && std::isfinite(got) ? got - cf
                             : (std::isfinite(cf) == std::isfinite(got) ? 0.0 : kInf));
        }
      }
      std::string path = out_path(out_dir, "conjugate.csv");
      io::write_conjugate(path, tab, residual);
      std::printf("wrote %s (degenerate=%d cutoff=%s)\n", path.c_str(), tab.degenerate,
                  io::format_double(tab.cutoff_v0).c_str());
      return 0;
    }
    if (ca->parsed()) {
      auto f = io::read_samples(in_path);
      auto s = hermite::analyze(f, N);
      std::string path = out_path(out_dir, "series.csv");
      io::write_series(path, s);
      std::printf("wrote %s (%zu coefficients)\n", path.c_str(), s.coeffs.size());
      return 0;
    }
    if (cs->parsed()) {
      auto s = io::read_series(in_path);
      auto f = hermite::synthesize(s, R, points);
      std::string path = out_path(out_dir, "samples.csv");
      io::write_samples(path, f);
      std::printf("wrote %s\n", path.c_str());
      return 0;
    }
    if (cf->parsed()) {
      auto w = weights::parse_weight_flag(wspec);
      std::vector<io::ReportRow> rows;
      bool all_pass = true;
      if (!in_path.empty()) {
        auto f = io::read_samples(in_path);
        auto fh = in2_path.empty() ? f : io::read_samples(in2_path);
        auto certs = certify::certify_tf(f, fh, w, mode == "coordinate", cfg);
        for (const auto& c : certs) {
          bool ok = c.min_slack >= -1e-9;
          all_pass = all_pass && ok;
          rows.push_back({"tf" + (c.axis >= 0 ? ":axis" + std::to_string(c.axis) : ""), 0.0, 0.0,
                          c.rate, c.min_slack, ok});
          std::printf("tf%s rate=%g logC=%g residual=%g\n",
                      c.axis >= 0 ? (":axis" + std::to_string(c.axis)).c_str() : "", c.rate,
                      c.log_constant, c.residual);
        }
      } else if (!series_path.empty()) {
        auto s = io::read_series(series_path);
        std::vector<double> rgrid;
        std::stringstream ss(rlist);
        std::string tok;
        while (std::getline(ss, tok, ',')) rgrid.push_back(std::stod(tok));
        auto c = certify::certify_hermite(s, w, rgrid, 1.0, cfg);
        bool ok = c.rate > 0.0;
        all_pass = ok;
        rows.push_back({"hermite", 0.0, 0.0, c.rate, c.residual, ok});
        std::printf("hermite certified r=%g logC=%g residual=%g cutoff=%s\n", c.rate,
                    c.log_constant, c.residual, io::format_double(c.cutoff).c_str());
      } else {
        fail(ErrorKind::BadInput, "certify needs --samples or --series");
      }
      if (!out_dir.empty()) io::write_report(out_path(out_dir, "certify_report.csv"), rows);
      return all_pass ? 0 : 1;
    }
    if (cb->parsed()) {
      constructions::ConstructionSpec spec;
      spec.dim = d;
      spec.n_max = nmax;
      spec.r = r;
      spec.b = b;
      spec.a = a;
      spec.lambda = lambda;
      if (family == "hermite_rate") spec.family = constructions::Family::HermiteRate;
      else if (family == "gaussian_width") spec.family = constructions::Family::GaussianWidth;
      else if (family == "poly_gaussian") {
        spec.family = constructions::Family::PolyGaussian;
        spec.poly.clear();
        std::stringstream ss(poly);
        std::string tok;
        while (std::getline(ss, tok, ',')) spec.poly.push_back(std::stod(tok));
      } else if (family == "diag_counterexample") {
        spec.family = constructions::Family::DiagCounterexample;
        spec.weight = weights::parse_weight_flag(wspec);
      } else if (family == "diag_sequence_counterexample") {
        spec.family = constructions::Family::DiagSequenceCounterexample;
        spec.weight = weights::parse_weight_flag(wspec);
      } else {
        spec.family = constructions::Family::PowerCounterexample;
      }
      auto built = constructions::build(spec);
      std::vector<std::string> prov = {"construct family=" + family,
                                       "nmax=" + std::to_string(nmax),
                                       "d=" + std::to_string(spec.dim)};
      if (spec.weight) prov.push_back("weight=" + spec.weight->describe());
      if (built.eta > 0) prov.push_back("eta=" + io::format_double(built.eta));
      std::string path = out_path(out_dir, family + "_series.csv");
      io::write_series(path, built.series, false, prov);
      std::printf("wrote %s (%zu coefficients)\n", path.c_str(), built.series.coeffs.size());
      return 0;
    }
    if (cv->parsed()) {
      weights::WeightFunction w = weights::parse_weight_flag(wspec);
      auto rows = suite::verify_theorem(theorem, d, cv->count("--weight") ? &w : nullptr);
      bool all = true;
      for (const auto& row : rows) {
        std::printf("%-44s input=%-10.4g bound=%-10.4g measured=%-10.4g %s\n",
                    row.test_id.c_str(), row.input_rate, row.paper_bound, row.measured,
                    row.pass ? "PASS" : "FAIL");
        all = all && row.pass;
      }
      if (!out_dir.empty()) io::write_report(out_path(out_dir, "verify_report.csv"), rows);
      if (!all) std::printf("FAILED: theorem %s\n", theorem.c_str());
      return all ? 0 : 1;
    }
    if (cu->parsed()) {
      auto results = suite::run_acceptance();
      bool all = true;
      std::vector<io::ReportRow> rows;
      for (const auto& cr : results) {
        std::printf("[%s] criterion %d: %s\n", cr.pass ? "PASS" : "FAIL", cr.id,
                    cr.title.c_str());
        for (const auto& ck : cr.checks) {
          std::printf("    [%s] %s%s%s\n", ck.pass ? "ok" : "FAIL", ck.name.c_str(),
                      ck.detail.empty() ? "" : ": ", ck.detail.c_str());
          rows.push_back({"criterion" + std::to_string(cr.id) + ":" + ck.name, 0, 0, 0, 0,
                          ck.pass});
        }
        all = all && cr.pass;
      }
      if (!out_dir.empty()) io::write_report(out_path(out_dir, "acceptance_report.csv"), rows);
      std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
