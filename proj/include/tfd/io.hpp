#pragma once

#include <map>
#include <string>
#include <vector>

#include "tfd/bargmann.hpp"
#include "tfd/certify.hpp"
#include "tfd/hermite.hpp"
#include "tfd/weights.hpp"

namespace tfd::io {

// Every CSV starts with `# schema=<name> version=1` plus schema-specific
// keys; identical inputs yield byte-identical files (fixed iteration order,
// no timestamps).

void write_series(const std::string& path, const hermite::HermiteSeries& s,
                  bool taylor_flag = false,
                  const std::vector<std::string>& provenance = {});
hermite::HermiteSeries read_series(const std::string& path);

void write_samples(const std::string& path, const hermite::SampledFunction& f);
hermite::SampledFunction read_samples(const std::string& path);

void write_conjugate(const std::string& path, const weights::ConjugateTable& tab,
                     const std::vector<double>& closed_form_residual = {});

struct ReportRow {
  std::string test_id;
  double input_rate;
  double paper_bound;
  double measured;
  double slack;
  bool pass;
};
void write_report(const std::string& path, const std::vector<ReportRow>& rows);

std::string format_double(double v);

}  // namespace tfd::io
