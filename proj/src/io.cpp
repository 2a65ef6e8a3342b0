#include "tfd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tfd::io {

std::string format_double(double v) {
  if (v == kInf) return "inf";
  if (v == kNegInf) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

double parse_double(const std::string& s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return kNegInf;
  return std::stod(s);
}

std::map<std::string, std::string> parse_schema_line(const std::string& line,
                                                     const std::string& expect) {
  std::map<std::string, std::string> kv;
  std::istringstream is(line);
  std::string tok;
  is >> tok;  // '#'
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  if (kv["schema"] != expect) {
    fail(ErrorKind::BadInput, "expected schema=" + expect + ", got " + kv["schema"]);
  }
  return kv;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_series(const std::string& path, const hermite::HermiteSeries& s, bool taylor_flag,
                  const std::vector<std::string>& provenance) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << "# schema=hermite_series version=1 d=" << s.dim << " maxorder=" << s.max_order
      << " taylor=" << (taylor_flag ? 1 : 0) << " complete=" << (s.complete ? 1 : 0) << "\n";
  for (const auto& line : provenance) out << "# " << line << "\n";
  for (int k = 1; k <= s.dim; ++k) out << "alpha_" << k << ",";
  out << "log_magnitude,phase_re,phase_im\n";
  for (const auto& [a, c] : s.coeffs) {
    for (int k : a) out << k << ",";
    out << format_double(c.log_mag) << "," << format_double(c.phase.real()) << ","
        << format_double(c.phase.imag()) << "\n";
  }
}

hermite::HermiteSeries read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  std::string line;
  std::getline(in, line);
  auto kv = parse_schema_line(line, "hermite_series");
  hermite::HermiteSeries s;
  s.dim = std::stoi(kv.at("d"));
  s.max_order = std::stoi(kv.at("maxorder"));
  if (kv.count("complete")) s.complete = kv.at("complete") == "1";
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("alpha_1", 0) == 0) continue;  // header row
    auto cells = split_csv(line);
    if (cells.size() != static_cast<size_t>(s.dim) + 3) {
      fail(ErrorKind::BadInput, "bad series row: " + line);
    }
    hermite::MultiIndex a(s.dim);
    for (int k = 0; k < s.dim; ++k) a[k] = std::stoi(cells[k]);
    LogComplex c;
    c.log_mag = parse_double(cells[s.dim]);
    c.phase = {parse_double(cells[s.dim + 1]), parse_double(cells[s.dim + 2])};
    s.coeffs[a] = c;
  }
  return s;
}

void write_samples(const std::string& path, const hermite::SampledFunction& f) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << "# schema=samples version=1 d=" << f.dim << " R=" << format_double(f.R)
      << " delta=" << format_double(f.delta()) << " points=" << f.points << "\n";
  for (int k = 1; k <= f.dim; ++k) out << "x_" << k << ",";
  out << "re,im\n";
  const int G = f.points;
  std::vector<int> idx(f.dim, 0);
  for (size_t flat = 0; flat < f.values.size(); ++flat) {
    size_t rem = flat;
    for (int k = f.dim - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % G);
      rem /= G;
    }
    for (int k = 0; k < f.dim; ++k) out << format_double(f.axis[idx[k]]) << ",";
    out << format_double(f.values[flat].real()) << "," << format_double(f.values[flat].imag())
        << "\n";
  }
}

hermite::SampledFunction read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  std::string line;
  std::getline(in, line);
  auto kv = parse_schema_line(line, "samples");
  int dim = std::stoi(kv.at("d"));
  double R = parse_double(kv.at("R"));
  int points = std::stoi(kv.at("points"));
  auto f = hermite::SampledFunction::make(dim, R, points);
  size_t flat = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("x_1", 0) == 0) continue;
    auto cells = split_csv(line);
    if (cells.size() != static_cast<size_t>(dim) + 2) fail(ErrorKind::BadInput, "bad samples row");
    if (flat >= f.values.size()) fail(ErrorKind::BadInput, "too many sample rows");
    f.values[flat++] = {parse_double(cells[dim]), parse_double(cells[dim + 1])};
  }
  if (flat != f.values.size()) fail(ErrorKind::BadInput, "sample row count mismatch");
  return f;
}

void write_conjugate(const std::string& path, const weights::ConjugateTable& tab,
                     const std::vector<double>& closed_form_residual) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << "# schema=conjugate version=1 degenerate=" << (tab.degenerate ? 1 : 0)
      << " cutoff=" << format_double(tab.cutoff_v0) << "\n";
  bool with_residual = !closed_form_residual.empty();
  out << (with_residual ? "v,phi_star,residual_closed_form\n" : "v,phi_star\n");
  for (size_t i = 0; i < tab.v_grid.size(); ++i) {
    out << format_double(tab.v_grid[i]) << "," << format_double(tab.values[i]);
    if (with_residual) out << "," << format_double(closed_form_residual[i]);
    out << "\n";
  }
}

void write_report(const std::string& path, const std::vector<ReportRow>& rows) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << "# schema=report version=1\n";
  out << "test_id,input_rate,paper_bound,measured,slack,pass\n";
  for (const auto& r : rows) {
    out << r.test_id << "," << format_double(r.input_rate) << "," << format_double(r.paper_bound)
        << "," << format_double(r.measured) << "," << format_double(r.slack) << ","
        << (r.pass ? 1 : 0) << "\n";
  }
}

}  // namespace tfd::io
