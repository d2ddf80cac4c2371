#include "disclab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace disclab {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, std::size_t line) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw IoError("line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  if (!std::isfinite(v)) {
    throw IoError("line " + std::to_string(line) + ": non-finite entry '" + token + "'");
  }
  return v;
}

}  // namespace

Matrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw IoError("line 1: missing 'm n' header");
  std::istringstream header(line);
  long long m = 0, n = 0;
  std::string extra;
  if (!(header >> m >> n) || (header >> extra) || m < 1 || n < 1) {
    throw IoError("line 1: malformed header, expected 'm n' with m, n >= 1");
  }

  const std::size_t want = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  std::vector<double> entries;
  entries.reserve(want);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (entries.size() == want) {
        throw IoError("line " + std::to_string(lineno) + ": more than " + std::to_string(want) +
                      " entries");
      }
      entries.push_back(parse_double(tok, lineno));
    }
  }
  if (entries.size() != want) {
    throw IoError("line " + std::to_string(lineno) + ": expected " + std::to_string(want) +
                  " entries, found " + std::to_string(entries.size()));
  }
  return Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(entries));
}

void write_matrix(const Matrix& m, const std::string& path) {
  std::string out;
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += fmt17(m(i, j));
    }
    out += '\n';
  }
  write_text(path, out);
}

DualCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("certificate parse failure in '" + path + "': " + e.what());
  }

  for (const char* key : {"p", "w", "D"}) {
    if (!j.contains(key)) throw IoError("certificate missing key \"" + std::string(key) + "\"");
  }
  DualCertificate cert;
  try {
    cert.p = j.at("p").get<std::vector<double>>();
    cert.w = j.at("w").get<std::vector<double>>();
    cert.D = j.at("D").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("certificate field has wrong type: " + std::string(e.what()));
  }

  double total = 0.0;
  for (double v : cert.p) {
    if (v < 0.0) throw IoError("certificate p has a negative entry");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw IoError("certificate p sums to " + fmt17(total) + ", not a distribution");
  }
  return cert;
}

void write_certificate(const DualCertificate& cert, const std::string& path) {
  nlohmann::ordered_json j;
  j["p"] = cert.p;
  j["w"] = cert.w;
  j["D"] = cert.D;
  write_text(path, j.dump(2) + "\n");
}

void write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw IoError("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
}

nlohmann::ordered_json report_to_json(const SolveReport& report, bool include_timings) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  j["instance"] = {{"generator", report.generator},
                   {"rows", report.rows},
                   {"cols", report.cols},
                   {"max_col_norm", report.max_col_norm}};
  j["seed"] = report.master_seed;
  j["primal"] = {{"value", report.primal_value},
                 {"sqrt_value", report.primal_sqrt},
                 {"converged", report.converged},
                 {"iterations", report.iterations}};
  j["dual"] = {{"D", report.dual_d},
               {"sum_w", report.dual_wsum},
               {"min_eigenvalue", report.dual_min_eig}};
  j["gap"] = report.gap;
  if (report.brute_value) j["brute"] = {{"value", *report.brute_value}};
  if (report.rounded_value) j["rounded"] = {{"value", *report.rounded_value}};
  if (include_timings) {
    nlohmann::ordered_json t;
    for (const auto& [phase, seconds] : report.timings) t[phase] = seconds;
    j["timings_sec"] = t;
  }
  return j;
}

std::string report_to_table(const SolveReport& report, bool include_timings) {
  std::vector<std::pair<std::string, std::string>> rows = {
      {"version", report.version},
      {"generator", report.generator},
      {"rows", std::to_string(report.rows)},
      {"cols", std::to_string(report.cols)},
      {"max_col_norm", fmt17(report.max_col_norm)},
      {"seed", std::to_string(report.master_seed)},
      {"primal.value", fmt17(report.primal_value)},
      {"primal.sqrt_value", fmt17(report.primal_sqrt)},
      {"primal.converged", report.converged ? "true" : "false"},
      {"primal.iterations", std::to_string(report.iterations)},
      {"dual.D", fmt17(report.dual_d)},
      {"dual.sum_w", fmt17(report.dual_wsum)},
      {"dual.min_eigenvalue", fmt17(report.dual_min_eig)},
      {"gap", fmt17(report.gap)},
  };
  if (report.brute_value) rows.emplace_back("brute.value", fmt17(*report.brute_value));
  if (report.rounded_value) rows.emplace_back("rounded.value", fmt17(*report.rounded_value));
  if (include_timings) {
    for (const auto& [phase, seconds] : report.timings) {
      rows.emplace_back("time." + phase, fmt17(seconds));
    }
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace disclab
