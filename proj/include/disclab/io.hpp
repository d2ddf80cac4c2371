#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "disclab/dual.hpp"
#include "disclab/matrix.hpp"

namespace disclab {

inline constexpr const char* kVersion = "0.1.0";

/// File-format and filesystem failures; messages include the offending line
/// where one exists.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain-text matrix: "m n" header line, then whitespace-separated entries.
/// Values are printed with 17 significant digits, so write/read round-trips
/// bit-identically.
Matrix read_matrix(const std::string& path);
void write_matrix(const Matrix& m, const std::string& path);

/// JSON object with keys "p", "w", "D". The reader rejects a p that is not a
/// distribution within 1e-9.
DualCertificate read_certificate(const std::string& path);
void write_certificate(const DualCertificate& cert, const std::string& path);

/// Atomic text write: temp file in the same directory, then rename.
void write_text(const std::string& path, const std::string& content);

struct SolveReport {
  std::string generator;  // provenance label, e.g. "file:a.mat"
  std::size_t rows = 0;
  std::size_t cols = 0;
  double max_col_norm = 0.0;
  std::uint64_t master_seed = 0;

  double primal_value = 0.0;
  double primal_sqrt = 0.0;
  bool converged = false;
  std::size_t iterations = 0;

  double dual_d = 0.0;
  double dual_wsum = 0.0;
  double dual_min_eig = 0.0;

  double gap = 0.0;  // primal_sqrt - dual_d; >= -1e-6 by weak duality

  std::optional<double> brute_value;
  std::optional<double> rounded_value;

  std::map<std::string, double> timings;  // phase -> seconds
  std::string version = kVersion;
};

/// Stable key order; timings are dropped when include_timings is false so
/// repeated runs serialize byte-identically.
nlohmann::ordered_json report_to_json(const SolveReport& report, bool include_timings);

/// Two aligned columns, one field per row; the --table rendering.
std::string report_to_table(const SolveReport& report, bool include_timings);

}  // namespace disclab
