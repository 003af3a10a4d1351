#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regshannon/diagnostics.hpp"
#include "regshannon/windows.hpp"

namespace regshannon {

/// Normalised two-term test signal of bandwidth delta, ||f||_2 = 1:
/// f(t) = 2 delta / sqrt(5 pi delta + 4 pi sin delta) * (sinc(delta t / pi) + sinc(delta (t-1) / pi) / 2)
double test_function(double t, double delta);

struct ExperimentConfig {
  std::vector<WindowFamily> families{WindowFamily::Gauss, WindowFamily::ModGauss, WindowFamily::Sinh,
                                     WindowFamily::CKB};
  std::vector<double> delta_list;
  std::vector<int> m_list;
  std::vector<double> alpha_list{1.0};
  /// Only used by ModGauss rows.
  std::vector<double> lambda_list{0.0};
  std::int64_t grid_points = 100000;
  double a = -1.0;
  double b = 1.0;
  std::string output_path;
  unsigned threads = 0;  // 0: default_thread_count()

  void validate() const;
};

struct ErrorRow {
  WindowFamily family = WindowFamily::Gauss;
  double delta = 0.0;
  int m = 2;
  double alpha = 1.0;
  double lambda = 0.0;
  double max_error = 0.0;  // NaN when the window could not be built
  std::optional<double> bound;
  std::optional<bool> bound_ok;
  std::string note;  // skip reason for the bound or the whole row
  std::int64_t runtime_ms = 0;
};

struct ErrorReport {
  std::vector<ErrorRow> rows;
  std::size_t violations() const;
};

/// Evaluation grid t_s = a + s (b - a) / (S - 1), s = 0..S-1.
std::vector<double> evaluation_grid(double a, double b, std::int64_t points);

/// Max |f - R f| over the grid for the test function with the given window.
double max_reconstruction_error(const WindowSpec& spec, double delta, double a, double b,
                                std::int64_t points);

ErrorReport run_error_sweep(const ExperimentConfig& config);

/// One series per (family, alpha, delta) for the sinh/ckb families of the
/// config; other families are ignored.
std::vector<DiagnosticSeries> run_diagnostics_sweep(const ExperimentConfig& config);

void write_error_csv(std::ostream& out, const ErrorReport& report);

// Parsers for the command line and config values.
/// "pi/2", "3pi/4", "3*pi/4", "pi", "0.7"
double parse_delta(std::string_view text);
/// "2:10", "2:10:2", "2,3,5"
std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);
std::vector<double> parse_delta_list(std::string_view text);
/// "all" or a comma list of family names
std::vector<WindowFamily> parse_family_list(std::string_view text);

}  // namespace regshannon
