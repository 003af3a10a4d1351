#include "regshannon/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <tuple>

#include "regshannon/bounds.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/reconstruction.hpp"
#include "regshannon/special_fn.hpp"

namespace regshannon {
namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw PreconditionError("not a number: '" + t + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw PreconditionError("not an integer: '" + t + "'");
  }
  return v;
}

// sample indices needed for t in [a, b] with truncation m
std::pair<std::int64_t, std::int64_t> sample_range(double a, double b, int m) {
  return {static_cast<std::int64_t>(std::floor(a)) - m - 1, static_cast<std::int64_t>(std::ceil(b)) + m + 1};
}

}  // namespace

double test_function(double t, double delta) {
  if (!(delta > 0.0 && delta <= kPi)) throw DomainError("test_function: delta must lie in (0, pi]");
  const double c = 2.0 * delta / std::sqrt(5.0 * kPi * delta + 4.0 * kPi * std::sin(delta));
  return c * (sinc(delta * t / kPi) + 0.5 * sinc(delta * (t - 1.0) / kPi));
}

void ExperimentConfig::validate() const {
  if (grid_points < 2) throw PreconditionError("config: grid_points must be >= 2");
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw PreconditionError("config: need a < b");
  for (double d : delta_list) {
    if (!(d > 0.0 && d < kPi)) throw PreconditionError("config: every delta must lie in (0, pi)");
  }
  for (int m : m_list) {
    if (m < 2) throw PreconditionError("config: every m must be >= 2");
  }
  for (double al : alpha_list) {
    if (!(al > 0.0) || !std::isfinite(al)) throw PreconditionError("config: every alpha must be > 0");
  }
  for (double l : lambda_list) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw PreconditionError("config: every lambda must be >= 0");
  }
}

std::size_t ErrorReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ErrorRow& r) { return r.bound_ok == false; }));
}

std::vector<double> evaluation_grid(double a, double b, std::int64_t points) {
  if (points < 2) throw PreconditionError("evaluation_grid: need at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double step = (b - a) / static_cast<double>(points - 1);
  for (std::int64_t s = 0; s < points; ++s) g[static_cast<std::size_t>(s)] = a + s * step;
  g.back() = b;
  return g;
}

double max_reconstruction_error(const WindowSpec& spec, double delta, double a, double b,
                                std::int64_t points) {
  const auto [lo, hi] = sample_range(a, b, spec.m());
  const SampleSet samples = sample_function([delta](double t) { return test_function(t, delta); }, lo, hi, delta);
  const double step = (b - a) / static_cast<double>(points - 1);
  double worst = 0.0;
  for (std::int64_t s = 0; s < points; ++s) {
    const double t = s + 1 == points ? b : a + s * step;
    worst = std::max(worst, std::fabs(test_function(t, delta) - reconstruct(samples, spec, t)));
  }
  return worst;
}

ErrorReport run_error_sweep(const ExperimentConfig& config) {
  config.validate();
  ErrorReport report;
  for (WindowFamily fam : config.families) {
    for (double delta : config.delta_list) {
      for (int m : config.m_list) {
        for (double alpha : config.alpha_list) {
          const auto& lambdas = fam == WindowFamily::ModGauss ? config.lambda_list : std::vector<double>{0.0};
          for (double lambda : lambdas) {
            ErrorRow r;
            r.family = fam;
            r.delta = delta;
            r.m = m;
            r.alpha = alpha;
            r.lambda = lambda;
            report.rows.push_back(r);
          }
        }
      }
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const ErrorRow& x, const ErrorRow& y) {
    return std::tie(x.family, x.delta, x.m, x.alpha, x.lambda) < std::tie(y.family, y.delta, y.m, y.alpha, y.lambda);
  });

  parallel_for(report.rows.size(), config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ErrorRow& r = report.rows[i];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const WindowSpec spec = alpha_spec(r.family, r.m, r.delta, r.alpha, r.lambda);
        r.max_error = max_reconstruction_error(spec, r.delta, config.a, config.b, config.grid_points);
        if (r.alpha == 1.0) {
          r.note = bound_hypothesis_violation(r.family, r.m, r.delta, r.lambda);
          if (r.note.empty()) {
            r.bound = bound_closed_form(r.family, r.m, r.delta, r.lambda);
            r.bound_ok = r.max_error <= *r.bound;
          }
        }
      } catch (const PreconditionError& ex) {
        r.max_error = std::numeric_limits<double>::quiet_NaN();
        r.note = ex.what();
      }
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
  });

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) throw PreconditionError("cannot write '" + config.output_path + "'");
    write_error_csv(out, report);
  }
  return report;
}

std::vector<DiagnosticSeries> run_diagnostics_sweep(const ExperimentConfig& config) {
  config.validate();
  std::vector<WindowFamily> fams;
  for (WindowFamily f : config.families) {
    if ((f == WindowFamily::Sinh || f == WindowFamily::CKB) && std::find(fams.begin(), fams.end(), f) == fams.end()) {
      fams.push_back(f);
    }
  }
  std::sort(fams.begin(), fams.end());
  std::vector<double> alphas = config.alpha_list, deltas = config.delta_list;
  std::sort(alphas.begin(), alphas.end());
  std::sort(deltas.begin(), deltas.end());
  std::vector<int> ms = config.m_list;
  std::sort(ms.begin(), ms.end());

  std::vector<DiagnosticSeries> out;
  if (ms.empty()) return out;
  for (WindowFamily f : fams) {
    for (double alpha : alphas) {
      for (double delta : deltas) out.push_back(build_series(f, alpha, delta, ms, config.threads));
    }
  }
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) throw PreconditionError("cannot write '" + config.output_path + "'");
    write_series_csv(file, out);
  }
  return out;
}

double parse_delta(std::string_view text) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto p = t.find("pi");
  if (p == std::string::npos) return parse_real(t);
  // [num][*]pi[/den]
  std::string num = t.substr(0, p);
  if (!num.empty() && num.back() == '*') num.pop_back();
  const std::string rest = t.substr(p + 2);
  const double n = num.empty() ? 1.0 : parse_real(num);
  double d = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/') throw PreconditionError("bad delta '" + std::string(text) + "'");
    d = parse_real(rest.substr(1));
    if (d == 0.0) throw PreconditionError("bad delta '" + std::string(text) + "'");
  }
  return n * kPi / d;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    if (item.find(':') != std::string::npos) {
      const auto parts = split(item, ':');
      if (parts.size() < 2 || parts.size() > 3) throw PreconditionError("bad range '" + item + "'");
      const int lo = parse_int(parts[0]), hi = parse_int(parts[1]);
      const int step = parts.size() == 3 ? parse_int(parts[2]) : 1;
      if (step <= 0) throw PreconditionError("bad range step in '" + item + "'");
      for (int v = lo; v <= hi; v += step) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    if (!item.empty()) out.push_back(parse_real(item));
  }
  return out;
}

std::vector<double> parse_delta_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    if (!item.empty()) out.push_back(parse_delta(item));
  }
  return out;
}

std::vector<WindowFamily> parse_family_list(std::string_view text) {
  if (trim(text) == "all") {
    return {WindowFamily::Gauss, WindowFamily::ModGauss, WindowFamily::Sinh, WindowFamily::CKB};
  }
  std::vector<WindowFamily> out;
  for (const auto& item : split(text, ',')) {
    if (!item.empty()) out.push_back(parse_family(item));
  }
  return out;
}

}  // namespace regshannon
