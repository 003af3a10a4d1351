#include "regshannon/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "regshannon/compensated_sum.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/special_fn.hpp"

namespace regshannon {
namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void throw_missing(const SampleSet& s, std::int64_t lo, std::int64_t hi, double t) {
  std::vector<std::int64_t> missing;
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (!s.contains(k)) missing.push_back(k);
  }
  std::ostringstream msg;
  msg << "reconstruct: t=" << t << " needs samples " << lo << ".." << hi << " but only "
      << s.k_min << ".." << s.k_max << " are available";
  throw OutOfRangeError(msg.str(), std::move(missing));
}

}  // namespace

void SampleSet::validate() const {
  if (k_max < k_min) throw PreconditionError("SampleSet: k_min > k_max");
  if (values.size() != static_cast<std::size_t>(k_max - k_min + 1)) {
    throw PreconditionError("SampleSet: value count does not match index range");
  }
  if (!(delta > 0.0 && delta < kPi)) throw PreconditionError("SampleSet: delta must lie in (0, pi)");
  if (l2_norm && !(*l2_norm > 0.0)) throw PreconditionError("SampleSet: l2_norm must be > 0");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw IngestionError("SampleSet: non-finite sample", k_min + static_cast<std::int64_t>(i));
    }
  }
}

SampleSet sample_function(const std::function<double(double)>& f, std::int64_t k_min,
                          std::int64_t k_max, double delta) {
  if (k_min > k_max) throw PreconditionError("sample_function: k_min > k_max");
  SampleSet s;
  s.k_min = k_min;
  s.k_max = k_max;
  s.delta = delta;
  s.values.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const double v = f(static_cast<double>(k));
    if (!std::isfinite(v)) throw IngestionError("sample_function: non-finite sample", k);
    s.values.push_back(v);
  }
  return s;
}

double reconstruct(const SampleSet& samples, const WindowSpec& spec, double t) {
  if (!std::isfinite(t)) throw DomainError("reconstruct: t is not finite");
  const int m = spec.m();
  const auto lo = static_cast<std::int64_t>(std::ceil(t - m));
  const auto hi = static_cast<std::int64_t>(std::floor(t + m));
  if (!samples.contains(lo) || !samples.contains(hi)) throw_missing(samples, lo, hi, t);

  const double n = std::round(t);
  if (n == t) {
    // every other term carries sinc at a nonzero integer, i.e. exactly 0
    return samples.at(static_cast<std::int64_t>(n)) * eval_window(spec, 0.0);
  }

  // sin(pi (t - k)) = (-1)^k sin(pi t), so one sine serves the whole sum
  const double s = sin_pi(t) / kPi;
  CompensatedSum acc;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double x = t - static_cast<double>(k);
    const double sk = (k & 1) ? -s : s;
    acc += samples.at(k) * (sk / x) * eval_window(spec, x);
  }
  return acc.value();
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RECON_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    if (n > 0) body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::size_t b = i * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] {
      try {
        body(b, e);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> reconstruct_grid(const SampleSet& samples, const WindowSpec& spec,
                                     std::span<const double> grid, unsigned threads) {
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = reconstruct(samples, spec, grid[i]);
  });
  return out;
}

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
  out << "k,value\n";
  char buf[64];
  for (std::int64_t k = samples.k_min; k <= samples.k_max; ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", samples.at(k));
    out << k << ',' << buf << '\n';
  }
}

SampleSet read_samples_csv(std::istream& in, double delta) {
  SampleSet s;
  s.delta = delta;
  std::string line;
  bool header_seen = false;
  std::int64_t expected = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("k,", 0) == 0) continue;  // header is optional
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IngestionError("samples csv: missing comma in '" + line + "'", expected);
    std::int64_t k = 0;
    double v = 0.0;
    try {
      std::size_t used = 0;
      k = std::stoll(line.substr(0, comma), &used);
      v = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw IngestionError("samples csv: malformed row '" + line + "'", expected);
    }
    if (s.values.empty()) {
      s.k_min = k;
    } else if (k != expected) {
      throw IngestionError("samples csv: indices must be consecutive", k);
    }
    if (!std::isfinite(v)) throw IngestionError("samples csv: non-finite sample", k);
    s.values.push_back(v);
    s.k_max = k;
    expected = k + 1;
  }
  if (s.values.empty()) throw IngestionError("samples csv: no samples", 0);
  s.validate();
  return s;
}

SampleSet read_samples_csv_file(const std::string& path, double delta) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open samples file '" + path + "'", 0);
  return read_samples_csv(in, delta);
}

}  // namespace regshannon
