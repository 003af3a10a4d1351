#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regshannon/windows.hpp"

namespace regshannon {

/// Samples f(k) on the integers k_min..k_max of a function with declared
/// bandwidth delta.
struct SampleSet {
  std::int64_t k_min = 0;
  std::int64_t k_max = -1;
  std::vector<double> values;
  double delta = 0.0;
  std::optional<double> l2_norm;

  std::size_t size() const noexcept { return values.size(); }
  bool contains(std::int64_t k) const noexcept { return k >= k_min && k <= k_max; }
  double at(std::int64_t k) const { return values.at(static_cast<std::size_t>(k - k_min)); }

  /// Throws PreconditionError / IngestionError when the invariants fail.
  void validate() const;
};

SampleSet sample_function(const std::function<double(double)>& f, std::int64_t k_min,
                          std::int64_t k_max, double delta);

/// R f(t) = sum over |t - k| <= m of f(k) sinc(t - k) phi(t - k), summed in
/// ascending k with compensation.
double reconstruct(const SampleSet& samples, const WindowSpec& spec, double t);

/// Elementwise reconstruct. threads = 0 means "use default_thread_count()".
std::vector<double> reconstruct_grid(const SampleSet& samples, const WindowSpec& spec,
                                     std::span<const double> grid, unsigned threads = 0);

/// Hardware concurrency capped by RECON_THREADS when that is set to an
/// integer >= 1.
unsigned default_thread_count();

/// Runs body(begin, end) over [0, n) split into contiguous chunks.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

// CSV with header "k,value". Lines starting with '#' are comments. The
// reader requires consecutive k.
void write_samples_csv(std::ostream& out, const SampleSet& samples);
SampleSet read_samples_csv(std::istream& in, double delta);
SampleSet read_samples_csv_file(const std::string& path, double delta);

}  // namespace regshannon
