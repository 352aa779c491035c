#ifndef SMC_SERIES_HPP
#define SMC_SERIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smc/noise.hpp"

namespace smc {

/// Observation series y_1..y_N. Finite values only, N >= 1.
struct ObservationSeries {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Synthetic piecewise-constant-mean series: a documented stand-in for the
/// study's original test data (which is not reproduced here), not that data.
struct SeriesSpec {
  int length = 500;
  /// (start_index, level) pairs; 1-based start indices, strictly increasing,
  /// first == 1.
  std::vector<std::pair<int, double>> segment_means;
  NoiseDistribution obs_noise{NoiseKind::Gaussian, 1.0};
  std::uint64_t seed = 1;

  void validate() const;
};

/// The default 500-point benchmark series: level shifts 0, 2, -1, 1 at
/// n = 1, 101, 251, 401 with N(0,1) observation noise, seed 1.
SeriesSpec default_benchmark_spec();

/// y_n = level(n) + w_n, deterministic in the spec (including seed).
ObservationSeries generate_series(const SeriesSpec& spec);

/// CSV: one observation per line, optional "y" header. Writing uses
/// shortest-round-trip decimals, so write/read is value-exact.
ObservationSeries read_series_csv(const std::string& path);
void write_series_csv(const ObservationSeries& series, const std::string& path);

/// Shortest decimal that parses back to exactly the same double.
std::string format_double(double v);

} // namespace smc

#endif
