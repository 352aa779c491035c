#include "smc/series.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace smc {

void SeriesSpec::validate() const {
  if (length < 1) {
    throw std::invalid_argument("SeriesSpec: length must be >= 1");
  }
  if (segment_means.empty() || segment_means.front().first != 1) {
    throw std::invalid_argument("SeriesSpec: first segment must start at 1");
  }
  int prev = 0;
  for (const auto& [start, level] : segment_means) {
    if (start <= prev || start > length) {
      throw std::invalid_argument(
          "SeriesSpec: segment starts must be strictly increasing and <= length");
    }
    if (!std::isfinite(level)) {
      throw std::invalid_argument("SeriesSpec: segment level must be finite");
    }
    prev = start;
  }
}

SeriesSpec default_benchmark_spec() {
  SeriesSpec spec;
  spec.length = 500;
  spec.segment_means = {{1, 0.0}, {101, 2.0}, {251, -1.0}, {401, 1.0}};
  spec.obs_noise = NoiseDistribution(NoiseKind::Gaussian, 1.0);
  spec.seed = 1;
  return spec;
}

ObservationSeries generate_series(const SeriesSpec& spec) {
  spec.validate();
  Rng rng(Rng::derive_key(spec.seed, 0));
  ObservationSeries out;
  out.values.resize(static_cast<std::size_t>(spec.length));
  std::size_t seg = 0;
  for (int n = 1; n <= spec.length; ++n) {
    while (seg + 1 < spec.segment_means.size() &&
           spec.segment_means[seg + 1].first <= n) {
      ++seg;
    }
    const double noise =
        spec.obs_noise.scale_sq() > 0.0 ? spec.obs_noise.sample(rng) : 0.0;
    out.values[static_cast<std::size_t>(n - 1)] =
        spec.segment_means[seg].second + noise;
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ObservationSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open series file: " + path);
  }
  ObservationSeries out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (lineno == 1 && line == "y") {
      continue;
    }
    double v = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
    if (res.ec != std::errc() || res.ptr != line.data() + line.size()) {
      throw std::runtime_error("malformed observation on line " +
                               std::to_string(lineno) + " of " + path);
    }
    if (!std::isfinite(v)) {
      throw std::runtime_error("non-finite observation on line " +
                               std::to_string(lineno) + " of " + path);
    }
    out.values.push_back(v);
  }
  if (out.values.empty()) {
    throw std::runtime_error("empty series: " + path);
  }
  return out;
}

void write_series_csv(const ObservationSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write series file: " + path);
  }
  out << "y\n";
  for (const double v : series.values) {
    out << format_double(v) << '\n';
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

} // namespace smc
