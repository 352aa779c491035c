#ifndef SMC_RNG_HPP
#define SMC_RNG_HPP

#include <cstdint>

namespace smc {

/// Counter-based uniform generator (SplitMix64 evaluated at an arbitrary
/// stream position). A draw is a pure function of (key, counter), so any
/// draw can be produced out of order or in parallel and still match a
/// sequential pass bit for bit.
///
/// Stream discipline used throughout the library:
///   key = Rng::derive_key(seed, replication_index)   -- one stream per
///   replication; all draws within a run address that stream at fixed
///   counters (see particle.hpp for the filter's counter layout).
class Rng {
public:
  explicit Rng(std::uint64_t key, std::uint64_t counter = 0) noexcept
      : key_(key), counter_(counter) {}

  /// SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  static std::uint64_t derive_key(std::uint64_t seed,
                                  std::uint64_t replication) noexcept {
    return mix(seed ^ mix(replication + 0x9E3779B97F4A7C15ull));
  }

  /// Pure draw at an absolute stream position.
  static std::uint64_t bits_at(std::uint64_t key, std::uint64_t counter) noexcept {
    return mix(key + counter * 0x9E3779B97F4A7C15ull);
  }

  /// Uniform in the open interval (0,1): ((bits >> 11) + 0.5) * 2^-53,
  /// never exactly 0 or 1, so it is always a valid quantile argument.
  static double uniform_at(std::uint64_t key, std::uint64_t counter) noexcept {
    return (static_cast<double>(bits_at(key, counter) >> 11) + 0.5) *
           0x1.0p-53;
  }

  std::uint64_t bits() noexcept { return bits_at(key_, counter_++); }
  double uniform() noexcept { return uniform_at(key_, counter_++); }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

} // namespace smc

#endif
