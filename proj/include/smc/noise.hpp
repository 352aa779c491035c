#ifndef SMC_NOISE_HPP
#define SMC_NOISE_HPP

#include <cstdint>

#include "smc/rng.hpp"

namespace smc {

enum class NoiseKind { Gaussian, Cauchy };

/// Scalar zero-mean noise law. `scale_sq` is the Gaussian variance or the
/// squared Cauchy scale, so N(0, s) and C(0, s) read the same way.
/// Immutable after construction; safe to share across threads.
class NoiseDistribution {
public:
  NoiseDistribution(NoiseKind kind, double scale_sq);

  /// Skips the scale_sq > 0 check (test hook for degenerate zero-noise laws).
  static NoiseDistribution unchecked(NoiseKind kind, double scale_sq);

  NoiseKind kind() const noexcept { return kind_; }
  double scale_sq() const noexcept { return scale_sq_; }
  /// sqrt(scale_sq): the Gaussian standard deviation or Cauchy scale.
  double scale() const noexcept { return scale_; }

  double pdf(double x) const noexcept;
  double cdf(double x) const noexcept;
  /// Inverse cdf; throws std::domain_error unless 0 < u < 1.
  double quantile(double u) const;

  /// quantile(uniform(rng)); stratified and plain sampling share this path.
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

private:
  NoiseDistribution(NoiseKind kind, double scale_sq, bool checked);

  NoiseKind kind_;
  double scale_sq_;
  double scale_;
};

/// Standard-normal quantile: Acklam's rational approximation polished with
/// one Newton step against erfc, giving errors at machine-epsilon scale.
/// Fixed operation count per call.
double standard_normal_quantile(double u);

double standard_normal_cdf(double z) noexcept;

} // namespace smc

#endif
