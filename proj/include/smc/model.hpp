#ifndef SMC_MODEL_HPP
#define SMC_MODEL_HPP

#include <functional>

#include <Eigen/Dense>

#include "smc/noise.hpp"

namespace smc {

/// Nonlinear non-Gaussian state-space model
///   x_n = transition(x_{n-1}, v_n),   y_n = observation(x_n) + w_n.
/// The engine is specialised to scalar states; state_dim/noise_dim are
/// declared for interface completeness and are 1 for every built-in.
/// Immutable after construction; share freely across threads.
struct StateSpaceModel {
  int state_dim = 1;
  int noise_dim = 1;
  std::function<double(double, double)> transition;
  std::function<double(double)> observation;
  NoiseDistribution system_noise;
  NoiseDistribution obs_noise;
  NoiseDistribution initial;
};

/// Matrices of the linear-Gaussian model
///   x_n = F x_{n-1} + G v_n,  y_n = H x_n + w_n,
/// with v ~ N(0,Q), w ~ N(0,R) and x_0 ~ N(x0_mean, V0).
struct LinearModelMatrices {
  Eigen::MatrixXd F;
  Eigen::MatrixXd G;
  Eigen::MatrixXd H; // 1 x k (scalar observation)
  Eigen::MatrixXd Q;
  double R = 1.0;
  Eigen::VectorXd x0_mean;
  Eigen::MatrixXd V0;

  /// Throws std::invalid_argument on inconsistent dimensions or an
  /// asymmetric / negative-definite Q, R, V0.
  void validate() const;

  static LinearModelMatrices scalar(double f, double g, double h, double q,
                                    double r, double x0, double v0);
};

/// Variance of the initial state for the built-in trend models. Chosen to
/// match the first and second moments of the grid oracle's uniform prior
/// on [-8, 8): mean 0, variance 16^2/12.
inline constexpr double kTrendInitialVariance = 256.0 / 12.0;

/// First-order trend model: x_n = x_{n-1} + v_n, y_n = x_n + w_n, with
/// system noise of the requested kind (variance / squared scale tau_sq)
/// and Gaussian observation noise N(0, sigma_sq).
StateSpaceModel trend_model(NoiseKind noise_kind, double tau_sq,
                            double sigma_sq);

/// The linear-Gaussian matrices matching trend_model(Gaussian, ...):
/// F = G = H = 1, Q = tau_sq, R = sigma_sq, x0 = 0, V0 = kTrendInitialVariance.
LinearModelMatrices trend_model_matrices(double tau_sq, double sigma_sq);

} // namespace smc

#endif
