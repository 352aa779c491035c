#include "smc/model.hpp"

#include <stdexcept>

namespace smc {

namespace {

void require_symmetric_psd(const Eigen::MatrixXd& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(name) + " must be square");
  }
  if (!m.isApprox(m.transpose(), 1e-12)) {
    throw std::invalid_argument(std::string(name) + " must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() < -1e-12 * (1.0 + m.norm())) {
    throw std::invalid_argument(std::string(name) +
                                " must be nonnegative definite");
  }
}

} // namespace

void LinearModelMatrices::validate() const {
  const auto k = F.rows();
  if (F.cols() != k || G.rows() != k || H.cols() != k || H.rows() != 1 ||
      Q.rows() != G.cols() || x0_mean.size() != k || V0.rows() != k) {
    throw std::invalid_argument("LinearModelMatrices: inconsistent dimensions");
  }
  require_symmetric_psd(Q, "Q");
  require_symmetric_psd(V0, "V0");
  if (R < 0.0) {
    throw std::invalid_argument("R must be nonnegative");
  }
}

LinearModelMatrices LinearModelMatrices::scalar(double f, double g, double h,
                                                double q, double r, double x0,
                                                double v0) {
  LinearModelMatrices m;
  m.F = Eigen::MatrixXd::Constant(1, 1, f);
  m.G = Eigen::MatrixXd::Constant(1, 1, g);
  m.H = Eigen::MatrixXd::Constant(1, 1, h);
  m.Q = Eigen::MatrixXd::Constant(1, 1, q);
  m.R = r;
  m.x0_mean = Eigen::VectorXd::Constant(1, x0);
  m.V0 = Eigen::MatrixXd::Constant(1, 1, v0);
  return m;
}

StateSpaceModel trend_model(NoiseKind noise_kind, double tau_sq,
                            double sigma_sq) {
  if (!(tau_sq > 0.0) || !(sigma_sq > 0.0)) {
    throw std::invalid_argument("trend_model: tau_sq and sigma_sq must be > 0");
  }
  return StateSpaceModel{
      .state_dim = 1,
      .noise_dim = 1,
      .transition = [](double x, double v) { return x + v; },
      .observation = [](double x) { return x; },
      .system_noise = NoiseDistribution(noise_kind, tau_sq),
      .obs_noise = NoiseDistribution(NoiseKind::Gaussian, sigma_sq),
      .initial = NoiseDistribution(NoiseKind::Gaussian, kTrendInitialVariance),
  };
}

LinearModelMatrices trend_model_matrices(double tau_sq, double sigma_sq) {
  return LinearModelMatrices::scalar(1.0, 1.0, 1.0, tau_sq, sigma_sq, 0.0,
                                     kTrendInitialVariance);
}

} // namespace smc
