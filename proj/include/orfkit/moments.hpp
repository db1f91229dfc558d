#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include <Eigen/Dense>

#include "orfkit/analytics.hpp"

namespace orfkit {

/// Sample moments of k~(x, y) over s independent weight draws.
struct EmpiricalMoments {
  double mean = 0.0;             ///< M_emp = (1/s) sum_l k_l
  double variance = 0.0;         ///< V_emp = (1/s) sum_l (k_l - M_emp)^2
  double mean_stderr = 0.0;      ///< sqrt(V_emp / s)
  double variance_stderr = 0.0;  ///< delete-1 jackknife standard error of V_emp
  int samples = 0;
};

struct CovarianceEstimate {
  double covariance = 0.0;
  double stderr_ = 0.0;
  int samples = 0;
};

/// Weight draw l uses sub_seed(seed, l).
EmpiricalMoments empirical_moments(Estimator kind, int d, int p,
                                   const Eigen::Ref<const Eigen::VectorXd>& x,
                                   const Eigen::Ref<const Eigen::VectorXd>& y, int s,
                                   std::uint64_t seed, int workers = 1);

/// Moments of an already-drawn sample k_1..k_s.
EmpiricalMoments sample_moments(std::span<const double> values);

/// Monte-Carlo covariance of cos(w_1^T delta) and cos(w_2^T delta) over s Haar
/// draws with |delta| = z. The standard error is that of the sample mean of
/// the centred products.
CovarianceEstimate mc_covariance(int d, double z, int s, std::uint64_t seed, int workers = 1);

/// Two standard normal points in R^d, y moved along y - x so |x - y| = z exactly.
std::pair<Eigen::VectorXd, Eigen::VectorXd> synthetic_pair(int d, double z, std::uint64_t seed);

}  // namespace orfkit
