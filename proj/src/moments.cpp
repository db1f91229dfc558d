#include "orfkit/moments.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "orfkit/errors.hpp"
#include "orfkit/features.hpp"
#include "orfkit/parallel.hpp"
#include "orfkit/rng.hpp"
#include "orfkit/sampling.hpp"

namespace orfkit {

EmpiricalMoments sample_moments(std::span<const double> values) {
  const std::size_t s = values.size();
  if (s < 2) throw InvalidArgument("sample_moments: need at least two samples");
  const double n = static_cast<double>(s);

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;

  // Central sums; the jackknife replicates are closed-form in these.
  double c2 = 0.0;
  for (double v : values) c2 += (v - mean) * (v - mean);
  const double variance = c2 / n;

  // Leaving out k_i shifts the mean by -e_i/(n-1), where e_i = k_i - mean:
  //   V_(i) = (c2 - e_i^2) / (n-1) - (e_i / (n-1))^2.
  std::vector<double> loo(s);
  double loo_mean = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    const double e = values[i] - mean;
    loo[i] = (c2 - e * e) / (n - 1.0) - (e / (n - 1.0)) * (e / (n - 1.0));
    loo_mean += loo[i];
  }
  loo_mean /= n;
  double spread = 0.0;
  for (double v : loo) spread += (v - loo_mean) * (v - loo_mean);

  EmpiricalMoments m;
  m.mean = mean;
  m.variance = variance;
  m.mean_stderr = std::sqrt(variance / n);
  m.variance_stderr = std::sqrt((n - 1.0) / n * spread);
  m.samples = static_cast<int>(s);
  return m;
}

EmpiricalMoments empirical_moments(Estimator kind, int d, int p,
                                   const Eigen::Ref<const Eigen::VectorXd>& x,
                                   const Eigen::Ref<const Eigen::VectorXd>& y, int s,
                                   std::uint64_t seed, int workers) {
  if (s < 2) throw InvalidArgument("empirical_moments: s must be >= 2");
  if (x.size() != d || y.size() != d) {
    throw InvalidArgument("empirical_moments: points must have dimension " + std::to_string(d));
  }
  if (p < 1) throw InvalidArgument("empirical_moments: p must be >= 1");
  const Eigen::VectorXd xs = x;
  const Eigen::VectorXd ys = y;
  std::vector<double> k(s);
  parallel_for(s, workers, [&](int l) {
    const std::uint64_t draw = sub_seed(seed, static_cast<std::uint64_t>(l));
    const WeightMatrix w = kind == Estimator::orf ? orf_weight_matrix(d, p, draw)
                                                  : rff_weight_matrix(d, p, draw);
    k[l] = approx_kernel(w, xs, ys);
  });
  return sample_moments(k);
}

CovarianceEstimate mc_covariance(int d, double z, int s, std::uint64_t seed, int workers) {
  if (d < 2) throw InvalidArgument("mc_covariance: d must be >= 2");
  if (s < 100) throw InvalidArgument("mc_covariance: s must be >= 100");
  if (!std::isfinite(z) || z < 0) throw InvalidArgument("mc_covariance: z must be >= 0");
  std::vector<double> a(s);
  std::vector<double> b(s);
  // delta = z e_1, so w_j^T delta = z * W(0, j).
  parallel_for(s, workers, [&](int l) {
    const WeightMatrix w = orf_weight_matrix(d, 2, sub_seed(seed, static_cast<std::uint64_t>(l)));
    a[l] = std::cos(z * w.entries(0, 0));
    b[l] = std::cos(z * w.entries(0, 1));
  });
  const double n = s;
  double ma = 0.0;
  double mb = 0.0;
  for (int l = 0; l < s; ++l) {
    ma += a[l];
    mb += b[l];
  }
  ma /= n;
  mb /= n;
  std::vector<double> prod(s);
  double cov = 0.0;
  for (int l = 0; l < s; ++l) {
    prod[l] = (a[l] - ma) * (b[l] - mb);
    cov += prod[l];
  }
  cov /= n;
  double spread = 0.0;
  for (double v : prod) spread += (v - cov) * (v - cov);
  return {cov, std::sqrt(spread / (n - 1.0) / n), s};
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> synthetic_pair(int d, double z, std::uint64_t seed) {
  if (d < 1) throw InvalidArgument("synthetic_pair: d must be >= 1");
  if (!std::isfinite(z) || z < 0) throw InvalidArgument("synthetic_pair: z must be >= 0");
  std::vector<double> buf(2 * static_cast<std::size_t>(d));
  fill_standard_normal(buf.begin(), buf.end(), seed);
  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(buf.data(), d);
  Eigen::VectorXd y = Eigen::Map<Eigen::VectorXd>(buf.data() + d, d);
  const Eigen::VectorXd dir = (y - x).normalized();
  y = x + z * dir;
  return {std::move(x), std::move(y)};
}

}  // namespace orfkit
