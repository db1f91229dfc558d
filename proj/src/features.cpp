#include "orfkit/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orfkit/errors.hpp"

namespace orfkit {
namespace {

void require_dim(const WeightMatrix& w, Eigen::Index got, const char* where) {
  if (got != w.d()) {
    throw InvalidArgument(std::string(where) + ": input dimension " + std::to_string(got) +
                          " does not match weight dimension " + std::to_string(w.d()));
  }
}

}  // namespace

FeatureVector feature_map(const WeightMatrix& w, const Eigen::Ref<const Eigen::VectorXd>& x) {
  require_dim(w, x.size(), "feature_map");
  const int p = w.p();
  const Eigen::VectorXd proj = w.entries.transpose() * x;
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  FeatureVector out{Eigen::VectorXd(2 * p)};
  for (int j = 0; j < p; ++j) {
    out.values[j] = scale * std::sin(proj[j]);
    out.values[p + j] = scale * std::cos(proj[j]);
  }
  return out;
}

double approx_kernel(const WeightMatrix& w, const Eigen::Ref<const Eigen::VectorXd>& x,
                     const Eigen::Ref<const Eigen::VectorXd>& y) {
  require_dim(w, x.size(), "approx_kernel");
  require_dim(w, y.size(), "approx_kernel");
  const Eigen::VectorXd proj = w.entries.transpose() * (x - y);
  double sum = 0.0;
  for (int j = 0; j < w.p(); ++j) sum += std::cos(proj[j]);
  return sum / w.p();
}

Eigen::MatrixXd feature_matrix(const WeightMatrix& w, const Eigen::Ref<const Eigen::MatrixXd>& x) {
  require_dim(w, x.cols(), "feature_matrix");
  const int p = w.p();
  const Eigen::MatrixXd proj = x * w.entries;
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  Eigen::MatrixXd phi(x.rows(), 2 * p);
  phi.leftCols(p) = scale * proj.array().sin().matrix();
  phi.rightCols(p) = scale * proj.array().cos().matrix();
  return phi;
}

GramMatrix gram_matrix(const WeightMatrix& w, const Eigen::Ref<const Eigen::MatrixXd>& x) {
  if (x.rows() == 0) throw InvalidArgument("gram_matrix: no points");
  const Eigen::MatrixXd phi = feature_matrix(w, x);
  Eigen::MatrixXd k = phi * phi.transpose();
  const Eigen::Index n = k.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = std::clamp(k(i, j), -1.0, 1.0);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return {std::move(k), GeneratorId{w.kind, w.seed, w.d(), w.p()}};
}

}  // namespace orfkit
