#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "orfkit/sampling.hpp"

namespace orfkit {

/// (1/sqrt(p)) (sin(w_1^T x), ..., sin(w_p^T x), cos(w_1^T x), ..., cos(w_p^T x)).
struct FeatureVector {
  Eigen::VectorXd values;

  int p() const { return static_cast<int>(values.size() / 2); }
};

/// Identity of the weight draw a Gram matrix was built from.
struct GeneratorId {
  WeightKind kind = WeightKind::gaussian;
  std::uint64_t seed = 0;
  int d = 0;
  int p = 0;
};

/// Symmetric n x n approximate kernel matrix with unit diagonal.
struct GramMatrix {
  Eigen::MatrixXd entries;
  GeneratorId generator;
};

FeatureVector feature_map(const WeightMatrix& w, const Eigen::Ref<const Eigen::VectorXd>& x);

/// (1/p) sum_j cos(w_j^T (x - y)).
double approx_kernel(const WeightMatrix& w, const Eigen::Ref<const Eigen::VectorXd>& x,
                     const Eigen::Ref<const Eigen::VectorXd>& y);

/// n x 2p matrix whose rows are the feature vectors of the rows of X.
Eigen::MatrixXd feature_matrix(const WeightMatrix& w, const Eigen::Ref<const Eigen::MatrixXd>& x);

/// Rows of X are points. Computed as Phi Phi^T, then mirrored from the upper
/// triangle and given an exact unit diagonal. Single-threaded and
/// bitwise-deterministic.
GramMatrix gram_matrix(const WeightMatrix& w, const Eigen::Ref<const Eigen::MatrixXd>& x);

}  // namespace orfkit
