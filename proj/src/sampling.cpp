#include "orfkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orfkit/errors.hpp"
#include "orfkit/rng.hpp"

namespace orfkit {
namespace {

constexpr std::uint64_t kRetryStream = 0xA5A5A5A5A5A5A5A5ULL;

// First `cols` columns of a d x d Haar matrix drawn from `seed`. Only the
// leading columns of the Gaussian draw influence the leading columns of Q.
Eigen::MatrixXd haar_columns(int d, int cols, std::uint64_t seed) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : sub_seed(seed, kRetryStream);
    Eigen::MatrixXd g = gaussian_matrix(d, cols, s).entries;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    const Eigen::MatrixXd& packed = qr.matrixQR();
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, cols);
    bool full_rank = true;
    for (int j = 0; j < cols; ++j) {
      const double r = packed(j, j);
      if (!(std::abs(r) > 1e-10 * g.col(j).norm())) {
        full_rank = false;
        break;
      }
      if (r < 0) q.col(j) = -q.col(j);
    }
    if (full_rank) return q;
  }
  throw NumericalFailure("haar_orthogonal: rank-deficient Gaussian draw for seed " +
                         std::to_string(seed));
}

}  // namespace

std::string_view to_string(WeightKind kind) {
  return kind == WeightKind::gaussian ? "gaussian" : "haar-orthogonal";
}

WeightMatrix gaussian_matrix(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("gaussian_matrix: dimensions must be >= 1");
  }
  WeightMatrix w;
  w.entries.resize(rows, cols);
  fill_standard_normal(w.entries.data(), w.entries.data() + w.entries.size(), seed);
  w.kind = WeightKind::gaussian;
  w.seed = seed;
  return w;
}

WeightMatrix haar_orthogonal(int d, std::uint64_t seed) {
  if (d < 2) throw InvalidArgument("haar_orthogonal: d must be >= 2");
  return {haar_columns(d, d, seed), WeightKind::haar_orthogonal, seed};
}

WeightMatrix orf_weight_matrix(int d, int p, std::uint64_t seed) {
  if (d < 2) throw InvalidArgument("orf_weight_matrix: d must be >= 2");
  if (p < 1) throw InvalidArgument("orf_weight_matrix: p must be >= 1");
  WeightMatrix w{Eigen::MatrixXd(d, p), WeightKind::haar_orthogonal, seed};
  if (p <= d) {
    w.entries = haar_columns(d, p, seed);
    return w;
  }
  const int blocks = (p + d - 1) / d;
  for (int b = 0; b < blocks; ++b) {
    const int width = std::min(d, p - b * d);
    w.entries.middleCols(b * d, width) = haar_columns(d, width, sub_seed(seed, b));
  }
  return w;
}

WeightMatrix rff_weight_matrix(int d, int p, std::uint64_t seed) {
  return gaussian_matrix(d, p, seed);
}

double orthogonality_residual(const WeightMatrix& w) {
  const int d = w.d();
  double worst = 0.0;
  for (int start = 0; start < w.p(); start += d) {
    const int width = std::min(d, w.p() - start);
    const auto block = w.entries.middleCols(start, width);
    const Eigen::MatrixXd gram = block.transpose() * block;
    worst = std::max(worst, (gram - Eigen::MatrixXd::Identity(width, width)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace orfkit
