#pragma once

#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

namespace orfkit {

enum class WeightKind { gaussian, haar_orthogonal };

std::string_view to_string(WeightKind kind);

/// d x p frequency matrix; column j is the frequency vector w_j.
struct WeightMatrix {
  Eigen::MatrixXd entries;
  WeightKind kind = WeightKind::gaussian;
  std::uint64_t seed = 0;

  int d() const { return static_cast<int>(entries.rows()); }
  int p() const { return static_cast<int>(entries.cols()); }
  auto column(int j) const { return entries.col(j); }
};

/// rows x cols i.i.d. N(0, 1), filled column by column from one stream.
WeightMatrix gaussian_matrix(int rows, int cols, std::uint64_t seed);

/// d x d Haar orthogonal matrix: Householder QR of gaussian_matrix(d, d, seed)
/// with each column of Q multiplied by the sign of R's diagonal entry.
WeightMatrix haar_orthogonal(int d, std::uint64_t seed);

/// Orthogonal random feature frequencies. For p <= d these are the first p
/// columns of haar_orthogonal(d, seed). For p > d the columns come from
/// ceil(p/d) independent Haar blocks, block b drawn with sub_seed(seed, b),
/// the last block truncated.
WeightMatrix orf_weight_matrix(int d, int p, std::uint64_t seed);

/// Random Fourier feature frequencies: gaussian_matrix(d, p, seed).
WeightMatrix rff_weight_matrix(int d, int p, std::uint64_t seed);

/// Largest |W_b^T W_b - I| entry over the orthogonal blocks of an ORF matrix.
double orthogonality_residual(const WeightMatrix& w);

}  // namespace orfkit
