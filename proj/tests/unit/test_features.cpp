#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "oracles.hpp"
#include "orfkit/errors.hpp"
#include "orfkit/features.hpp"

using namespace orfkit;

namespace {
Eigen::VectorXd random_vector(oracle::Gen& gen, int d, double scale = 1.0) {
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v[i] = scale * gen.normal();
  return v;
}
}  // namespace

TEST_CASE("feature_map layout: sines then cosines scaled by 1/sqrt(p)") {
  const auto w = orf_weight_matrix(6, 4, 3);
  const auto phi = feature_map(w, Eigen::VectorXd::Zero(6));
  REQUIRE(phi.values.size() == 8);
  CHECK(phi.p() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(phi.values[j] == 0.0);
    CHECK(phi.values[4 + j] == doctest::Approx(0.5));
  }

  WeightMatrix e1{Eigen::MatrixXd::Zero(3, 1), WeightKind::haar_orthogonal, 0};
  e1.entries(0, 0) = 1.0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(3);
  x[0] = std::numbers::pi / 2;
  const auto f = feature_map(e1, x);
  CHECK(f.values[0] == doctest::Approx(1.0));
  CHECK(std::abs(f.values[1]) < 1e-15);
}

TEST_CASE("feature vectors have unit norm") {
  oracle::Gen gen(1);
  for (int t = 0; t < 100; ++t) {
    const int d = gen.integer(2, 12);
    const int p = gen.integer(1, 30);
    const auto w = gen.integer(0, 1) ? orf_weight_matrix(d, p, t) : rff_weight_matrix(d, p, t);
    const auto phi = feature_map(w, random_vector(gen, d, 3.0));
    REQUIRE(phi.values.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("approx_kernel equals the feature dot product") {
  oracle::Gen gen(2);
  for (int t = 0; t < 100; ++t) {
    const int d = gen.integer(2, 10);
    const int p = gen.integer(1, 25);
    const auto w = gen.integer(0, 1) ? orf_weight_matrix(d, p, t) : rff_weight_matrix(d, p, t);
    const Eigen::VectorXd x = random_vector(gen, d);
    const Eigen::VectorXd y = random_vector(gen, d);
    const double k = approx_kernel(w, x, y);
    REQUIRE(std::abs(k - feature_map(w, x).values.dot(feature_map(w, y).values)) <= 1e-12);
    // Shift invariance.
    const Eigen::VectorXd c = random_vector(gen, d, 5.0);
    REQUIRE(std::abs(approx_kernel(w, x + c, y + c) - k) <= 1e-12);
    REQUIRE(approx_kernel(w, x, x) == 1.0);
  }
}

TEST_CASE("approx_kernel with one frequency is a single cosine") {
  const auto w = rff_weight_matrix(3, 1, 4);
  const Eigen::Vector3d x(0.3, -1.0, 2.0);
  const Eigen::Vector3d y(1.0, 0.5, -0.2);
  CHECK(approx_kernel(w, x, y) == doctest::Approx(std::cos(w.entries.col(0).dot(x - y))));
}

TEST_CASE("dimension mismatches are rejected") {
  const auto w = orf_weight_matrix(4, 2, 1);
  CHECK_THROWS_AS(feature_map(w, Eigen::VectorXd::Zero(3)), InvalidArgument);
  CHECK_THROWS_AS(approx_kernel(w, Eigen::VectorXd::Zero(4), Eigen::VectorXd::Zero(5)), InvalidArgument);
  CHECK_THROWS_AS(gram_matrix(w, Eigen::MatrixXd::Zero(3, 5)), InvalidArgument);
  CHECK_THROWS_AS(gram_matrix(w, Eigen::MatrixXd::Zero(0, 4)), InvalidArgument);
}

TEST_CASE("gram_matrix matches pairwise approx_kernel") {
  oracle::Gen gen(3);
  Eigen::MatrixXd x(5, 3);
  for (int i = 0; i < 5; ++i) x.row(i) = random_vector(gen, 3).transpose();
  const auto w = rff_weight_matrix(3, 7, 10);
  const auto g = gram_matrix(w, x);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(std::abs(g.entries(i, j) - approx_kernel(w, x.row(i).transpose(), x.row(j).transpose())) <= 1e-12);
    }
  }
  CHECK(g.generator.p == 7);
  CHECK(g.generator.d == 3);
  CHECK(g.generator.seed == 10);
  CHECK(g.generator.kind == WeightKind::gaussian);
}

TEST_CASE("gram_matrix edge cases") {
  const auto w = orf_weight_matrix(3, 3, 1);
  const auto single = gram_matrix(w, Eigen::MatrixXd::Ones(1, 3));
  CHECK(single.entries.rows() == 1);
  CHECK(single.entries(0, 0) == 1.0);

  Eigen::MatrixXd dup(3, 3);
  dup << 1, 2, 3, 0, 0, 1, 1, 2, 3;
  CHECK(gram_matrix(w, dup).entries(0, 2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gram_matrix is symmetric, unit-diagonal, bounded and PSD") {
  oracle::Gen gen(4);
  for (int t = 0; t < 20; ++t) {
    const int n = gen.integer(2, 40);
    const int d = gen.integer(2, 8);
    const int p = gen.integer(1, 20);
    Eigen::MatrixXd x(n, d);
    for (int i = 0; i < n; ++i) x.row(i) = random_vector(gen, d, 2.0).transpose();
    const auto w = t % 2 ? orf_weight_matrix(d, p, t) : rff_weight_matrix(d, p, t);
    const auto g = gram_matrix(w, x);
    REQUIRE(g.entries == g.entries.transpose());
    REQUIRE(g.entries.diagonal() == Eigen::VectorXd::Ones(n));
    REQUIRE(g.entries.cwiseAbs().maxCoeff() <= 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.entries);
    REQUIRE(eig.eigenvalues().minCoeff() >= -1e-10);
  }
}
