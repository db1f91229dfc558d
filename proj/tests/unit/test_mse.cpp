#include <cmath>

#include "doctest.h"
#include "orfkit/dataset.hpp"
#include "orfkit/errors.hpp"
#include "orfkit/mse.hpp"

using namespace orfkit;

TEST_CASE("mse decreases with the number of features") {
  const auto data = synthetic_dataset(64, 8, 21);
  for (auto kind : {Estimator::rff, Estimator::orf}) {
    double previous = INFINITY;
    for (int p : {8, 64, 400}) {
      MseOptions opt;
      opt.p = p;
      opt.trials = 10;
      opt.kind = kind;
      opt.seed = 3;
      const auto r = run_mse(data, opt);
      CAPTURE(p);
      CHECK(r.mean < previous);
      previous = r.mean;
      // Mean of trials estimates the closed-form prediction.
      CHECK(std::abs(r.mean - r.predicted) <= 5 * r.stddev / std::sqrt(10.0) + 1e-12);
    }
  }
}

TEST_CASE("orthogonal features do not lose to iid features inside the dominance interval") {
  const auto data = synthetic_dataset(64, 8, 22);
  MseOptions opt;
  opt.p = 8;
  opt.trials = 40;
  opt.seed = 4;
  opt.kind = Estimator::rff;
  const auto rff = run_mse(data, opt);
  opt.kind = Estimator::orf;
  const auto orf = run_mse(data, opt);
  CHECK(orf.fraction_inside == rff.fraction_inside);
  CHECK(orf.fraction_inside > 0.5);
  CHECK(orf.predicted <= rff.predicted);
  CHECK(orf.mean <= rff.mean);
}

TEST_CASE("tracked pairs converge to their variance") {
  const auto data = synthetic_dataset(20, 5, 23);
  MseOptions opt;
  opt.p = 4;
  opt.trials = 4000;
  opt.seed = 9;
  const auto r = run_mse(data, opt);
  REQUIRE(r.pairs.size() == 5);
  for (const auto& pe : r.pairs) {
    CAPTURE(pe.j);
    CHECK(std::abs(pe.mean_sq_error - pe.theory_variance) <= 5 * pe.stderr_);
  }
}

TEST_CASE("report rows") {
  const auto data = synthetic_dataset(10, 3, 1);
  MseOptions opt;
  opt.p = 6;
  opt.trials = 3;
  const auto rep = mse_experiment(data, opt);
  CHECK(rep.records.size() == 6);
  CHECK(rep.records.front().label == "mse");
  CHECK(rep.records.back().label == "pair");
  CHECK(rep.trial_values.size() == 3);
  opt.workers = 3;
  CHECK(mse_experiment(data, opt) == rep);
}

TEST_CASE("invalid inputs") {
  Eigen::MatrixXd one(1, 3);
  one.setZero();
  CHECK_THROWS_AS(Dataset(one, "x", "x"), InvalidArgument);
  Eigen::MatrixXd same = Eigen::MatrixXd::Ones(5, 3);
  CHECK_THROWS_AS(run_mse(Dataset(same, "c", "c"), MseOptions{}), InvalidArgument);
  MseOptions bad;
  bad.p = 0;
  CHECK_THROWS_AS(run_mse(synthetic_dataset(5, 2, 0), bad), InvalidArgument);
}
