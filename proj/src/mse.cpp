#include "orfkit/mse.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "orfkit/errors.hpp"
#include "orfkit/features.hpp"
#include "orfkit/parallel.hpp"
#include "orfkit/rng.hpp"
#include "orfkit/sampling.hpp"
#include "orfkit/specfun.hpp"

namespace orfkit {

MseResult run_mse(const Dataset& data, const MseOptions& options) {
  if (options.p < 1) throw InvalidArgument("mse_experiment: p must be >= 1");
  if (options.trials < 1) throw InvalidArgument("mse_experiment: trials must be >= 1");
  const int n = data.n();
  const int d = data.d();
  if (options.kind == Estimator::orf && d < 2) {
    throw InvalidArgument("mse_experiment: orthogonal features need d >= 2");
  }

  MseResult result;
  result.bandwidth = bandwidth_heuristic(data.points());
  if (!(result.bandwidth > 0)) {
    throw InvalidArgument("mse_experiment: degenerate dataset (bandwidth is zero)");
  }
  const Eigen::MatrixXd x = data.points() / result.bandwidth;

  Eigen::MatrixXd reference(n, n);
  Eigen::MatrixXd dist(n, n);
  result.dominance_interval_end =
      d >= 2 ? variance_dominance_interval(d) : std::numeric_limits<double>::quiet_NaN();
  int inside = 0;
  double predicted = 0.0;
  for (int i = 0; i < n; ++i) {
    reference(i, i) = 1.0;
    dist(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double z = (x.row(i) - x.row(j)).norm();
      dist(i, j) = dist(j, i) = z;
      const double k = estimator_bias(options.kind, d, z);
      reference(i, j) = reference(j, i) = k;
      predicted += 2.0 * estimator_variance(options.kind, d, options.p, z);
      if (z <= result.dominance_interval_end) ++inside;
    }
  }
  const double n2 = static_cast<double>(n) * n;
  result.predicted = predicted / n2;
  result.fraction_inside = inside / (0.5 * n * (n - 1.0));

  const int tracked = std::min(options.tracked_pairs, n - 1);
  std::vector<std::vector<double>> pair_sq(options.trials, std::vector<double>(tracked));
  result.trial_mse.assign(options.trials, 0.0);
  parallel_for(options.trials, options.workers, [&](int t) {
    const std::uint64_t s = sub_seed(options.seed, static_cast<std::uint64_t>(t));
    const WeightMatrix w = options.kind == Estimator::orf ? orf_weight_matrix(d, options.p, s)
                                                          : rff_weight_matrix(d, options.p, s);
    const GramMatrix approx = gram_matrix(w, x);
    result.trial_mse[t] = (reference - approx.entries).squaredNorm() / n2;
    for (int q = 0; q < tracked; ++q) {
      const double e = approx.entries(0, q + 1) - reference(0, q + 1);
      pair_sq[t][q] = e * e;
    }
  });

  double sum = 0.0;
  for (double v : result.trial_mse) sum += v;
  result.mean = sum / options.trials;
  double spread = 0.0;
  for (double v : result.trial_mse) spread += (v - result.mean) * (v - result.mean);
  result.stddev = options.trials > 1 ? std::sqrt(spread / (options.trials - 1)) : 0.0;

  for (int q = 0; q < tracked; ++q) {
    PairError pe;
    pe.i = 0;
    pe.j = q + 1;
    pe.z = dist(0, q + 1);
    pe.theory_variance = estimator_variance(options.kind, d, options.p, pe.z);
    double m = 0.0;
    for (int t = 0; t < options.trials; ++t) m += pair_sq[t][q];
    m /= options.trials;
    double v = 0.0;
    for (int t = 0; t < options.trials; ++t) v += (pair_sq[t][q] - m) * (pair_sq[t][q] - m);
    pe.mean_sq_error = m;
    pe.stderr_ = options.trials > 1 ? std::sqrt(v / (options.trials - 1) / options.trials)
                                    : std::numeric_limits<double>::quiet_NaN();
    result.pairs.push_back(pe);
  }
  return result;
}

ExperimentReport mse_report_header(const Dataset& data, const MseOptions& options) {
  ExperimentReport report = make_report("mse");
  report.config = {{"estimator", std::string(to_string(options.kind))},
                   {"dataset", data.name()},
                   {"source", data.source()},
                   {"n", static_cast<std::uint64_t>(data.n())},
                   {"d", static_cast<std::uint64_t>(data.d())},
                   {"trials", static_cast<std::uint64_t>(options.trials)},
                   {"seed", options.seed}};
  report.extra_columns = {"p", "i", "j", "mse_std", "fraction_inside", "bandwidth"};
  return report;
}

void append_mse_rows(ExperimentReport& report, const MseOptions& options, const MseResult& result) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double p = options.p;
  report.add(nan, result.predicted, result.mean, result.stddev / std::sqrt(options.trials), "mse",
             {p, nan, nan, result.stddev, result.fraction_inside, result.bandwidth});
  for (const auto& pe : result.pairs) {
    report.add(pe.z, pe.theory_variance, pe.mean_sq_error, pe.stderr_, "pair",
               {p, static_cast<double>(pe.i), static_cast<double>(pe.j), nan, nan, nan});
  }
}

ExperimentReport mse_experiment(const Dataset& data, const MseOptions& options) {
  const MseResult result = run_mse(data, options);
  ExperimentReport report = mse_report_header(data, options);
  report.config.emplace_back("p", static_cast<std::uint64_t>(options.p));
  report.summary = {{"bandwidth", result.bandwidth},
                    {"mse_mean", result.mean},
                    {"mse_std", result.stddev},
                    {"mse_predicted", result.predicted},
                    {"dominance_interval_end", result.dominance_interval_end},
                    {"fraction_inside", result.fraction_inside}};
  report.trial_values = result.trial_mse;
  append_mse_rows(report, options, result);
  return report;
}

}  // namespace orfkit
