#pragma once

#include <cstdint>
#include <vector>

#include "orfkit/analytics.hpp"
#include "orfkit/dataset.hpp"
#include "orfkit/report.hpp"

namespace orfkit {

struct MseOptions {
  int p = 1;
  int trials = 1;
  Estimator kind = Estimator::rff;
  std::uint64_t seed = 0;
  int workers = 1;
  int tracked_pairs = 5;  ///< pairs (0,1), (0,2), ... whose squared errors are tracked
};

/// Squared error of one kernel entry, averaged over trials.
struct PairError {
  int i = 0;
  int j = 0;
  double z = 0.0;                ///< scaled distance |x_i - x_j| / sigma
  double theory_variance = 0.0;  ///< estimator variance at z
  double mean_sq_error = 0.0;
  double stderr_ = 0.0;
};

struct MseResult {
  double bandwidth = 0.0;
  std::vector<double> trial_mse;  ///< |K - K~|_F^2 / n^2 per trial
  double mean = 0.0;
  double stddev = 0.0;           ///< sample standard deviation over trials
  double predicted = 0.0;        ///< (1/n^2) sum_{i != j} V(z_ij)
  double dominance_interval_end = 0.0;
  double fraction_inside = 0.0;  ///< share of pairs i < j with z_ij <= dominance_interval_end
  std::vector<PairError> pairs;
};

/// Inputs are scaled by the bandwidth heuristic; the reference kernel is the
/// Gaussian e^{-z^2/2} for RFF and the Bessel kernel j_{d/2-1}(z) for ORF.
/// Trial t draws its weights from sub_seed(seed, t).
MseResult run_mse(const Dataset& data, const MseOptions& options);

/// run_mse packaged as a report: one "mse" row plus one "pair" row per
/// tracked pair.
ExperimentReport mse_experiment(const Dataset& data, const MseOptions& options);

/// Appends the rows of one run to a report created by mse_report_header.
void append_mse_rows(ExperimentReport& report, const MseOptions& options, const MseResult& result);
ExperimentReport mse_report_header(const Dataset& data, const MseOptions& options);

}  // namespace orfkit
