#pragma once

#include <optional>
#include <string_view>

namespace orfkit {

enum class Estimator { rff, orf };

std::string_view to_string(Estimator e);
/// Parses "rff" / "orf"; throws InvalidArgument otherwise.
Estimator parse_estimator(std::string_view name);

/// Closed-form moments of one estimator at one distance z = |x - y|.
struct ClosedFormSummary {
  Estimator estimator = Estimator::rff;
  int d = 0;
  int p = 0;
  double z = 0.0;
  double bias = 0.0;      ///< E[k~(x, y)]
  double variance = 0.0;  ///< V[k~(x, y)]
  double bias_interval_end = 0.0;
  double variance_interval_end = 0.0;
};

/// Interval endpoints of the Gaussian sandwich and of variance dominance.
struct BoundConstants {
  int d = 0;
  double b_d = 0.0;
  std::optional<double> c_d;  ///< defined for d >= 5
  double alpha_d = 0.0;
  double beta_d = 0.0;
  double bias_interval_end = 0.0;      ///< max(b_d, c_d); b_d when d <= 4
  double variance_interval_end = 0.0;  ///< max(alpha_d, beta_d)
  double first_zero = 0.0;             ///< a_{d,1}
};

/// Lower/upper envelope at one z. The inequalities are only claimed when
/// in_validity_interval is true; outside it the numbers are still returned.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  bool in_validity_interval = false;
};

double rff_bias(double z);

/// (1/(2p)) (1 - exp(-z^2))^2, the variance of the mean of p i.i.d.
/// cos(w^T (x - y)) with w ~ N(0, I).
double rff_variance(int p, double z);

/// j_{d/2-1}(z).
double orf_bias(int d, double z);

/// (1/p) {(1 + j(2z))/2 + (p-1) j(sqrt(2) z) - p j(z)^2} for p <= d. For p > d
/// the estimator is an average of independent Haar blocks of sizes p_b and
/// the variance is sum_b (p_b/p)^2 V(p_b).
double orf_variance(int d, int p, double z);

/// Variance of a single feature cos(w_1^T (x - y)), w_1 uniform on the sphere.
double orf_single_mode_variance(int d, double z);

/// cov[cos(w_1^T delta), cos(w_2^T delta)] = j(sqrt(2) z) - j(z)^2.
double orf_covariance_term(int d, double z);

/// 1 - z^2/(2d), a lower bound of j_{d/2-1}(z).
double joshi_lower_bound(int d, double z);

/// u sqrt(1 - 4/(2u^2 - d)), evaluated at lower bounds of the first zero.
double interval_map(int d, double u);

BoundConstants bound_constants(int d);

/// (e^{-z^2/2}, e^{-z^2/(2d)}), inside iff z <= bias_interval_end.
BoundPair bias_bounds(int d, double z);
BoundPair bias_bounds(const BoundConstants& c, double z);

/// Envelope obtained by substituting the bias sandwich into the ORF variance.
BoundPair variance_bounds(int d, int p, double z);
BoundPair variance_bounds(const BoundConstants& c, int p, double z);

/// max(alpha_d, beta_d).
double variance_dominance_interval(int d);

ClosedFormSummary summarize(Estimator estimator, int d, int p, double z);

/// Estimator mean at z: Gaussian kernel for RFF, Bessel kernel for ORF.
double estimator_bias(Estimator estimator, int d, double z);
double estimator_variance(Estimator estimator, int d, int p, double z);

}  // namespace orfkit
