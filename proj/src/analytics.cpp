#include "orfkit/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "orfkit/errors.hpp"
#include "orfkit/specfun.hpp"

namespace orfkit {
namespace {

void require_p(int p, const char* where) {
  if (p < 1) throw InvalidArgument(std::string(where) + ": p must be >= 1");
}

double require_z(double z, const char* where) {
  if (!std::isfinite(z) || z < 0) {
    throw InvalidArgument(std::string(where) + ": z must be finite and >= 0");
  }
  return z;
}

double single_block_variance(int d, int p, double z) {
  const double j1 = specfun::normalized_bessel(d, z);
  const double j2 = specfun::normalized_bessel(d, 2.0 * z);
  const double js = specfun::normalized_bessel(d, std::numbers::sqrt2 * z);
  return ((1.0 + j2) / 2.0 + (p - 1) * js - p * j1 * j1) / p;
}

}  // namespace

std::string_view to_string(Estimator e) { return e == Estimator::rff ? "rff" : "orf"; }

Estimator parse_estimator(std::string_view name) {
  if (name == "rff") return Estimator::rff;
  if (name == "orf") return Estimator::orf;
  throw InvalidArgument("unknown estimator '" + std::string(name) + "' (expected rff or orf)");
}

double rff_bias(double z) {
  z = require_z(z, "rff_bias");
  return std::exp(-z * z / 2.0);
}

double rff_variance(int p, double z) {
  require_p(p, "rff_variance");
  z = require_z(z, "rff_variance");
  const double gap = -std::expm1(-z * z);
  return gap * gap / (2.0 * p);
}

double orf_bias(int d, double z) { return specfun::normalized_bessel(d, require_z(z, "orf_bias")); }

double orf_variance(int d, int p, double z) {
  static_cast<void>(specfun::BesselOrderDim(d));
  require_p(p, "orf_variance");
  z = require_z(z, "orf_variance");
  if (p <= d) return single_block_variance(d, p, z);
  const int full_blocks = p / d;
  const int tail = p % d;
  const double pp = static_cast<double>(p);
  double v = full_blocks * (d / pp) * (d / pp) * single_block_variance(d, d, z);
  if (tail > 0) v += (tail / pp) * (tail / pp) * single_block_variance(d, tail, z);
  return v;
}

double orf_single_mode_variance(int d, double z) { return single_block_variance(d, 1, z); }

double orf_covariance_term(int d, double z) {
  z = require_z(z, "orf_covariance_term");
  const double j1 = specfun::normalized_bessel(d, z);
  return specfun::normalized_bessel(d, std::numbers::sqrt2 * z) - j1 * j1;
}

double joshi_lower_bound(int d, double z) {
  static_cast<void>(specfun::BesselOrderDim(d));
  return 1.0 - z * z / (2.0 * d);
}

double interval_map(int d, double u) { return u * std::sqrt(1.0 - 4.0 / (2.0 * u * u - d)); }

BoundConstants bound_constants(int d) {
  static_cast<void>(specfun::BesselOrderDim(d));
  BoundConstants c;
  c.d = d;
  c.b_d = interval_map(d, specfun::zero_lower_bound_ismail(d));
  if (d >= 5) c.c_d = interval_map(d, specfun::zero_lower_bound_watson(d));
  c.alpha_d = std::pow(0.5 * d, 0.75);
  c.beta_d = 0.5 * specfun::zero_lower_bound_watson(d);
  c.bias_interval_end = c.c_d ? std::max(c.b_d, *c.c_d) : c.b_d;
  c.variance_interval_end = std::max(c.alpha_d, c.beta_d);
  c.first_zero = specfun::first_zero(d);
  return c;
}

BoundPair bias_bounds(const BoundConstants& c, double z) {
  z = require_z(z, "bias_bounds");
  return {std::exp(-z * z / 2.0), std::exp(-z * z / (2.0 * c.d)), z <= c.bias_interval_end};
}

BoundPair bias_bounds(int d, double z) { return bias_bounds(bound_constants(d), z); }

BoundPair variance_bounds(const BoundConstants& c, int p, double z) {
  require_p(p, "variance_bounds");
  z = require_z(z, "variance_bounds");
  const double d = c.d;
  const double pp = p;
  const double z2 = z * z;
  const double lower = (1.0 + std::exp(-2.0 * z2)) / (2.0 * pp) +
                       (pp - 1.0) / pp * std::exp(-z2) - std::exp(-z2 / d);
  const double upper = (1.0 + std::exp(-2.0 * z2 / d)) / (2.0 * pp) +
                       (pp - 1.0) / pp * std::exp(-z2 / d) - std::exp(-z2);
  return {lower, upper, z <= c.bias_interval_end};
}

BoundPair variance_bounds(int d, int p, double z) {
  return variance_bounds(bound_constants(d), p, z);
}

double variance_dominance_interval(int d) {
  static_cast<void>(specfun::BesselOrderDim(d));
  return std::max(std::pow(0.5 * d, 0.75), 0.5 * specfun::zero_lower_bound_watson(d));
}

double estimator_bias(Estimator estimator, int d, double z) {
  return estimator == Estimator::rff ? rff_bias(z) : orf_bias(d, z);
}

double estimator_variance(Estimator estimator, int d, int p, double z) {
  return estimator == Estimator::rff ? rff_variance(p, z) : orf_variance(d, p, z);
}

ClosedFormSummary summarize(Estimator estimator, int d, int p, double z) {
  const BoundConstants c = bound_constants(d);
  ClosedFormSummary s;
  s.estimator = estimator;
  s.d = d;
  s.p = p;
  s.z = z;
  s.bias = estimator_bias(estimator, d, z);
  s.variance = estimator_variance(estimator, d, p, z);
  if (s.variance < -1e-12) {
    throw NumericalFailure("summarize: negative variance " + std::to_string(s.variance));
  }
  s.bias_interval_end = c.bias_interval_end;
  s.variance_interval_end = c.variance_interval_end;
  return s;
}

}  // namespace orfkit
