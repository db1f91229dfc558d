#include "orfkit/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "orfkit/errors.hpp"
#include "orfkit/quadrature.hpp"

namespace orfkit::specfun {
namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

constexpr int kMaxSeriesTerms = 10000;

void require_dim(int d, const char* where) {
  if (d < 2) {
    throw InvalidArgument(std::string(where) + ": dimension d must be >= 2, got " +
                          std::to_string(d));
  }
}

double require_finite(double z, const char* where) {
  if (!std::isfinite(z)) {
    throw InvalidArgument(std::string(where) + ": argument must be finite");
  }
  return std::abs(z);
}

// Term recurrence t_{n+1} = t_n * (-z^2/4) / ((n+1)(n+1+nu)).
template <class Real>
Real series_sum(double nu, double z, double tol, bool guard_cancellation) {
  using std::abs;
  const Real q = Real(z) * Real(z) / 4;
  const Real nu_r = Real(nu);
  Real term = 1;
  Real sum = 1;
  Real max_term = 1;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    term *= -q / (Real(n + 1) * (Real(n + 1) + nu_r));
    sum += term;
    const Real mag = abs(term);
    if (mag > max_term) max_term = mag;
    // Terms shrink from here on once the next ratio is below one.
    const bool decreasing = q < Real(n + 2) * (Real(n + 2) + nu_r);
    const Real floor = std::max(Real(1), Real(abs(sum)));
    if (decreasing && mag < Real(tol) * floor) {
      if (guard_cancellation &&
          max_term * std::numeric_limits<Real>::epsilon() > Real(tol) * floor) {
        throw NumericalFailure("normalized_bessel_series: cancellation exceeds tolerance at z=" +
                               std::to_string(z));
      }
      return sum;
    }
  }
  throw NumericalFailure("normalized_bessel_series: no convergence within 10000 terms at z=" +
                         std::to_string(z));
}

// Sign-reliable evaluation of J_nu for bracketing. Near the zeros for large d the
// normalized function is far below the absolute accuracy of the integral, while
// J_nu itself is O(1/sqrt(z)).
double bessel_j(double nu, double z) { return std::cyl_bessel_j(nu, z); }

double bisect_zero(double nu, double lo, double hi) {
  double f_lo = bessel_j(nu, lo);
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = bessel_j(nu, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double next_zero(double nu, double prev, int index) {
  double lo = prev + 2.0;
  double hi = prev + 5.0;
  const double f_lo = bessel_j(nu, lo);
  if (f_lo == 0.0) return lo;
  double f_hi = bessel_j(nu, hi);
  for (int step = 0; (f_hi > 0) == (f_lo > 0) && f_hi != 0.0; ++step) {
    if (step == 64) {
      throw NumericalFailure("zeros: could not bracket zero #" + std::to_string(index));
    }
    lo = hi;
    hi += std::numbers::pi / 2;
    f_hi = bessel_j(nu, hi);
  }
  if (f_hi == 0.0) return hi;
  return bisect_zero(nu, lo, hi);
}

}  // namespace

BesselOrderDim::BesselOrderDim(int d) : d_(d) { require_dim(d, "BesselOrderDim"); }

int quadrature_nodes_for(double z) {
  return std::max(64, static_cast<int>(std::ceil(4.0 * std::abs(z))));
}

double normalized_bessel(int d, double z) {
  const BesselOrderDim order(d);
  z = require_finite(z, "normalized_bessel");
  if (z == 0.0) return 1.0;
  if (z * z / 4 <= order.nu() + 8) {
    return series_sum<double>(order.nu(), z, 1e-17, false);
  }
  return normalized_bessel_quadrature(d, z, quadrature_nodes_for(z));
}

double normalized_bessel_series(int d, double z, double tol) {
  const BesselOrderDim order(d);
  z = require_finite(z, "normalized_bessel_series");
  if (!(tol > 0)) throw InvalidArgument("normalized_bessel_series: tol must be > 0");
  return static_cast<double>(series_sum<Quad>(order.nu(), z, tol, true));
}

double normalized_bessel_quadrature(int d, double z, int nodes) {
  const BesselOrderDim order(d);
  z = require_finite(z, "normalized_bessel_quadrature");
  if (nodes < 8) throw InvalidArgument("normalized_bessel_quadrature: nodes must be >= 8");

  if (d == 2) {
    const auto rule = quadrature::gauss_chebyshev(nodes);
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) sum += rule.weights[k] * std::cos(z * rule.nodes[k]);
    return sum / std::numbers::pi;
  }

  // u = cos(theta); the integrand is even about theta = pi/2, so integrate
  // over [0, pi/2] and double.
  const double nu = order.nu();
  const double prefactor =
      std::exp(std::lgamma(nu + 1.0) - std::lgamma(nu + 0.5)) / std::sqrt(std::numbers::pi);
  const auto rule = quadrature::gauss_legendre(nodes);
  const double half_width = std::numbers::pi / 4;
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double theta = half_width * (1.0 + rule->nodes[k]);
    sum += rule->weights[k] * std::cos(z * std::cos(theta)) * std::pow(std::sin(theta), d - 2);
  }
  return prefactor * 2.0 * half_width * sum;
}

double zero_lower_bound_ismail(int d) {
  require_dim(d, "zero_lower_bound_ismail");
  return std::pow(2.0, 0.25) * std::pow(static_cast<double>(d), 0.75);
}

double zero_lower_bound_watson(int d) {
  require_dim(d, "zero_lower_bound_watson");
  return std::sqrt(0.25 * d * d - 1.0);
}

ZeroTable::ZeroTable(int d, std::vector<double> zeros, double tolerance)
    : d_(d), zeros_(std::move(zeros)), tolerance_(tolerance) {
  require_dim(d, "ZeroTable");
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (!(zeros_[i] > 0) || (i > 0 && !(zeros_[i] > zeros_[i - 1]))) {
      throw InvalidArgument("ZeroTable: zeros must be positive and strictly increasing");
    }
  }
}

double first_zero(int d) {
  const BesselOrderDim order(d);
  const double nu = order.nu();
  double lo = std::max(zero_lower_bound_ismail(d), zero_lower_bound_watson(d));
  if (!(bessel_j(nu, lo) > 0)) {
    throw NumericalFailure("first_zero: function not positive at the lower bound for d=" +
                           std::to_string(d));
  }
  double hi = lo + std::numbers::pi / 2;
  double f_hi = bessel_j(nu, hi);
  for (int step = 0; f_hi > 0; ++step) {
    if (step == 256) {
      throw NumericalFailure("first_zero: could not bracket zero #1 for d=" + std::to_string(d));
    }
    lo = hi;
    hi += std::numbers::pi / 2;
    f_hi = bessel_j(nu, hi);
  }
  if (f_hi == 0.0) return hi;
  return bisect_zero(nu, lo, hi);
}

ZeroTable zeros(int d, int m) {
  const BesselOrderDim order(d);
  if (m < 1) throw InvalidArgument("zeros: m must be >= 1");
  std::vector<double> out;
  out.reserve(m);
  out.push_back(first_zero(d));
  for (int j = 1; j < m; ++j) out.push_back(next_zero(order.nu(), out.back(), j + 1));
  return ZeroTable(d, std::move(out), 1e-10);
}

double rayleigh_partial(const ZeroTable& table) {
  double sum = 0.0;
  // Smallest terms first.
  for (auto it = table.zeros().rbegin(); it != table.zeros().rend(); ++it) {
    sum += 1.0 / (*it * *it);
  }
  return sum;
}

double rayleigh_partial(int d, int m) { return rayleigh_partial(zeros(d, m)); }

double weierstrass_partial(const ZeroTable& table, double z) {
  z = require_finite(z, "weierstrass_partial");
  double product = 1.0;
  for (double a : table.zeros()) product *= 1.0 - (z * z) / (a * a);
  return product;
}

double weierstrass_partial(int d, int m, double z) {
  return weierstrass_partial(zeros(d, m), z);
}

}  // namespace orfkit::specfun
