#pragma once

#include <vector>

/// Normalized Bessel function of the first kind
///
///   j_nu(z) = Gamma(nu + 1) (2/z)^nu J_nu(z),   nu = d/2 - 1,
///
/// which is the characteristic function of one coordinate of a uniform
/// vector on the sphere S^{d-1}. Everything here is indexed by the
/// ambient dimension d rather than by nu, since that is how the kernel
/// estimators use it.
namespace orfkit::specfun {

/// Ambient dimension d >= 2 together with its Bessel order nu = d/2 - 1.
class BesselOrderDim {
 public:
  explicit BesselOrderDim(int d);

  int d() const { return d_; }
  double nu() const { return 0.5 * d_ - 1.0; }

 private:
  int d_;
};

/// j_{d/2-1}(z). Uses the power series where its terms are monotone
/// (z^2/4 <= nu + 8) and the Poisson integral otherwise. The function is
/// even, so negative z is accepted and folded.
double normalized_bessel(int d, double z);

/// Power series sum_n (-z^2/4)^n / (n! (nu+1)_n), accumulated in quad
/// precision. Stops once terms are decreasing and |term| falls below
/// tol * max(1, |partial sum|). Throws NumericalFailure when the largest
/// term times the working epsilon exceeds that threshold (cancellation
/// would swamp the result) or after 10000 terms.
double normalized_bessel_series(int d, double z, double tol);

/// Poisson integral
///   Gamma(nu+1) / (sqrt(pi) Gamma(nu+1/2)) * int_{-1}^{1} cos(zu) (1-u^2)^{nu-1/2} du
/// evaluated with a fixed node count. d = 2 uses the Gauss-Chebyshev rule
/// (weight (1-u^2)^{-1/2}); d >= 3 substitutes u = cos(theta) and applies
/// Gauss-Legendre to the smooth integrand cos(z cos theta) sin^{d-2}(theta).
double normalized_bessel_quadrature(int d, double z, int nodes);

/// Node count used by normalized_bessel for its quadrature branch.
int quadrature_nodes_for(double z);

/// Lower bound a_{d,1} > 2^{1/4} d^{3/4}.
double zero_lower_bound_ismail(int d);
/// Lower bound a_{d,1} > sqrt(d^2/4 - 1).
double zero_lower_bound_watson(int d);

/// The positive zeros a_{d,1} < a_{d,2} < ... of j_{d/2-1}.
class ZeroTable {
 public:
  ZeroTable(int d, std::vector<double> zeros, double tolerance);

  int d() const { return d_; }
  const std::vector<double>& zeros() const { return zeros_; }
  double tolerance() const { return tolerance_; }
  std::size_t size() const { return zeros_.size(); }
  double operator[](std::size_t i) const { return zeros_[i]; }

 private:
  int d_;
  std::vector<double> zeros_;
  double tolerance_;
};

/// a_{d,1} to 1e-12 absolute.
double first_zero(int d);

/// First m zeros, each to 1e-10 absolute or better.
ZeroTable zeros(int d, int m);

/// sum_{j<=m} 1 / a_{d,j}^2. The full series sums to 1/(2d).
double rayleigh_partial(int d, int m);
double rayleigh_partial(const ZeroTable& table);

/// prod_{j<=m} (1 - z^2 / a_{d,j}^2).
double weierstrass_partial(int d, int m, double z);
double weierstrass_partial(const ZeroTable& table, double z);

}  // namespace orfkit::specfun
