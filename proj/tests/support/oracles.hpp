#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's evaluation paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Wide = boost::multiprecision::cpp_bin_float_50;

/// Power series of j_{d/2-1} summed in 50-digit arithmetic until terms fall
/// below 1e-45 past the peak.
inline double bessel_series(int d, double z) {
  const Wide nu = Wide(d) / 2 - 1;
  const Wide q = Wide(z) * Wide(z) / 4;
  Wide term = 1;
  Wide sum = 1;
  for (int n = 1; n < 20000; ++n) {
    term *= -q / (Wide(n) * (Wide(n) + nu));
    sum += term;
    if (q < Wide(n) * (Wide(n) + nu) && abs(term) < Wide(1e-45)) break;
  }
  return static_cast<double>(sum);
}

/// Bisection on bessel_series over a bracketing interval.
inline double bisect_series_zero(int d, double lo, double hi) {
  double flo = bessel_series(d, lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_series(d, mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Density of one coordinate of a uniform point on S^{d-1}.
inline double sphere_marginal_density(int d, double u) {
  const double c = std::exp(std::lgamma(0.5 * d) - std::lgamma(0.5 * (d - 1))) / std::sqrt(M_PI);
  return c * std::pow(1.0 - u * u, 0.5 * (d - 3));
}

/// CDF of the same law: u^2 ~ Beta(1/2, (d-1)/2).
inline double sphere_marginal_cdf(int d, double u) {
  const double half = 0.5 * boost::math::ibeta(0.5, 0.5 * (d - 1), u * u);
  return u < 0 ? 0.5 - half : 0.5 + half;
}

/// E|w| for w ~ N(0, I_d).
inline double chi_mean(int d) {
  return std::sqrt(2.0) * std::exp(std::lgamma(0.5 * (d + 1)) - std::lgamma(0.5 * d));
}

/// Fixed-seed generator for hand-rolled property tests.
struct Gen {
  std::mt19937_64 engine;
  explicit Gen(std::uint64_t seed) : engine(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(engine); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(engine); }
  double normal() { return std::normal_distribution<double>()(engine); }
};

}  // namespace oracle
