#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "orfkit/errors.hpp"
#include "orfkit/specfun.hpp"

using namespace orfkit;
using namespace orfkit::specfun;

namespace {
// Reference J_nu-based value, used only away from cancellation-dominated regions.
double scaled_std_bessel(int d, double z) {
  const double nu = 0.5 * d - 1.0;
  return std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / z)) * std::cyl_bessel_j(nu, z);
}
}  // namespace

TEST_CASE("normalized_bessel: value at zero and small-z expansion") {
  for (int d = 2; d <= 1000; ++d) REQUIRE(normalized_bessel(d, 0.0) == 1.0);
  // Leading correction of the series: 1 - z^2/(2d).
  CHECK(std::abs(normalized_bessel(10, 0.1) - 0.9995) < 1e-6);
  CHECK(normalized_bessel(10, 0.1) == doctest::Approx(oracle::bessel_series(10, 0.1)).epsilon(1e-14));
}

TEST_CASE("normalized_bessel: first zero of j_0") {
  CHECK(std::abs(normalized_bessel(2, 2.40482555769577)) < 1e-9);
}

TEST_CASE("normalized_bessel: argument checks") {
  CHECK_THROWS_AS(normalized_bessel(1, 1.0), InvalidArgument);
  CHECK_THROWS_AS(normalized_bessel(5, std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(normalized_bessel(5, INFINITY), InvalidArgument);
  CHECK(normalized_bessel(7, -2.5) == normalized_bessel(7, 2.5));
}

TEST_CASE("normalized_bessel: d = 3 closed form sin(z)/z") {
  for (double z = 0.01; z <= 50.0; z += 0.01) {
    REQUIRE(std::abs(normalized_bessel(3, z) - std::sin(z) / z) <= 1e-12);
  }
}

TEST_CASE("normalized_bessel: agrees with the 50-digit series oracle") {
  for (int d : {2, 3, 4, 7, 10, 33, 100, 301, 1000}) {
    for (double z = 0.0; z <= 60.0; z += 0.37) {
      const double ref = oracle::bessel_series(d, z);
      CAPTURE(d);
      CAPTURE(z);
      REQUIRE(std::abs(normalized_bessel(d, z) - ref) <= 1e-12);
      if (std::abs(ref) > 1e-3) REQUIRE(std::abs(normalized_bessel(d, z) - ref) <= 1e-10 * std::abs(ref));
    }
  }
}

TEST_CASE("normalized_bessel: large-z region against scaled J_nu") {
  for (int d : {2, 5, 20, 100, 200}) {
    for (double z = 60.0; z <= 100.0; z += 1.3) {
      const double ref = scaled_std_bessel(d, z);
      CAPTURE(d);
      CAPTURE(z);
      REQUIRE(std::abs(normalized_bessel(d, z) - ref) <= 1e-12);
    }
  }
}

TEST_CASE("normalized_bessel: bounded by one") {
  oracle::Gen gen(11);
  for (int i = 0; i < 3000; ++i) {
    const int d = gen.integer(2, 1000);
    const double z = gen.uniform(0.0, 100.0);
    REQUIRE(std::abs(normalized_bessel(d, z)) <= 1.0);
  }
}

TEST_CASE("normalized_bessel: derivative identity j'_{d}(z) = -(z/d) j_{d+2}(z)") {
  const double h = 1e-5;
  for (int d : {2, 3, 6, 15, 64, 200}) {
    for (double z = 0.1; z <= 30.0; z += 0.7) {
      const double fd = (normalized_bessel(d, z + h) - normalized_bessel(d, z - h)) / (2 * h);
      CAPTURE(d);
      CAPTURE(z);
      REQUIRE(std::abs(fd + (z / d) * normalized_bessel(d + 2, z)) <= 1e-6);
    }
  }
}

TEST_CASE("normalized_bessel: Joshi lower bound on [0, sqrt(d)]") {
  for (int d : {2, 3, 5, 10, 50, 300}) {
    const double end = std::sqrt(static_cast<double>(d));
    for (int k = 0; k <= 500; ++k) {
      const double z = end * k / 500.0;
      REQUIRE(1.0 - z * z / (2.0 * d) <= normalized_bessel(d, z) + 1e-14);
    }
  }
}

TEST_CASE("normalized_bessel_series") {
  CHECK(normalized_bessel_series(4, 0.0, 1e-12) == 1.0);
  CHECK(normalized_bessel_series(2, 1.0, 1e-12) == doctest::Approx(0.7651976866).epsilon(1e-10));
  CHECK(std::abs(normalized_bessel_series(300, 24.0, 1e-12) -
                 normalized_bessel_quadrature(300, 24.0, quadrature_nodes_for(24.0))) <= 1e-9);
  CHECK_THROWS_AS(normalized_bessel_series(4, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(normalized_bessel_series(4, 1.0, -1.0), InvalidArgument);
  // Quad precision cannot absorb e^{200} worth of cancellation.
  CHECK_THROWS_AS(normalized_bessel_series(2, 200.0, 1e-12), NumericalFailure);
}

TEST_CASE("normalized_bessel_quadrature") {
  CHECK(std::abs(normalized_bessel_quadrature(5, 0.0, 32) - 1.0) <= 1e-12);
  CHECK(std::abs(normalized_bessel_quadrature(5, 3.0, 64) - normalized_bessel_series(5, 3.0, 1e-14)) <=
        1e-10);
  CHECK(std::abs(normalized_bessel_quadrature(3, std::numbers::pi, 64)) <= 1e-10);
  CHECK(std::abs(normalized_bessel_quadrature(2, 1.0, 64) - 0.7651976865579666) <= 1e-13);
  CHECK_THROWS_AS(normalized_bessel_quadrature(5, 1.0, 7), InvalidArgument);
}

TEST_CASE("series and quadrature agree on the oracle grid") {
  for (int d : {3, 5, 10, 50, 301}) {
    for (int k = 0; k <= 200; ++k) {
      const double z = 0.25 * k;
      const double s = normalized_bessel_series(d, z, 1e-13);
      const double q = normalized_bessel_quadrature(d, z, quadrature_nodes_for(z));
      CAPTURE(d);
      CAPTURE(z);
      REQUIRE(std::abs(s - q) <= 1e-9);
    }
  }
}

TEST_CASE("zero lower bounds") {
  CHECK(zero_lower_bound_ismail(2) == doctest::Approx(2.0));
  CHECK(zero_lower_bound_watson(2) == 0.0);
  CHECK(zero_lower_bound_watson(10) == doctest::Approx(std::sqrt(24.0)));
}

TEST_CASE("first_zero matches bisection on the series oracle") {
  const double z2 = oracle::bisect_series_zero(2, 2.0, 3.0);
  const double z4 = oracle::bisect_series_zero(4, 3.5, 4.0);
  CHECK(std::abs(z2 - 2.404825557695773) < 1e-13);
  CHECK(std::abs(z4 - 3.831705970207512) < 1e-13);
  CHECK(std::abs(first_zero(2) - z2) < 1e-12);
  CHECK(std::abs(first_zero(4) - z4) < 1e-12);
  CHECK(std::abs(first_zero(3) - std::numbers::pi) < 1e-12);
}

TEST_CASE("first_zero exceeds both lower bounds and is a sign change") {
  for (int d = 2; d <= 200; ++d) {
    const double a = first_zero(d);
    CAPTURE(d);
    REQUIRE(a > std::max(zero_lower_bound_ismail(d), zero_lower_bound_watson(d)));
    const double nu = 0.5 * d - 1.0;
    REQUIRE(std::cyl_bessel_j(nu, a - 1e-9) > 0);
    REQUIRE(std::cyl_bessel_j(nu, a + 1e-9) < 0);
  }
}

TEST_CASE("zeros") {
  const ZeroTable t3 = zeros(3, 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(t3[k] - (k + 1) * std::numbers::pi) < 1e-10);
  CHECK(t3.d() == 3);
  CHECK(t3.tolerance() <= 1e-10);

  const ZeroTable t2 = zeros(2, 2);
  CHECK(std::abs(t2[0] - oracle::bisect_series_zero(2, 2.0, 3.0)) < 1e-8);
  CHECK(std::abs(t2[1] - oracle::bisect_series_zero(2, 5.0, 6.0)) < 1e-8);
  CHECK(std::abs(t2[1] - 5.520078110286311) < 1e-8);
  CHECK(zeros(2, 1)[0] > 2.0);

  // Large order: the gap between the first two zeros exceeds the initial window.
  const ZeroTable t300 = zeros(300, 4);
  for (std::size_t k = 1; k < t300.size(); ++k) CHECK(t300[k] > t300[k - 1] + 2.0);
  CHECK(std::cyl_bessel_j(149.0, t300[1] - 1e-8) * std::cyl_bessel_j(149.0, t300[1] + 1e-8) < 0);

  CHECK_THROWS_AS(zeros(2, 0), InvalidArgument);
  CHECK_THROWS_AS(ZeroTable(3, {1.0, 1.0}, 1e-10), InvalidArgument);
}

TEST_CASE("zeros are pi-spaced for d = 3 far out") {
  const ZeroTable t = zeros(3, 200);
  for (std::size_t k = 0; k < t.size(); ++k) REQUIRE(std::abs(t[k] - (k + 1) * std::numbers::pi) < 1e-10);
}

TEST_CASE("rayleigh_partial") {
  CHECK(rayleigh_partial(3, 1) == doctest::Approx(1.0 / (std::numbers::pi * std::numbers::pi)));
  CHECK(rayleigh_partial(2, 1) == doctest::Approx(0.172915).epsilon(1e-5));
  for (int d : {2, 5, 10, 40}) {
    const ZeroTable t = zeros(d, 60);
    double prev = 0.0;
    for (int m = 1; m <= 60; ++m) {
      const double r = rayleigh_partial(ZeroTable(d, {t.zeros().begin(), t.zeros().begin() + m}, 1e-10));
      REQUIRE(r > prev);
      REQUIRE(r < 1.0 / (2.0 * d));
      prev = r;
    }
  }
}

TEST_CASE("weierstrass_partial") {
  CHECK(weierstrass_partial(4, 5, 0.0) == 1.0);
  CHECK(std::abs(weierstrass_partial(3, 500, 1.0) - std::sin(1.0)) < 1e-3);
  CHECK(weierstrass_partial(5, 1, first_zero(5)) == 0.0);

  // Error shrinks as the number of factors doubles, below the first zero.
  for (int d : {2, 5, 12}) {
    const ZeroTable t = zeros(d, 256);
    const double z = 0.7 * t[0];
    double prev_err = INFINITY;
    for (int m = 4; m <= 256; m *= 2) {
      const double err = std::abs(
          weierstrass_partial(ZeroTable(d, {t.zeros().begin(), t.zeros().begin() + m}, 1e-10), z) -
          normalized_bessel(d, z));
      REQUIRE(err < prev_err);
      prev_err = err;
    }
  }
}
