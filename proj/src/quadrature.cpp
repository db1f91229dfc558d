#include "orfkit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "orfkit/errors.hpp"

namespace orfkit::quadrature {
namespace {

std::shared_ptr<const Rule> build_gauss_legendre(int n) {
  auto rule = std::make_shared<Rule>();
  rule->nodes.assign(n, 0.0);
  rule->weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->nodes[i] = -x;
    rule->nodes[n - 1 - i] = x;
    rule->weights[i] = w;
    rule->weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

std::shared_ptr<const Rule> gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Rule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto rule = build_gauss_legendre(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(rule)).first->second;
}

Rule gauss_chebyshev(int n) {
  if (n < 1) throw InvalidArgument("gauss_chebyshev: n must be >= 1");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, std::numbers::pi / n);
  for (int k = 0; k < n; ++k) {
    rule.nodes[n - 1 - k] = std::cos(std::numbers::pi * (k + 0.5) / n);
  }
  return rule;
}

}  // namespace orfkit::quadrature
