#pragma once

#include <memory>
#include <vector>

namespace orfkit::quadrature {

/// Nodes and weights of an n-point rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule, nodes in ascending order. Rules are computed by
/// Newton iteration on P_n and memoised; the returned pointer is shared
/// and immutable, so concurrent callers are safe.
std::shared_ptr<const Rule> gauss_legendre(int n);

/// Gauss-Chebyshev rule of the first kind: integrates f(u)/sqrt(1-u^2).
Rule gauss_chebyshev(int n);

}  // namespace orfkit::quadrature
