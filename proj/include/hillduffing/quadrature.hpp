#pragma once

#include <cstddef>
#include <functional>

namespace hd::quad {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // Kronrod error estimate, summed over subintervals
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  std::size_t max_subdivisions = 2000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
///
/// Subdivides the interval with the largest error estimate until the total
/// estimate drops below max(abs_tol, rel_tol * |value|). The integrand is
/// never evaluated at the endpoints.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

}  // namespace hd::quad
