#pragma once

#include <functional>

namespace ncstat::quadrature {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod on [a, b]; b may be +infinity.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

}  // namespace ncstat::quadrature
