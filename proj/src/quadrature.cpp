#include "ncstat/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ncstat::quadrature {

Result integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  Result r;
  r.value = gauss_kronrod<double, 61>::integrate(f, a, b, 20, rel_tol, &r.error_estimate);
  return r;
}

}  // namespace ncstat::quadrature
