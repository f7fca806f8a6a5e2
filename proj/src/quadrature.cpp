#include "pathent/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "pathent/errors.hpp"

namespace pathent::quad {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(tol > 0.0)) throw ParameterError("integrate: tol must be positive");
  if (!(a < b)) throw ParameterError("integrate: requires a < b");

  boost::math::quadrature::tanh_sinh<double> integrator(15);
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double value = integrator.integrate(f, a, b, tol, &error, &l1, &levels);

  // tanh_sinh terminates on |I1-I0| < tol·L1; accept when the reported
  // last-refinement error clears the target with slack for roundoff.
  const double scale = std::max(1.0, l1);
  if (!std::isfinite(value) || error > 100.0 * tol * scale) {
    std::ostringstream msg;
    msg << "integrate: tolerance " << tol << " not reached on (" << a << ", "
        << b << "): error estimate " << error << ", L1 " << l1 << ", levels "
        << levels;
    throw NumericError(msg.str());
  }
  return value;
}

}  // namespace pathent::quad
