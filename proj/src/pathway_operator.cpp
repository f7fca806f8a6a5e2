#include "pathent/pathway_operator.hpp"

#include <cmath>

#include "pathent/errors.hpp"
#include "pathent/quadrature.hpp"

namespace pathent::pathway {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_x_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + ": requires x > 0");
}

}  // namespace

void PathwayParams::validate() const {
  if (!(eta > 0.0)) throw ParameterError("pathway: requires eta > 0");
  if (!(alpha_pw < 1.0)) throw ParameterError("pathway: requires alpha < 1");
  if (!(a > 0.0)) throw ParameterError("pathway: requires a > 0");
}

double pathway_integral_numeric(const std::function<double(double)>& f,
                                const PathwayParams& params, double x,
                                double tol, KernelVariant variant) {
  params.validate();
  require_x_positive(x, "pathway_integral_numeric");
  if (!(tol > 0.0))
    throw ParameterError("pathway_integral_numeric: tol must be positive");

  const double top = params.upper_limit(x);
  const double z = params.z_exp();
  const double kernel_exp = (variant == KernelVariant::corrected) ? z : z - 1.0;
  const double prefactor = (variant == KernelVariant::corrected)
                               ? std::pow(x, params.eta)
                               : std::pow(x, params.eta - 1.0);
  const double inner = quad::integrate(
      [&](double u) { return std::pow(1.0 - u, kernel_exp) * f(top * u); },
      0.0, 1.0, tol);
  return prefactor * top * inner;
}

double pathway_power(const PathwayParams& params, double rho, double x) {
  params.validate();
  require_x_positive(x, "pathway_power");
  if (!(rho > 0.0)) throw ParameterError("pathway_power: requires rho > 0");

  const double z = params.z_exp();
  const double log_a1a = std::log(params.a * (1.0 - params.alpha_pw));
  // Everything in one exponent: the gamma ratio degenerates gracefully for
  // the large z of alpha -> 1.
  return std::exp(std::lgamma(rho) + std::lgamma(1.0 + z) -
                  std::lgamma(z + rho + 1.0) + (params.eta + rho) * std::log(x) -
                  rho * log_a1a);
}

OperatorImage pathway_bessel(const PathwayParams& params, double rho,
                             const sf::BesselParams& bp, double x, double tol) {
  params.validate();
  bp.validate();
  require_x_positive(x, "pathway_bessel");
  if (!(rho + bp.p > 0.0))
    throw ParameterError("pathway_bessel: requires rho + p > 0");

  const double z = params.z_exp();
  const double a1a = params.a * (1.0 - params.alpha_pw);
  const sf::WrightSeriesSpec spec{
      {{rho + bp.p, 2.0}},
      {{bp.kappa(), 1.0}, {z + bp.p + rho + 1.0, 2.0}}};
  const double arg = -bp.c * x * x / (4.0 * a1a * a1a);
  const double log_scale = std::lgamma(1.0 + z) - bp.p * std::log(2.0) -
                           (bp.p + rho) * std::log(a1a) +
                           (bp.p + rho + params.eta) * std::log(x);
  return {sf::wright_eval_scaled(spec, arg, log_scale, tol),
          ImageForm::closed_wright};
}

OperatorImage pathway_trig(TrigKind kind, const PathwayParams& params,
                           double rho, double c, double x, double tol) {
  params.validate();
  require_x_positive(x, "pathway_trig");
  if (!(rho > 0.0)) throw ParameterError("pathway_trig: requires rho > 0");

  const double z = params.z_exp();
  const double a1a = params.a * (1.0 - params.alpha_pw);
  const double w = c * c * x * x / (4.0 * a1a * a1a);
  const double lgz = std::lgamma(1.0 + z);

  switch (kind) {
    case TrigKind::cos:
    case TrigKind::cosh: {
      const sf::WrightSeriesSpec spec{{{rho, 2.0}},
                                      {{0.5, 1.0}, {z + rho + 1.0, 2.0}}};
      const double log_scale = 0.5 * std::log(kPi) + lgz -
                               rho * std::log(a1a) +
                               (rho + params.eta) * std::log(x);
      const double arg = (kind == TrigKind::cos) ? -w : w;
      return {sf::wright_eval_scaled(spec, arg, log_scale, tol),
              ImageForm::closed_wright};
    }
    case TrigKind::sin:
    case TrigKind::sinh: {
      // Odd integrands carry the extra factor c relative to the cosine pair.
      const sf::WrightSeriesSpec spec{{{rho + 1.0, 2.0}},
                                      {{1.5, 1.0}, {z + rho + 2.0, 2.0}}};
      const double log_scale = 0.5 * std::log(kPi) - std::log(2.0) + lgz -
                               (rho + 1.0) * std::log(a1a) +
                               (rho + params.eta + 1.0) * std::log(x);
      const double arg = (kind == TrigKind::sin) ? -w : w;
      return {c * sf::wright_eval_scaled(spec, arg, log_scale, tol),
              ImageForm::closed_wright};
    }
  }
  throw ParameterError("pathway_trig: unknown kind");
}

double laplace_limit_power(double a, double eta, double rho, double x) {
  if (!(a > 0.0) || !(eta > 0.0))
    throw ParameterError("laplace_limit: requires a > 0, eta > 0");
  if (!(rho > 0.0)) throw ParameterError("laplace_limit: requires rho > 0");
  require_x_positive(x, "laplace_limit_power");
  return std::exp(std::lgamma(rho) + (eta + rho) * std::log(x) -
                  rho * std::log(a * eta));
}

double laplace_limit_bessel(double a, double eta, double rho,
                            const sf::BesselParams& bp, double x, double tol) {
  if (!(a > 0.0) || !(eta > 0.0))
    throw ParameterError("laplace_limit: requires a > 0, eta > 0");
  bp.validate();
  require_x_positive(x, "laplace_limit_bessel");
  if (!(rho + bp.p > 0.0))
    throw ParameterError("laplace_limit_bessel: requires rho + p > 0");

  const double ae = a * eta;
  const sf::WrightSeriesSpec spec{{{rho + bp.p, 2.0}}, {{bp.kappa(), 1.0}}};
  const double arg = -bp.c * x * x / (4.0 * ae * ae);
  const double log_scale = -bp.p * std::log(2.0) - (bp.p + rho) * std::log(ae) +
                           (bp.p + rho + eta) * std::log(x);
  return sf::wright_eval_scaled(spec, arg, log_scale, tol);
}

double laplace_limit_trig(TrigKind kind, double a, double eta, double rho,
                          double c, double x, double tol) {
  if (!(a > 0.0) || !(eta > 0.0))
    throw ParameterError("laplace_limit: requires a > 0, eta > 0");
  if (!(rho > 0.0)) throw ParameterError("laplace_limit: requires rho > 0");
  require_x_positive(x, "laplace_limit_trig");

  const double ae = a * eta;
  const double w = c * c * x * x / (4.0 * ae * ae);
  switch (kind) {
    case TrigKind::cos:
    case TrigKind::cosh: {
      const sf::WrightSeriesSpec spec{{{rho, 2.0}}, {{0.5, 1.0}}};
      const double log_scale =
          0.5 * std::log(kPi) - rho * std::log(ae) + (rho + eta) * std::log(x);
      return sf::wright_eval_scaled(spec, (kind == TrigKind::cos) ? -w : w,
                                    log_scale, tol);
    }
    case TrigKind::sin:
    case TrigKind::sinh: {
      const sf::WrightSeriesSpec spec{{{rho + 1.0, 2.0}}, {{1.5, 1.0}}};
      const double log_scale = 0.5 * std::log(kPi) - std::log(2.0) -
                               (rho + 1.0) * std::log(ae) +
                               (rho + eta + 1.0) * std::log(x);
      return c * sf::wright_eval_scaled(spec, (kind == TrigKind::sin) ? -w : w,
                                        log_scale, tol);
    }
  }
  throw ParameterError("laplace_limit_trig: unknown kind");
}

double rl_cos(double eta, double x) {
  if (!(eta > 0.0)) throw ParameterError("rl_cos: requires eta > 0");
  if (x < 0.0) throw DomainError("rl_cos: requires x >= 0");
  if (x == 0.0) return 0.0;
  return std::pow(x, eta) * sf::mittag_leffler(2.0, 1.0 + eta, -x * x);
}

}  // namespace pathent::pathway
