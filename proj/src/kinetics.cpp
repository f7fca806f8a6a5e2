#include "pathent/kinetics.hpp"

#include <algorithm>
#include <cmath>

#include "pathent/errors.hpp"
#include "pathent/quadrature.hpp"
#include "pathent/special_functions.hpp"

namespace pathent::kinetics {

double KineticsParams::omega() const {
  return std::pow(b * (alpha_k - 1.0), -1.0 / nu);
}

void KineticsParams::validate() const {
  if (!(n0 > 0.0)) throw ParameterError("kinetics: requires N0 > 0");
  if (!(c > 0.0)) throw ParameterError("kinetics: requires c > 0");
  if (!(nu > 0.0) || nu > 1.0)
    throw ParameterError("kinetics: requires nu in (0, 1]");
  if (!(mu > 0.0)) throw ParameterError("kinetics: requires mu > 0");
  if (!(b > 0.0)) throw ParameterError("kinetics: requires b > 0");
  if (!(alpha_k > 1.0)) throw ParameterError("kinetics: requires alpha > 1");
}

double exponential_decay(double n0, double c, double t) {
  if (t < 0.0) throw DomainError("exponential_decay: requires t >= 0");
  return n0 * std::exp(-c * t);
}

double ml_decay(double n0, double c, double nu, double t) {
  if (t < 0.0) throw DomainError("ml_decay: requires t >= 0");
  if (!(nu > 0.0) || nu > 1.0)
    throw ParameterError("ml_decay: requires nu in (0, 1]");
  if (t == 0.0) return n0;
  return n0 * sf::mittag_leffler(nu, 1.0, -std::pow(c * t, nu));
}

namespace {

double conditional_impl(const KineticsParams& params, double c_rate, double t,
                        double second_index) {
  params.validate();
  if (!(t > 0.0)) throw DomainError("conditional_density: requires t > 0");
  const double g1 = params.gamma_k() + 1.0;
  const double z = -std::pow(c_rate * t, params.nu);
  return params.n0 * std::pow(t, params.mu - 1.0) *
         sf::prabhakar(g1, params.nu, second_index, z);
}

}  // namespace

double conditional_density(const KineticsParams& params, double c_rate,
                           double t) {
  return conditional_impl(params, c_rate, t, params.mu);
}

double conditional_density_literal(const KineticsParams& params, double c_rate,
                                   double t) {
  return conditional_impl(params, c_rate, t, params.nu);
}

double gamma_rate_density(double omega, double mu, double c_rate) {
  if (!(omega > 0.0) || !(mu > 0.0))
    throw ParameterError("gamma_rate_density: requires omega > 0, mu > 0");
  if (!(c_rate > 0.0))
    throw DomainError("gamma_rate_density: requires c > 0");
  return std::exp(mu * std::log(omega) + (mu - 1.0) * std::log(c_rate) -
                  omega * c_rate - std::lgamma(mu));
}

double unconditional_density(const KineticsParams& params, double t) {
  params.validate();
  if (!(t > 0.0)) throw DomainError("unconditional_density: requires t > 0");
  const double body =
      1.0 + params.b * (params.alpha_k - 1.0) * std::pow(t, params.nu);
  return params.n0 / std::tgamma(params.mu) * std::pow(t, params.mu - 1.0) *
         std::pow(body, -1.0 / (params.alpha_k - 1.0));
}

double mixture_integral(const KineticsParams& params, double t, double tol) {
  params.validate();
  if (!(t > 0.0)) throw DomainError("mixture_integral: requires t > 0");

  // The c-integration is capped twice: at the |z| <= 50 evaluation window of
  // the Prabhakar series, and at c·t <= 30 beyond which the alternating
  // series loses the identity's 1e-6 scale to round-off. The gamma density
  // tail beyond the cap must be negligible for the quadrature to be
  // meaningful.
  const double omega = params.omega();
  const double c_cap =
      std::min(0.999 * std::pow(sf::kSeriesArgMax, 1.0 / params.nu) / t,
               30.0 / t);
  // Upper-incomplete-gamma bound on the mass of g beyond the cap,
  // Q(mu, x) <= e^{-x} x^{mu-1}/Gamma(mu) · x/(x-mu+1) for x > mu - 1.
  const double x_cap = omega * c_cap;
  const double tail_bound =
      (x_cap > params.mu)
          ? std::exp(-x_cap + (params.mu - 1.0) * std::log(x_cap) -
                     std::lgamma(params.mu)) *
                (x_cap / (x_cap - params.mu + 1.0))
          : 1.0;
  if (!(tail_bound < 1e-9))
    throw NumericError(
        "mixture_integral: gamma tail beyond the series-evaluation cap is "
        "not negligible for these parameters");

  auto integrand = [&](double u) {
    const double c_rate = u / (1.0 - u);
    if (c_rate <= 0.0 || c_rate >= c_cap) return 0.0;
    return conditional_density(params, c_rate, t) *
           gamma_rate_density(omega, params.mu, c_rate) /
           ((1.0 - u) * (1.0 - u));
  };
  return quad::integrate(integrand, 0.0, 1.0, tol);
}

}  // namespace pathent::kinetics
