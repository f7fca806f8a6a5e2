#include "pathent/entropy.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "pathent/errors.hpp"
#include "pathent/quadrature.hpp"

namespace pathent::entropy {

namespace {

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

void check_alpha(DiscreteKind kind, double alpha) {
  switch (kind) {
    case DiscreteKind::shannon:
      return;
    case DiscreteKind::renyi:
    case DiscreteKind::havrda_charvat:
    case DiscreteKind::tsallis:
      if (!(alpha > 0.0) || alpha == 1.0)
        throw ParameterError("discrete_entropy: requires alpha > 0, alpha != 1");
      return;
    case DiscreteKind::mathai:
    case DiscreteKind::mathai_extensive:
      if (!(alpha < 2.0) || alpha == 1.0)
        throw ParameterError("discrete_entropy: requires alpha < 2, alpha != 1");
      return;
  }
}

// Σ p_i^e skipping zero entries.
double power_sum(const std::vector<double>& p, double e) {
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s += std::pow(v, e);
  return s;
}

double neg_p_log_p(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s -= v * std::log(v);
  return s;
}

}  // namespace

DiscreteDistribution DiscreteDistribution::from(std::vector<double> probs) {
  DiscreteDistribution d{std::move(probs)};
  d.validate();
  return d;
}

void DiscreteDistribution::validate() const {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) throw DataError("distribution: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw DataError("distribution: probabilities must sum to 1 (1e-12)");
}

double SampledPdf::mass() const {
  double s = 0.0;
  for (double v : f) s += v;
  return s * dx;
}

void SampledPdf::validate(double tol) const {
  if (!(dx > 0.0)) throw DataError("pdf: grid spacing must be positive");
  for (double v : f)
    if (v < 0.0) throw DataError("pdf: negative density value");
  if (std::abs(mass() - 1.0) > tol)
    throw DataError("pdf: density does not integrate to 1 on its grid");
}

double discrete_entropy(DiscreteKind kind, double alpha,
                        const DiscreteDistribution& P) {
  P.validate();
  check_alpha(kind, alpha);
  switch (kind) {
    case DiscreteKind::shannon:
      return neg_p_log_p(P.p);
    case DiscreteKind::renyi:
      return std::log(power_sum(P.p, alpha)) / (1.0 - alpha);
    case DiscreteKind::havrda_charvat:
      return (power_sum(P.p, alpha) - 1.0) / (std::exp2(1.0 - alpha) - 1.0);
    case DiscreteKind::tsallis:
      return (1.0 - power_sum(P.p, alpha)) / (alpha - 1.0);
    case DiscreteKind::mathai:
      return (power_sum(P.p, 2.0 - alpha) - 1.0) / (alpha - 1.0);
    case DiscreteKind::mathai_extensive:
      return std::log(power_sum(P.p, 2.0 - alpha)) / (alpha - 1.0);
  }
  throw ParameterError("discrete_entropy: unknown kind");
}

double continuous_entropy(ContinuousKind kind, double alpha,
                          const SampledPdf& pdf) {
  pdf.validate();
  switch (kind) {
    case ContinuousKind::shannon: {
      double s = 0.0;
      for (double v : pdf.f)
        if (v > 0.0) s -= v * std::log(v);
      return s * pdf.dx;
    }
    case ContinuousKind::tsallis: {
      if (!(alpha > 0.0) || alpha == 1.0)
        throw ParameterError("continuous_entropy: tsallis requires alpha > 0, alpha != 1");
      double s = 0.0;
      for (double v : pdf.f)
        if (v > 0.0) s += std::pow(v, alpha);
      return (1.0 - s * pdf.dx) / (alpha - 1.0);
    }
    case ContinuousKind::mathai: {
      if (!(alpha < 2.0) || alpha == 1.0)
        throw ParameterError("continuous_entropy: mathai requires alpha < 2, alpha != 1");
      double s = 0.0;
      for (double v : pdf.f)
        if (v > 0.0) s += std::pow(v, 2.0 - alpha);
      return (s * pdf.dx - 1.0) / (alpha - 1.0);
    }
  }
  throw ParameterError("continuous_entropy: unknown kind");
}

double gaussian_entropy_closed(ContinuousKind kind, double alpha, double t) {
  if (!(t > 0.0)) throw DomainError("gaussian_entropy_closed: requires t > 0");
  constexpr double pi = 3.14159265358979323846;
  if (alpha == 1.0 || kind == ContinuousKind::shannon)
    return 0.5 + 0.5 * std::log(pi * t);
  switch (kind) {
    case ContinuousKind::tsallis:
      if (!(alpha > 0.0))
        throw ParameterError("gaussian_entropy_closed: tsallis requires alpha > 0");
      return (1.0 - std::pow(pi * t, (1.0 - alpha) / 2.0) / std::sqrt(alpha)) /
             (alpha - 1.0);
    case ContinuousKind::mathai:
      if (!(alpha < 2.0))
        throw ParameterError("gaussian_entropy_closed: mathai requires alpha < 2");
      return (std::pow(pi * t, (alpha - 1.0) / 2.0) / std::sqrt(2.0 - alpha) -
              1.0) /
             (alpha - 1.0);
    default:
      break;
  }
  throw ParameterError("gaussian_entropy_closed: unknown kind");
}

double mathai_expansion(const SampledPdf& pdf, double epsilon) {
  if (std::abs(epsilon) > 0.2)
    throw ParameterError("mathai_expansion: requires |epsilon| <= 0.2");
  pdf.validate();
  double s1 = 0.0;
  double s2 = 0.0;
  for (double v : pdf.f) {
    if (v <= 0.0) continue;
    const double lv = std::log(v);
    s1 -= v * lv;
    s2 += v * lv * lv;
  }
  return s1 * pdf.dx + 0.5 * epsilon * s2 * pdf.dx;
}

double PathwayDensity::support_upper() const {
  return std::pow(a * (1.0 - alpha_pw), -1.0 / delta_exp);
}

double PathwayDensity::operator()(double x) const {
  if (x < 0.0 || x > support_upper()) return 0.0;
  const double bracket = 1.0 - a * (1.0 - alpha_pw) * std::pow(x, delta_exp);
  if (bracket <= 0.0) return 0.0;
  const double xp = (rho == 0.0) ? 1.0 : std::pow(x, rho);
  return c1 * xp * std::pow(bracket, 1.0 / (1.0 - alpha_pw));
}

PathwayDensity pathway_density_make(double rho, double a, double alpha_pw,
                                    double delta_exp) {
  if (!(alpha_pw < 1.0))
    throw ParameterError(
        "pathway_density_make: closed-form branch requires alpha < 1");
  if (!(rho > -1.0) || !(a > 0.0) || !(delta_exp > 0.0))
    throw ParameterError(
        "pathway_density_make: requires rho > -1, a > 0, delta > 0");
  // 1/norm with norm = (a(1-alpha))^-(rho+1)/delta · B((rho+1)/delta,
  // (2-alpha)/(1-alpha)) / delta.
  const double bx = (rho + 1.0) / delta_exp;
  const double by = (2.0 - alpha_pw) / (1.0 - alpha_pw);
  const double c1 = delta_exp *
                    std::pow(a * (1.0 - alpha_pw), bx) /
                    std::exp(log_beta(bx, by));
  return PathwayDensity{rho, a, alpha_pw, delta_exp, c1};
}

double pathway_kernel(double rho, double a, double alpha_pw, double delta_exp,
                      double x) {
  if (x < 0.0) return 0.0;
  if (x == 0.0) return rho == 0.0 ? 1.0 : (rho > 0.0 ? 0.0 : INFINITY);
  const double xp = std::pow(x, rho);
  if (alpha_pw == 1.0) return xp * std::exp(-a * std::pow(x, delta_exp));
  const double bracket = 1.0 - a * (1.0 - alpha_pw) * std::pow(x, delta_exp);
  if (bracket <= 0.0) return 0.0;
  return xp * std::pow(bracket, 1.0 / (1.0 - alpha_pw));
}

double pathway_kernel_norm(double rho, double a, double alpha_pw,
                           double delta_exp, double tol) {
  if (!(rho > -1.0) || !(a > 0.0) || !(delta_exp > 0.0))
    throw ParameterError(
        "pathway_kernel_norm: requires rho > -1, a > 0, delta > 0");
  if (alpha_pw > 1.0 && !(rho + 1.0 < delta_exp / (alpha_pw - 1.0)))
    throw ParameterError(
        "pathway_kernel_norm: type-2 tail is not integrable for these "
        "parameters");
  auto kern = [&](double x) {
    return pathway_kernel(rho, a, alpha_pw, delta_exp, x);
  };
  if (alpha_pw < 1.0) {
    const double top = std::pow(a * (1.0 - alpha_pw), -1.0 / delta_exp);
    return quad::integrate(kern, 0.0, top, tol);
  }
  // Semi-infinite support: map (0, inf) through x = u/(1-u).
  return quad::integrate(
      [&](double u) {
        const double x = u / (1.0 - u);
        return kern(x) / ((1.0 - u) * (1.0 - u));
      },
      0.0, 1.0, tol);
}

}  // namespace pathent::entropy
