#pragma once

#include <functional>

#include "pathent/special_functions.hpp"

namespace pathent::pathway {

// Kernel parameters of the pathway integral
//   (P f)(x) = x^eta ∫_0^{x/(a(1-alpha))} [1 - a(1-alpha)t/x]^{eta/(1-alpha)} f(t) dt,
// defined for alpha < 1; alpha = 0, a = 1 recovers Gamma(eta+1)·I^{eta+1}
// (Riemann-Liouville) and alpha -> 1- the Laplace transform x^eta·L_f(a·eta/x).
struct PathwayParams {
  double eta = 1.0;
  double alpha_pw = 0.0;
  double a = 1.0;

  double z_exp() const { return eta / (1.0 - alpha_pw); }
  double upper_limit(double x) const { return x / (a * (1.0 - alpha_pw)); }
  void validate() const;  // throws ParameterError
};

enum class ImageForm { closed_wright, quadrature, laplace_limit };

struct OperatorImage {
  double value = 0.0;
  ImageForm form = ImageForm::closed_wright;
};

// The published operator definition carries prefactor x^{eta-1} and kernel
// exponent eta/(1-alpha) - 1, which is inconsistent with its own power-law
// image; `corrected` (the default everywhere) is the variant consistent with
// that image and with the alpha -> 1 Laplace limit. `printed` is kept only so
// the discrepancy can be demonstrated.
enum class KernelVariant { corrected, printed };

// Adaptive quadrature of the operator applied to an arbitrary integrand; the
// substitution u = a(1-alpha)t/x maps onto the fixed interval [0,1].
double pathway_integral_numeric(const std::function<double(double)>& f,
                                const PathwayParams& params, double x,
                                double tol = 1e-9,
                                KernelVariant variant = KernelVariant::corrected);

// Image of t^{rho-1}:
//   Gamma(rho)Gamma(1+z)/Gamma(z+rho+1) · x^{eta+rho}/[a(1-alpha)]^rho.
double pathway_power(const PathwayParams& params, double rho, double x);

// Image of t^{rho-1} W_{p,b,c}(t) as a 1Psi2 series (requires rho + p > 0).
OperatorImage pathway_bessel(const PathwayParams& params, double rho,
                             const sf::BesselParams& bp, double x,
                             double tol = 1e-12);

enum class TrigKind { cos, cosh, sin, sinh };

// Images of t^{rho-1}·cos(ct) / cosh / sin / sinh as 1Psi2 series.
OperatorImage pathway_trig(TrigKind kind, const PathwayParams& params,
                           double rho, double c, double x, double tol = 1e-12);

// alpha -> 1- limits (Laplace-transform images). The 1Psi1 series involved
// sit on the convergence boundary and require |c|x < a·eta (bessel:
// |c|x^2 < (a·eta)^2); outside that disc a DomainError is thrown.
double laplace_limit_power(double a, double eta, double rho, double x);
double laplace_limit_bessel(double a, double eta, double rho,
                            const sf::BesselParams& bp, double x,
                            double tol = 1e-12);
double laplace_limit_trig(TrigKind kind, double a, double eta, double rho,
                          double c, double x, double tol = 1e-12);

// Riemann-Liouville image (I^eta cos)(x) = x^eta · E_{2,1+eta}(-x^2);
// eta = 1 gives sin(x).
double rl_cos(double eta, double x);

}  // namespace pathent::pathway
