#pragma once

namespace pathent::kinetics {

// Fractional relaxation with a gamma-distributed rate. omega is tied to the
// pathway parameters through omega^{-nu} = b(alpha-1).
struct KineticsParams {
  double n0 = 1.0;      // initial amount
  double c = 1.0;       // rate (conditional laws)
  double nu = 1.0;      // fractional order, in (0,1]
  double mu = 1.0;      // gamma shape / power-law exponent
  double b = 1.0;
  double alpha_k = 2.0; // pathway parameter, > 1

  // gamma is pinned by gamma + 1 = 1/(alpha-1), the exponent that makes the
  // rate mixture close.
  double gamma_k() const { return (2.0 - alpha_k) / (alpha_k - 1.0); }
  double omega() const;
  void validate() const;  // throws ParameterError
};

// N0·e^{-c t}.
double exponential_decay(double n0, double c, double t);

// Mittag-Leffler relaxation N0·E_nu(-(c t)^nu), the fractional-order solution.
double ml_decay(double n0, double c, double nu, double t);

// Conditional density N(t|c) = N0·t^{mu-1}·E^{gamma+1}_{nu,mu}(-(c t)^nu).
// The published form carries second index nu; only the mu form reproduces the
// rate-mixture identity, so that is the default. The literal variant is kept
// for comparison.
double conditional_density(const KineticsParams& params, double c_rate,
                           double t);
double conditional_density_literal(const KineticsParams& params, double c_rate,
                                   double t);

// Gamma rate density g(c) = omega^mu c^{mu-1} e^{-omega c} / Gamma(mu).
double gamma_rate_density(double omega, double mu, double c_rate);

// Unconditional density N(t) = N0/Gamma(mu) · t^{mu-1} ·
// [1 + b(alpha-1) t^nu]^{-1/(alpha-1)}.
double unconditional_density(const KineticsParams& params, double t);

// ∫_0^inf N(t|c) g(c) dc by adaptive quadrature; equals
// unconditional_density(t) when the corrected conditional form is used.
double mixture_integral(const KineticsParams& params, double t,
                        double tol = 1e-8);

}  // namespace pathent::kinetics
