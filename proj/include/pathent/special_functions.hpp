#pragma once

#include <vector>

namespace pathent::sf {

// One gamma factor Γ(offset + step·k) of a generalized Wright series.
struct GammaFactor {
  double offset = 1.0;
  double step = 1.0;
};

// A pΨq series  Σ_k  Π_i Γ(a_i+α_i k) / Π_j Γ(b_j+β_j k) · z^k / k!.
//
// Evaluation is restricted to real parameters whose gamma arguments stay
// positive along the whole series (step > 0 and offset > 0), so every
// coefficient is positive and finite.
struct WrightSeriesSpec {
  std::vector<GammaFactor> upper;  // (a_i, alpha_i)
  std::vector<GammaFactor> lower;  // (b_j, beta_j)

  // Σβ_j − Σα_i. The series is entire for delta() > −1; for delta() == −1 it
  // converges on |z| < exp(log_radius()) only.
  double delta() const;
  double log_radius() const;

  void validate() const;  // throws ParameterError
};

// Generalized Bessel series parameters; kappa() must be positive.
struct BesselParams {
  double p = 0.0;  // order
  double b = 1.0;
  double c = 1.0;

  double kappa() const { return p + (b + 1.0) / 2.0; }
  void validate() const;
};

inline constexpr int kSeriesMaxTerms = 500;
// |z| cap for the Mittag-Leffler family; the asymptotic regime beyond it is
// out of scope.
inline constexpr double kSeriesArgMax = 50.0;

// ln Γ(x) for x > 0.
double log_gamma(double x);

// Truncated sum of the series defined by spec. The partial sum stops once
// |term_k| < tol·(1+|sum|) holds for three consecutive k, with a hard cap of
// kSeriesMaxTerms terms (NumericError beyond it).
double wright_eval(const WrightSeriesSpec& spec, double z, double tol = 1e-12);

// Same series with every term multiplied by exp(log_scale). Large closed-form
// prefactors (e.g. Γ(1+η/(1−α)) near α→1) stay inside the per-term exponent
// instead of overflowing a separate factor.
double wright_eval_scaled(const WrightSeriesSpec& spec, double z,
                          double log_scale, double tol = 1e-12);

// Two-parameter Mittag-Leffler E_{alpha,beta}(z) = Σ z^k/Γ(beta+alpha·k),
// series evaluation on |z| <= kSeriesArgMax.
double mittag_leffler(double alpha, double beta, double z, double tol = 1e-12);

// Three-parameter (Prabhakar) function Σ (g)_k z^k / (k! Γ(mu+nu·k)) with the
// rising factorial (g)_k.
double prabhakar(double gamma_p, double nu, double mu, double z,
                 double tol = 1e-12);

// Generalized Bessel function of the first kind,
//   W_{p,b,c}(z) = Σ_k (−c)^k / (k! Γ(kappa+k)) · (z/2)^{p+2k}.
// Negative z requires integer p (real branch).
double bessel_w(const BesselParams& params, double z, double tol = 1e-12);

}  // namespace pathent::sf
