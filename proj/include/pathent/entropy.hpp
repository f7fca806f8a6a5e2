#pragma once

#include <cstddef>
#include <vector>

namespace pathent::entropy {

// Probability vector; components nonnegative, summing to 1 within 1e-12.
struct DiscreteDistribution {
  std::vector<double> p;

  static DiscreteDistribution from(std::vector<double> probs);
  void validate() const;  // throws DataError
};

// Density sampled at the midpoints of a uniform grid: bin i covers
// [x0 + i·dx, x0 + (i+1)·dx] and carries density f[i].
struct SampledPdf {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> f;
  bool degenerate = false;  // set by histogram estimation on constant input

  double center(std::size_t i) const { return x0 + (static_cast<double>(i) + 0.5) * dx; }
  double mass() const;  // Σ f_i·dx
  void validate(double tol = 1e-6) const;
};

enum class DiscreteKind {
  shannon,
  renyi,
  havrda_charvat,
  tsallis,
  mathai,
  mathai_extensive,
};

enum class ContinuousKind { shannon, tsallis, mathai };

// Entropy of a probability vector. alpha is ignored for shannon; the
// parametric kinds require alpha != 1, with alpha > 0 for renyi /
// havrda_charvat / tsallis and alpha < 2 for the mathai kinds. Zero entries
// contribute nothing.
double discrete_entropy(DiscreteKind kind, double alpha,
                        const DiscreteDistribution& P);

// Midpoint-rule evaluation of the continuous entropy functionals on a
// sampled density.
double continuous_entropy(ContinuousKind kind, double alpha,
                          const SampledPdf& pdf);

// Closed forms for the spreading Gaussian p(x,t) = (pi t)^{-1/2} e^{-x^2/t}:
// tsallis and mathai branches, with the shared log branch at alpha == 1.
double gaussian_entropy_closed(ContinuousKind kind, double alpha, double t);

// Two-term small-deviation expansion of the mathai functional around the
// Shannon point: -∫p ln p + (eps/2)∫p (ln p)^2, |eps| <= 0.2.
double mathai_expansion(const SampledPdf& pdf, double epsilon);

// Entropy-maximizing density c1·x^rho·[1 - a(1-alpha)x^delta]^{1/(1-alpha)}
// on [0, (a(1-alpha))^{-1/delta}] (alpha < 1 branch, closed-form constant).
struct PathwayDensity {
  double rho = 0.0;
  double a = 1.0;
  double alpha_pw = 0.0;
  double delta_exp = 1.0;
  double c1 = 1.0;

  double support_upper() const;
  double operator()(double x) const;  // 0 outside the support
};

PathwayDensity pathway_density_make(double rho, double a, double alpha_pw,
                                    double delta_exp);

// Unnormalized kernel x^rho·[1 - a(1-alpha)x^delta]^{1/(1-alpha)} for any
// pathway branch (the alpha -> 1 limit is x^rho·e^{-a x^delta}); quadrature
// normalization constant for the alpha >= 1 branches, whose support is
// [0, inf).
double pathway_kernel(double rho, double a, double alpha_pw, double delta_exp,
                      double x);
double pathway_kernel_norm(double rho, double a, double alpha_pw,
                           double delta_exp, double tol = 1e-10);

}  // namespace pathent::entropy
