#pragma once

// Test-only reference evaluations, independent of the library paths they
// check: naive long-double series summation (no truncation logic, fixed term
// count) and thin quadrature helpers.

#include <cmath>
#include <vector>

namespace oracle {

struct Pair {
  long double offset;
  long double step;
};

// Naive pPsi_q partial sum with n_terms terms in extended precision.
inline long double wright_series(const std::vector<Pair>& upper,
                                 const std::vector<Pair>& lower, long double z,
                                 int n_terms = 200) {
  long double sum = 0.0L;
  for (int k = 0; k < n_terms; ++k) {
    long double lg = -std::lgamma(static_cast<long double>(k) + 1.0L);
    for (const auto& g : upper) lg += std::lgamma(g.offset + g.step * k);
    for (const auto& g : lower) lg -= std::lgamma(g.offset + g.step * k);
    long double term = std::exp(lg);
    if (z < 0.0L && (k & 1)) term = -term;
    term *= std::pow(std::fabs(z), static_cast<long double>(k));
    sum += term;
  }
  return sum;
}

inline long double mittag_leffler(long double alpha, long double beta,
                                  long double z, int n_terms = 200) {
  return wright_series({{1.0L, 1.0L}}, {{beta, alpha}}, z, n_terms);
}

inline long double prabhakar(long double g, long double nu, long double mu,
                             long double z, int n_terms = 200) {
  return wright_series({{g, 1.0L}}, {{mu, nu}}, z, n_terms) /
         std::tgamma(g);
}

inline long double bessel_w(long double p, long double b, long double c,
                            long double z, int n_terms = 200) {
  const long double kappa = p + (b + 1.0L) / 2.0L;
  return std::pow(z / 2.0L, p) *
         wright_series({}, {{kappa, 1.0L}}, -c * z * z / 4.0L, n_terms);
}

}  // namespace oracle
